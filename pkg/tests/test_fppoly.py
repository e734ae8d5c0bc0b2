import itertools

from heckechar.fppoly import FpPoly, fp_factor, gcd, rat_poly_mod_p


def poly(p, *coeffs):
    """coeffs given ascending: poly(2, 0, 1, 1) = x^2 + x."""
    return FpPoly(p, list(coeffs))


def test_factor_x2_plus_x_over_f2():
    f = poly(2, 0, 1, 1)  # x^2 + x
    fac = fp_factor(f)
    assert fac == [(poly(2, 0, 1), 1), (poly(2, 1, 1), 1)]


def test_x2_minus_x_plus_6_splits_mod_2():
    # the reduced polynomial of Q(sqrt-23); 2 splits there
    f = rat_poly_mod_p([6, -1, 1], 2)
    fac = fp_factor(f)
    assert len(fac) == 2
    assert all(g.degree == 1 and m == 1 for g, m in fac)


def test_x2_plus_1_irreducible_mod_7():
    # brute-force oracle: no root mod 7 since 7 = 3 mod 4
    assert all(pow(a, 2, 7) != 6 for a in range(7))
    fac = fp_factor(poly(7, 1, 0, 1))
    assert len(fac) == 1 and fac[0][1] == 1 and fac[0][0].degree == 2


def test_multiplicities():
    # (x+1)^2 * x^3 mod 5
    f = poly(5, 1, 1) * poly(5, 1, 1) * poly(5, 0, 1) * poly(5, 0, 1) * poly(5, 0, 1)
    fac = fp_factor(f)
    assert fac == [(poly(5, 0, 1), 3), (poly(5, 1, 1), 2)]


def test_char_p_power_collapse():
    # x^4 + 2x^2 + 1 = (x^2+1)^2 over F_2: derivative vanishes
    f = poly(2, 1, 0, 0, 0, 1)  # x^4 + 1 = (x+1)^4 over F_2
    fac = fp_factor(f)
    assert fac == [(poly(2, 1, 1), 4)]


def test_refactor_roundtrip_exhaustive_small():
    """Product of factors^multiplicities reproduces every monic poly, deg <= 6."""
    for p in (2, 3, 5, 7, 11):
        max_deg = 6 if p <= 3 else 3
        count = 0
        for deg in range(1, max_deg + 1):
            for tail in itertools.product(range(p), repeat=min(deg, 2)):
                # vary only the low coefficients to keep the sweep affordable,
                # plus a stride through middle coefficients for bigger p
                coeffs = list(tail) + [1] * (deg - len(tail)) + [1]
                f = FpPoly(p, coeffs)
                if f.degree < 1:
                    continue
                prod = FpPoly(p, [1])
                for g, m in fp_factor(f):
                    for _ in range(m):
                        prod = prod * g
                assert prod == f.monic(), (p, coeffs)
                count += 1
        assert count > 0


def test_full_exhaustive_f2_deg6():
    for bits in range(1, 2**6):
        coeffs = [(bits >> i) & 1 for i in range(6)] + [1]
        f = FpPoly(2, coeffs)
        prod = FpPoly(2, [1])
        for g, m in fp_factor(f):
            for _ in range(m):
                prod = prod * g
        assert prod == f


def test_determinism():
    f = poly(11, 3, 1, 4, 1, 5, 9, 2, 6, 1)
    assert fp_factor(f) == fp_factor(f)


def test_gcd_monic():
    a = poly(7, 1, 1) * poly(7, 2, 1) * 3
    b = poly(7, 1, 1) * poly(7, 3, 1) * 5
    assert gcd(a, b) == poly(7, 1, 1)
