from fractions import Fraction

import pytest
from mpmath import mp

from heckechar.rpoly import RatPoly, complex_roots, gcd


def P(*coeffs):
    """ascending coefficients"""
    return RatPoly(list(coeffs))


def frac(s):
    return Fraction(s)


def test_roots_x2_plus_23():
    roots = complex_roots(P(23, 0, 1), target_bits=80)
    assert len(roots) == 1  # one conjugate pair, representative im > 0
    r = roots[0]
    assert r.re.contains(0)
    mp.prec = 120
    golden = Fraction(mp.nstr(mp.sqrt(23), 30))
    assert abs(r.im.mid - golden) < Fraction(1, 2**60)


def test_roots_x2_minus_5():
    roots = complex_roots(P(-5, 0, 1), target_bits=80)
    assert len(roots) == 2
    mp.prec = 120
    s5 = Fraction(mp.nstr(mp.sqrt(5), 30))
    assert abs(roots[0].re.mid + s5) < Fraction(1, 2**60)
    assert abs(roots[1].re.mid - s5) < Fraction(1, 2**60)
    assert roots[0].im.is_exact_zero() and roots[1].im.is_exact_zero()


def test_roots_casus_irreducibilis():
    # x^3 - 3x + 1: all real, trigonometric oracle 2cos(2pi k/9 shifted)
    roots = complex_roots(P(1, -3, 0, 1), target_bits=80)
    assert len(roots) == 3
    mp.prec = 120
    oracle = sorted(2 * mp.cos(mp.pi * k / 9) for k in (2, 4, 8))
    for r, o in zip(roots, oracle):
        assert abs(r.re.mid - Fraction(mp.nstr(o, 30))) < Fraction(1, 2**60)


def test_roots_quartic_mixed_signature():
    # x^4 - 5: two real, one conjugate pair
    roots = complex_roots(P(-5, 0, 0, 0, 1), target_bits=80)
    assert len(roots) == 3
    assert roots[0].im.is_exact_zero() and roots[1].im.is_exact_zero()
    assert roots[2].im.lower > 0
    assert roots[2].re.contains(0)


def test_roots_reject_non_squarefree():
    with pytest.raises(ValueError):
        complex_roots(P(1, 2, 1), target_bits=30)  # (x+1)^2


def test_product_reexpands():
    poly = P(-3, 1, 0, 2, 1)
    roots = complex_roots(poly, target_bits=100)
    # multiply (x - root) over all roots incl. conjugates, in ball arithmetic
    from heckechar.ball import ComplexBall, workprec

    with workprec(160):
        coeffs = [ComplexBall(1)]
        full = []
        for r in roots:
            full.append(r)
            if not r.im.is_exact_zero():
                full.append(r.conj())
        for r in full:
            nxt = [ComplexBall(0)] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i + 1] = nxt[i + 1] + c
                nxt[i] = nxt[i] - c * r
            coeffs = nxt
    for ball_c, exact_c in zip(coeffs, poly.monic().c):
        assert ball_c.re.contains(exact_c)
        assert ball_c.im.contains(0)


def test_resultant_discriminant():
    # disc(x^2 + bx + c) = b^2 - 4c
    assert P(3, 2, 1).discriminant() == Fraction(4 - 12)
    # disc(x^3 + px + q) = -4p^3 - 27q^2
    assert P(1, -3, 0, 1).discriminant() == Fraction(-4 * (-27) - 27)


def test_gcd():
    a = P(1, 1) * P(2, 1)
    b = P(1, 1) * P(5, 1)
    assert gcd(a, b) == P(1, 1)
