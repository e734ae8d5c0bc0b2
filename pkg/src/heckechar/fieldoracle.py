"""The strongly computable field interface, with two backends.

A FieldData bundles what the character-group construction needs: a set S of
primes generating the class group, S-unit generators, torsion units, a
principalization oracle, and residue-group presentations.  The builtin
backend covers quadratic fields by brute force (reduced binary quadratic
forms for imaginary discriminants, continued fractions for the fundamental
unit, rigorous generator search for principality); arbitrary fields are
ingested from JSON documents (schema "gcfield-1") whose invariants are
re-verified on load, with class-group generation explicitly trusted.
"""

import math
from fractions import Fraction
from math import gcd as igcd

from .ball import workprec
from .errors import (
    BoundExceeded,
    InvariantViolation,
    OracleIncomplete,
    SchemaError,
)
from .numfield import (
    Ideal,
    Modulus,
    NumberField,
    factor_int,
    is_prime,
    torsion_units,
)
from .residues import DEFAULT_ENUM_BOUND, ResidueGroup
from .zlinalg import det_int, hnf_basis_from_cols

QUADRATIC_DISC_BOUND = 10**6


class FieldData:
    """A strongly computable field: everything the group construction consumes."""

    def __init__(self, field, S, s_units, torsion, provenance,
                 class_dlogs=None, poly_factors=None, h=None,
                 enum_bound=DEFAULT_ENUM_BOUND, backend=None):
        self.field = field
        self.S = list(S)
        self.s_units = list(s_units)
        self.torsion = torsion
        self.provenance = provenance
        self.class_dlogs = class_dlogs
        self.poly_factors = poly_factors
        self.h = h
        self.enum_bound = enum_bound
        self._backend = backend
        self._residue_cache = {}
        self.trusted_assumptions = []
        if provenance == "ingested":
            self.trusted_assumptions.append("class group generated by S")

    def principalize(self, ideal):
        """ideal = (alpha) * prod_{p in S} p^(a_p); returns (alpha, a)."""
        return self._backend.principalize(self, ideal)

    def residue_group(self, modulus):
        key = (modulus.finite, modulus.infinite)
        if key not in self._residue_cache:
            self._residue_cache[key] = ResidueGroup(modulus, bound=self.enum_bound)
        return self._residue_cache[key]

    def zeta(self):
        return self.torsion[0]

    def torsion_order(self):
        return self.torsion[1]


# ---------------------------------------------------------------------------
# generic generator search (shortest-vector style, exact verification)
# ---------------------------------------------------------------------------


def find_generator(ideal, scale_limit=2**12):
    """An element alpha with (alpha) = ideal, by bounded lattice enumeration.

    Enumerates ideal elements of T2-norm up to c * n * Nm^(2/n), doubling c;
    every candidate is verified exactly, so a hit is rigorous.  Returns None
    when the budget is exhausted without a hit (for imaginary quadratic
    fields c = 2 already exceeds the Minkowski-type bound, so None there
    rigorously certifies non-principality).
    """
    field = ideal.field
    if ideal.den != 1:
        inner = find_generator(Ideal(field, ideal.hnf), scale_limit)
        return inner.scale(Fraction(1, ideal.den)) if inner is not None else None
    n = field.n
    nrm = int(ideal.norm())
    basis = ideal.basis_elems()
    prec = 96
    with workprec(prec):
        embeds = [[field.embed(b, i, prec) for i in range(field.r1 + field.r2)]
                  for b in basis]
        gram = [[0.0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                s = 0.0
                for k in range(field.r1 + field.r2):
                    mult = 1 if k < field.r1 else 2
                    zi, zj = embeds[i][k], embeds[j][k]
                    s += mult * float((zi.re * zj.re + zi.im * zj.im).mid)
                gram[i][j] = s
    c = 2.0
    while c <= scale_limit:
        bound = c * n * nrm ** (2.0 / n)
        hit = _enumerate_with_norm(field, basis, gram, bound, nrm)
        if hit is not None:
            return hit
        c *= 4
    return None


def _enumerate_with_norm(field, basis, gram, bound, target_norm):
    n = len(basis)
    L = [[0.0] * n for _ in range(n)]
    D = [0.0] * n
    for i in range(n):
        D[i] = gram[i][i] - sum(L[i][k] ** 2 * D[k] for k in range(i))
        if D[i] <= 0:
            return None
        for j in range(i + 1, n):
            L[j][i] = (gram[i][j] - sum(L[i][k] * L[j][k] * D[k] for k in range(i))) / D[i]
    result = []

    def rec(idx, partial, coords):
        if result:
            return
        if idx < 0:
            if any(coords):
                cand = field.zero()
                for cval, b in zip(coords, basis):
                    if cval:
                        cand = cand.add(b.scale(cval))
                if abs(cand.norm()) == target_norm:
                    result.append(cand)
            return
        remaining = bound - partial
        if remaining < -1e-9:
            return
        center = -sum(L[j][idx] * coords[j] for j in range(idx + 1, n))
        half = math.sqrt(max(remaining, 0.0) / D[idx]) + 1e-9
        for cval in range(math.ceil(center - half), math.floor(center + half) + 1):
            coords[idx] = cval
            rec(idx - 1, partial + D[idx] * (cval - center) ** 2, coords)
            if result:
                return
        coords[idx] = 0

    rec(n - 1, 0.0, [0] * n)
    return result[0] if result else None


# ---------------------------------------------------------------------------
# builtin quadratic backend
# ---------------------------------------------------------------------------


def _is_fundamental(D):
    if D == 1 or D == 0:
        return False
    if D % 4 == 1:
        return _squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and _squarefree(m)
    return False


def _squarefree(m):
    m = abs(m)
    return all(e == 1 for e in factor_int(m).values())


def quadratic_field(D):
    """The reduced defining polynomial: x^2-x+(1-D)/4 if D=1 mod 4, else x^2-D/4... x^2-m."""
    if D % 4 == 1:
        return NumberField([(1 - D) // 4, -1, 1])
    return NumberField([-D // 4, 0, 1])


def _sqrtD_elem(field, D):
    """sqrt(D) as an element: 2*theta - 1 (D odd) or 2*theta (D = 4m)."""
    if D % 4 == 1:
        return field.elem([-1, 2])
    return field.elem([0, 2])


def quad_conj(field):
    """The nontrivial automorphism of a quadratic field."""
    b = field.poly.c[1]

    def conj(x):
        a0, a1 = x.coords
        return field.elem([a0 - a1 * b, -a1])

    return conj


def ideal_conj(ideal):
    conj = quad_conj(ideal.field)
    gens = [conj(b) for b in ideal.basis_elems()]
    return Ideal.from_gens(ideal.field, gens)


def _reduced_forms(D):
    """All reduced primitive forms (a, b, c) of discriminant D < 0."""
    forms = []
    b = D % 2
    while b * b <= abs(D) / 3:
        ac4 = b * b - D
        if ac4 % 4 == 0:
            ac = ac4 // 4
            a = max(b, 1)
            while a * a <= ac:
                if a and ac % a == 0:
                    c = ac // a
                    if a <= c and igcd(igcd(a, abs(b)), c) == 1 and (b >= 0 or (abs(b) != a and a != c)):
                        if abs(b) <= a:
                            forms.append((a, b, c))
                a += 1
        b += 2
    # include negative-b companions generated above via the b >= 0 filter
    out = set()
    for (a, b, c) in forms:
        out.add((a, b, c))
    return sorted(out)


class _ClassGroupTable:
    """Finite abelian group of ideal classes with a key function and dlogs."""

    def __init__(self, field, key_fn, reduce_rep):
        self.field = field
        self.key_fn = key_fn
        self.reduce_rep = reduce_rep
        self.one_key = key_fn(Ideal.unit_ideal(field))
        self.table = {self.one_key: ((), Ideal.unit_ideal(field))}
        self.gens = []       # (PrimeIdeal, rep)
        self.rel_cols = []

    def size(self):
        return len(self.table)

    def dlog(self, ideal):
        k = self.key_fn(ideal)
        entry = self.table.get(k)
        return None if entry is None else list(entry[0])

    def try_add_generator(self, prime):
        """Extend the group by [prime] if it is not already in the table span."""
        k = self.key_fn(prime)
        if k in self.table:
            return False
        e = 1
        acc = self.reduce_rep(Ideal(prime.field, prime.hnf, prime.den))
        while self.key_fn(acc) not in self.table:
            acc = self.reduce_rep(acc.mul(prime))
            e += 1
        tail = self.table[self.key_fn(acc)][0]
        self.gens.append(prime)
        self.rel_cols = [list(c) + [0] for c in self.rel_cols]
        self.rel_cols.append([-t for t in tail] + [e])
        new_table = {}
        for key, (w, rep) in self.table.items():
            base = rep
            for j in range(e):
                new_table[self.key_fn(base)] = (tuple(w) + (j,), base)
                if j + 1 < e:
                    base = self.reduce_rep(base.mul(prime))
        self.table = new_table
        return True


def _gauss_reduce_imag(ideal):
    """Lagrange-reduced oriented basis of an ideal in an imaginary quadratic field."""
    field = ideal.field
    conj = quad_conj(field)
    e1, e2 = ideal.basis_elems()

    def Q(x):
        return x.mul(conj(x)).coords[0]  # norm, rational

    def B(x, y):
        return (Q(x.add(y)) - Q(x) - Q(y)) / 2

    while True:
        if Q(e2) < Q(e1):
            e1, e2 = e2, e1
        q1 = Q(e1)
        mu_num = B(e1, e2)
        mu = (2 * mu_num + q1).__floordiv__(2 * q1) if False else _round_near(mu_num / q1)
        if mu == 0:
            break
        e2 = e2.sub(e1.scale(mu))
    return e1, e2


def _round_near(q):
    """Round a Fraction to the nearest integer, ties toward even."""
    fl = q.numerator // q.denominator
    rem = q - fl
    if rem > Fraction(1, 2) or (rem == Fraction(1, 2) and fl % 2):
        return fl + 1
    return fl


def _form_key_imag(D):
    """Canonical reduced-form key of an imaginary quadratic ideal class."""

    def key_fn(ideal):
        field = ideal.field
        conj = quad_conj(field)
        e1, e2 = _gauss_reduce_imag(ideal)
        N = ideal.norm()

        def Q(x):
            return x.mul(conj(x)).coords[0]

        # orient so that Im(sigma(e2)/sigma(e1)) > 0
        prec = 96
        with workprec(prec):
            z1 = field.embed(e1, 0, prec)
            z2 = field.embed(e2, 0, prec)
            s = (z2.im * z1.re - z2.re * z1.im)
            while s.contains_zero():
                prec *= 2
                z1 = field.embed(e1, 0, prec)
                z2 = field.embed(e2, 0, prec)
                s = (z2.im * z1.re - z2.re * z1.im)
            if s.sign() < 0:
                e2 = e2.neg()
        a = Q(e1) / N
        c = Q(e2) / N
        b = (Q(e1.add(e2)) - Q(e1) - Q(e2)) / N
        assert a.denominator == 1 and b.denominator == 1 and c.denominator == 1
        a, b, c = int(a), int(b), int(c)
        # final boundary normalization of the reduced form
        if a == c and b < 0:
            b = -b
        if abs(b) == a and b < 0:
            b = -b
        return (a, b, c)

    return key_fn


def _cf_fundamental_unit(field, D, max_steps=10**6):
    """Fundamental unit of a real quadratic field via the CF of theta.

    theta is the reduced-polynomial root (1+sqrt D)/2 or sqrt(D/4); states are
    exact surds (P_k + sqrt N)/Q_k, and convergents p/q give unit candidates
    q*theta - p, the first |norm| = 1 hit being fundamental for the maximal
    order.
    """
    if D % 4 == 1:
        N, P, Q = D, 1, 2
    else:
        N, P, Q = D // 4, 0, 1
    sqN = math.isqrt(N)
    h0, h1 = 1, 0  # convergent recurrences seeded at (p_-1, p_-2)
    k0, k1 = 0, 1
    theta = field.gen()
    for _ in range(max_steps):
        assert Q > 0 and (N - P * P) % Q == 0
        a = (P + sqN) // Q
        h0, h1 = a * h0 + h1, h0
        k0, k1 = a * k0 + k1, k0
        cand = theta.scale(k0).sub(field.from_int(h0))
        if k0 > 0 and abs(cand.norm()) == 1:
            return _normalize_unit(field, cand)
        P = a * Q - P
        Q = (N - P * P) // Q
    raise BoundExceeded("continued fraction did not terminate")


def _normalize_unit(field, u):
    """Scale by +-1 and invert so that sigma_0(u) > 1."""
    for cand in (u, u.neg(), u.inverse(), u.inverse().neg()):
        prec = 96
        with workprec(prec):
            v = field.embed(cand, 0, prec).re
            if v.lower > 1:
                return cand
    raise AssertionError("no embedding-positive unit among candidates")


def builtin_quadratic(D, enum_bound=DEFAULT_ENUM_BOUND):
    """FieldData for a fundamental quadratic discriminant."""
    if not isinstance(D, int) or not _is_fundamental(D):
        raise SchemaError(f"{D} is not a fundamental discriminant")
    if abs(D) > QUADRATIC_DISC_BOUND:
        raise BoundExceeded(f"|D| > {QUADRATIC_DISC_BOUND}")
    field = quadratic_field(D)
    assert field.disc == D
    # torsion units
    if D == -4:
        zeta, w = field.gen(), 4
    elif D == -3:
        zeta, w = field.gen(), 6
    else:
        zeta, w = field.from_int(-1), 2
    units = []
    if D > 0:
        units.append(_cf_fundamental_unit(field, D))

    if D < 0:
        key_fn = _form_key_imag(D)
        h = len(_reduced_forms(D))
        table = _ClassGroupTable(field, key_fn,
                                 lambda I: _form_to_ideal(field, D, key_fn(I)))
    else:
        h = None  # determined by scanning primes up to the Minkowski bound
        table = _RealClassTable(field, units[0])

    S = []
    p = 2
    while True:
        if h is not None and table.size() == h:
            break
        if h is None and p > _minkowski_bound(field):
            break
        if p > 10**4:
            raise BoundExceeded("class group generation ran away")
        if is_prime(p):
            for pr in field.prime_split(p):
                if pr.f == 1:
                    if table.try_add_generator(pr):
                        S.append(pr)
                    break
        p += 1
    if h is None:
        h = table.size()
    assert table.size() == h, f"S does not generate: {table.size()} < {h}"

    # S-unit generators from the relation lattice of the S-classes
    s_units = list(units)
    for col in table.rel_cols:
        ideal = _power_product(field, S, col)
        gen = find_generator(ideal)
        if gen is None:
            raise BoundExceeded("generator search failed for a principal S-power")
        s_units.append(gen)

    backend = _BuiltinBackend(table, S)
    return FieldData(field, S, s_units, (zeta, w), "builtin",
                     h=h, enum_bound=enum_bound, backend=backend)


def _minkowski_bound(field):
    n = field.n
    mink = math.factorial(n) / n**n * (4 / math.pi) ** field.r2 * math.sqrt(abs(field.disc))
    return max(2, math.floor(mink))


def _power_product(field, S, exps):
    """prod p_i^(e_i) as a possibly fractional ideal (quadratic fields only).

    Negative powers use p^(-1) = conj(p) / p^f, valid in quadratic fields.
    """
    out = Ideal.unit_ideal(field)
    for pr, e in zip(S, exps):
        if e > 0:
            out = out.mul(pr.power(e))
        elif e < 0:
            out = out.mul(ideal_conj(pr).power(-e))
            out = Ideal(field, out.hnf, out.den * pr.p ** (pr.f * (-e)))
    return out


class _RealClassTable:
    """Class group table for real quadratic fields.

    Equivalence testing is by rigorous generator search: a fractional ideal
    c is principal iff it contains a generator of T2-norm at most
    Nm * (eta + 1/eta) + slack, eta the fundamental unit.
    """

    def __init__(self, field, eta):
        self.field = field
        prec = 96
        with workprec(prec):
            e = float(field.embed(eta, 0, prec).re.mid)
        self._scale = e + 1 / e + 1.0
        self.reps = [Ideal.unit_ideal(field)]   # representative per class
        self.vecs = [()]
        self.gens = []
        self.rel_cols = []

    def size(self):
        return len(self.reps)

    def _is_principal(self, ideal):
        return find_generator(ideal, scale_limit=max(4.0, self._scale) * 2) is not None

    def _class_index(self, ideal):
        for i, rep in enumerate(self.reps):
            # ideal ~ rep iff ideal * conj(rep) principal
            test = ideal.mul(ideal_conj(rep))
            if self._is_principal(test):
                return i
        return None

    def dlog(self, ideal):
        i = self._class_index(ideal)
        return None if i is None else list(self.vecs[i])

    def try_add_generator(self, prime):
        if self._class_index(prime) is not None:
            return False
        e = 1
        acc = Ideal(prime.field, prime.hnf, prime.den)
        while self._class_index(acc) is None:
            acc = acc.mul(prime)
            e += 1
        tail = self.vecs[self._class_index(acc)]
        self.gens.append(prime)
        self.rel_cols = [list(c) + [0] for c in self.rel_cols]
        self.rel_cols.append([-t for t in tail] + [e])
        new_reps, new_vecs = [], []
        for rep, w in zip(self.reps, self.vecs):
            base = rep
            for j in range(e):
                new_reps.append(base)
                new_vecs.append(tuple(w) + (j,))
                if j + 1 < e:
                    base = base.mul(prime)
        self.reps, self.vecs = new_reps, new_vecs
        return True


class _BuiltinBackend:
    def __init__(self, table, S):
        self.table = table
        self.S = S

    def principalize(self, fd, ideal):
        if ideal.den != 1:
            alpha, exps = self.principalize(fd, Ideal(ideal.field, ideal.hnf))
            return alpha.scale(Fraction(1, ideal.den)), exps
        vec = self.table.dlog(ideal)
        if vec is None:
            raise OracleIncomplete("ideal class outside the S-generated table")
        # map exponents over table generators back to the S ordering
        exps_by_prime = {pr.label: e for pr, e in zip(self.table.gens, vec)}
        exps = [exps_by_prime.get(pr.label, 0) for pr in self.S]
        cofactor = _power_product(ideal.field, self.S, [-e for e in exps])
        target = ideal.mul(cofactor)
        alpha = find_generator(target)
        if alpha is None:
            raise OracleIncomplete("generator search exhausted")
        return alpha, exps


# ---------------------------------------------------------------------------
# JSON ingestion (schema "gcfield-1")
# ---------------------------------------------------------------------------


def _rat(x):
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except ValueError as exc:
            raise SchemaError(f"bad rational literal {x!r}") from exc
    raise SchemaError(f"bad rational value {x!r}")


def _rat_list(xs, n=None):
    if not isinstance(xs, list) or (n is not None and len(xs) != n):
        raise SchemaError("bad rational vector")
    return [_rat(x) for x in xs]


def load_field_json(doc, enum_bound=DEFAULT_ENUM_BOUND):
    """FieldData from a gcfield-1 document; invariants re-verified on load."""
    if not isinstance(doc, dict):
        raise SchemaError("document must be an object")
    if doc.get("format", "gcfield-1") != "gcfield-1":
        raise SchemaError(f"unsupported format {doc.get('format')!r}")
    for key in ("poly", "integral_basis", "signature", "S", "s_units", "torsion"):
        if key not in doc:
            raise SchemaError(f"missing key {key!r}")
    poly = doc["poly"]
    if not all(isinstance(c, int) for c in poly):
        raise SchemaError("poly must be integral")
    n = len(poly) - 1
    basis = [_rat_list(row, n) for row in doc["integral_basis"]]
    field = NumberField(poly, int_basis=basis)
    if list(field.signature) != list(doc["signature"]):
        raise InvariantViolation(
            f"declared signature {doc['signature']} != computed {field.signature}")
    # index-prime overrides must be installed before any splitting happens
    for pstr, data in (doc.get("index_primes") or {}).items():
        field.index_overrides[int(pstr)] = [
            {"e": d["e"], "f": d["f"], "beta": _rat_list(d["beta"], n),
             "uniformizer": _rat_list(d["uniformizer"], n)}
            for d in data
        ]
    S = []
    for entry in doc["S"]:
        p = entry["p"]
        matches = [pr for pr in field.prime_split(p)
                   if pr.e == entry["e"] and pr.f == entry["f"]
                   and pr.contains(field.elem(_rat_list(entry["beta"], n)))]
        if not matches:
            raise InvariantViolation(f"no prime above {p} matches the S entry")
        pr = matches[0]
        uni = field.elem(_rat_list(entry["uniformizer"], n))
        if pr.valuation(uni) != 1:
            raise InvariantViolation(f"declared uniformizer at {pr.label} has v != 1")
        pr.uniformizer = uni
        S.append(pr)
    s_units = [field.elem(_rat_list(u, n)) for u in doc["s_units"]]
    for u in s_units:
        _verify_s_unit(field, S, u)
    zeta = field.elem(_rat_list(doc["torsion"]["zeta"], n))
    w = int(doc["torsion"]["order"])
    if not _is_primitive_root_of_unity(field, zeta, w):
        raise InvariantViolation("declared torsion generator fails its order checks")
    poly_factors = None
    if doc.get("poly_factorization_over_F") is not None:
        poly_factors = []
        for fac in doc["poly_factorization_over_F"]:
            poly_factors.append([field.elem(_rat_list(c, n)) for c in fac])
        _verify_poly_factorization(field, poly_factors)
    class_dlogs = doc.get("class_dlogs")
    backend = _IngestedBackend()
    return FieldData(field, S, s_units, (zeta, w), "ingested",
                     class_dlogs=class_dlogs, poly_factors=poly_factors,
                     enum_bound=enum_bound, backend=backend)


def _verify_s_unit(field, S, u):
    nrm = u.norm()
    if nrm == 0:
        raise InvariantViolation("zero declared as S-unit")
    if not field.is_integral(u):
        raise InvariantViolation("S-units must be algebraic integers here")
    val = abs(nrm.numerator)
    s_ps = {pr.p for pr in S}
    for p in factor_int(val):
        if p not in s_ps:
            raise InvariantViolation(f"declared S-unit has norm divisible by {p} not under S")
        for pr in field.prime_split(p):
            if pr not in S and pr.valuation(u) != 0:
                raise InvariantViolation(
                    f"declared S-unit has valuation at {pr.label} outside S")


def _is_primitive_root_of_unity(field, zeta, w):
    if zeta.pow(w) != field.one():
        return False
    for q in factor_int(w):
        if zeta.pow(w // q) == field.one():
            return False
    return True


def _verify_poly_factorization(field, factors):
    """Multiply the declared factors of P(Y) over F and compare with P."""
    # polynomials in Y with Elem coefficients, dense ascending
    prod = [field.one()]
    for fac in factors:
        out = [field.zero()] * (len(prod) + len(fac) - 1)
        for i, a in enumerate(prod):
            for j, b in enumerate(fac):
                out[i + j] = out[i + j].add(a.mul(b))
        prod = out
    target = [field.from_int(int(c)) for c in field.poly.c]
    if len(prod) != len(target) or any(a != b for a, b in zip(prod, target)):
        raise InvariantViolation("declared factorization does not multiply back to P")


class _IngestedBackend:
    def principalize(self, fd, ideal):
        field = fd.field
        if ideal.den != 1:
            alpha, exps = self.principalize(fd, Ideal(field, ideal.hnf))
            return alpha.scale(Fraction(1, ideal.den)), exps
        if not fd.S:
            alpha = find_generator(ideal)
            if alpha is None:
                raise OracleIncomplete("generator search exhausted (h=1 assumed)")
            return alpha, []
        if not fd.class_dlogs:
            raise OracleIncomplete("no class discrete-log table in the document")
        vec = [0] * len(fd.S)
        for pr, e in ideal.factorization().items():
            if pr in fd.S:
                continue
            if pr.label not in fd.class_dlogs:
                raise OracleIncomplete(f"no class dlog for prime {pr.label}")
            for i, d in enumerate(fd.class_dlogs[pr.label]):
                vec[i] += e * d
        for i, pr in enumerate(fd.S):
            vec[i] += ideal.factorization().get(pr, 0)
        # h = index of the S-relation lattice, from the declared S-units
        rel_cols = []
        for u in fd.s_units:
            col = [pr.valuation(u) for pr in fd.S]
            if any(col):
                rel_cols.append(col)
        if len(rel_cols) < len(fd.S):
            raise OracleIncomplete("declared S-units do not span the relation lattice")
        h = abs(det_int([[c[i] for c in rel_cols[:len(fd.S)]]
                         for i in range(len(fd.S))]))
        if h == 0:
            basis = hnf_basis_from_cols(rel_cols, len(fd.S))
            h = abs(det_int([[c[i] for c in basis] for i in range(len(fd.S))]))
        cof = [(-v) % h for v in vec]
        target = ideal
        for pr, e in zip(fd.S, cof):
            if e:
                target = target.mul(pr.power(e))
        alpha = find_generator(target)
        if alpha is None:
            raise OracleIncomplete("generator search exhausted")
        exps = [v - c if False else -(c - 0) for v, c in zip(vec, cof)]
        exps = [-c for c in cof]
        return alpha, exps
