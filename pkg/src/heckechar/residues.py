"""Multiplicative residue groups (Z_F/m)^x with explicit presentations.

The group is presented as Z^r / Lambda_m: generators are lifted field
elements for the finite part (one block per prime power, combined by CRT)
plus one {+-1} coordinate per declared real place.  Discrete logs for the
finite part are table-driven: the whole group is enumerated once, which is
the intended desk-scale regime (a configurable element bound guards it).
"""

from fractions import Fraction
from math import gcd as igcd

from .errors import BoundExceeded, NotCoprime
from .numfield import Ideal, factor_int
from .zlinalg import hnf_columns, snf_with_transform, solve_int
from . import kernels


DEFAULT_ENUM_BOUND = 10**6


class ResidueRing:
    """Z_F / n for an integral ideal n, elements as reduced ob-coordinate tuples."""

    def __init__(self, ideal):
        self.field = ideal.field
        self.ideal = ideal
        self.hnf = ideal.hnf
        self.pivot_rows = ideal.pivot_rows
        # pivot entry per row index for fast reduction
        self._pivots = {r: col for col, r in zip(self.hnf, self.pivot_rows)}

    def reduce(self, ob_coords):
        v = [int(c) for c in ob_coords]
        for r in self.pivot_rows:
            col = self._pivots[r]
            q = v[r] // col[r]
            if q:
                kernels.addmul(v, col, -q)
        return tuple(v)

    def reduce_elem(self, x):
        """Reduce a field element with n-coprime denominator."""
        ob = self.field.to_ob(x)
        den = 1
        for c in ob:
            den = den * c.denominator // igcd(den, c.denominator)
        num = self.reduce([int(c * den) for c in ob])
        if den == 1:
            return num
        return self.mul(num, self.inverse(self.reduce_int(den)))

    def reduce_int(self, a):
        ob = self.field.to_ob(self.field.from_int(a))
        return self.reduce([int(c) for c in ob])

    def one(self):
        return self.reduce_int(1)

    def mul(self, a, b):
        x = self.field.elem_ob(list(a))
        y = self.field.elem_ob(list(b))
        return self.reduce([int(c) for c in self.field.to_ob(x.mul(y))])

    def pow(self, a, k):
        result = self.one()
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def inverse(self, a):
        """Inverse of a unit: solve a*x = 1 over the ring via integer solve."""
        x = self.field.elem_ob(list(a))
        n = self.field.n
        # multiplication-by-x matrix on the integral basis, columns + lattice
        cols = []
        for j in range(n):
            basis_elem = self.field.elem(self.field.int_basis[j])
            prod = x.mul(basis_elem)
            cols.append([int(c) for c in self.field.to_ob(prod)])
        aug_rows = [[cols[j][i] for j in range(n)] + [c[i] for c in self.hnf]
                    for i in range(n)]
        one = self.field.to_ob(self.field.one())
        sol = solve_int(aug_rows, [int(c) for c in one])
        if sol is None:
            raise NotCoprime("element is not invertible modulo the ideal")
        return self.reduce(sol[:n])

    def elements(self, bound=DEFAULT_ENUM_BOUND):
        """All residue classes, in lexicographic coordinate order."""
        pivs = [self._pivots[r][r] for r in self.pivot_rows]
        total = 1
        for p in pivs:
            total *= p
        if total > bound:
            raise BoundExceeded(f"residue ring of size {total} exceeds bound {bound}")
        coords = [0] * self.field.n
        out = []

        def rec(i):
            if i == len(self.pivot_rows):
                out.append(self.reduce(list(coords)))
                return
            r = self.pivot_rows[i]
            for c in range(pivs[i]):
                coords[r] = c
                rec(i + 1)
            coords[r] = 0

        rec(0)
        return out

    def lift(self, a):
        return self.field.elem_ob(list(a))


def _group_structure(ring, order, candidate_stream):
    """Generators, triangular relations, and a full dlog table of a finite
    abelian subgroup of the ring's units, built by subgroup extension."""
    dlog = {ring.one(): ()}
    gens = []
    rel_cols = []
    for cand in candidate_stream:
        if len(dlog) == order:
            break
        if cand in dlog:
            continue
        # order of cand relative to the current subgroup
        e = 1
        acc = cand
        while acc not in dlog:
            acc = ring.mul(acc, cand)
            e += 1
        tail = dlog[acc]  # cand^e = prod gens^tail
        gens.append(cand)
        rel_cols = [list(c) + [0] for c in rel_cols]
        rel_cols.append([-t for t in tail] + [e])
        new_dlog = {}
        for elt, w in dlog.items():
            base = elt
            for j in range(e):
                new_dlog[base] = tuple(w) + (j,)
                if j + 1 < e:
                    base = ring.mul(base, cand)
        dlog = new_dlog
    if len(dlog) != order:
        raise BoundExceeded("generator stream exhausted before reaching group order")
    return gens, rel_cols, dlog


class ResidueGroup:
    """(Z_F/m)^x ~= Z^r / Lambda_m, finite blocks per prime power + sign bits."""

    def __init__(self, modulus, bound=DEFAULT_ENUM_BOUND):
        self.modulus = modulus
        field = modulus.field
        self.field = field
        fac = sorted(modulus.finite.factorization().items(), key=lambda t: t[0].label)
        self.prime_blocks = []  # (prime, m, ring, gens, rel_cols, dlog)
        self.gens = []          # global generators: lifted elements (finite part)
        rel_blocks = []
        self._crt = _crt_idempotents(field, [(pr, m) for pr, m in fac])
        for (pr, m), idem in zip(fac, self._crt):
            ring = ResidueRing(pr.power(m))
            order = (pr.norm() - 1) * pr.norm() ** (m - 1)
            stream = _unit_candidates(ring, pr)
            gens, rel_cols, dlog = _group_structure(ring, order, stream)
            self.prime_blocks.append((pr, m, ring, gens, rel_cols, dlog))
            rel_blocks.append(rel_cols)
        self.r_finite = sum(len(b[3]) for b in self.prime_blocks)
        self.r = self.r_finite + len(modulus.infinite)
        # global relation lattice: block diagonal, sign blocks contribute 2Z
        self.relations = []
        offset = 0
        for cols in rel_blocks:
            k = len(cols)
            for c in cols:
                self.relations.append([0] * offset + list(c) +
                                      [0] * (self.r - offset - k))
            offset += k
        for i in range(len(modulus.infinite)):
            self.relations.append([0] * (self.r_finite + i) + [2] +
                                  [0] * (self.r - self.r_finite - i - 1))
        self.order = Fraction(1)
        for pr, m, *_ in self.prime_blocks:
            self.order *= (pr.norm() - 1) * pr.norm() ** (m - 1)
        self.order = int(self.order) * 2 ** len(modulus.infinite)
        self._check_presentation()

    def _check_presentation(self):
        if self.r == 0:
            assert self.order == 1
            return
        from .zlinalg import det_int

        cols = self.relations
        d = det_int([[cols[j][i] for j in range(len(cols))] for i in range(self.r)])
        assert abs(d) == self.order, "presentation index mismatch"

    def exponent(self):
        if self.r == 0:
            return 1
        rows = [[self.relations[j][i] for j in range(len(self.relations))]
                for i in range(self.r)]
        d, _, _ = snf_with_transform(rows)
        return max((x for x in d if x), default=1)

    def log(self, x, signs=None):
        """Exponent vector in Z^r of a field element coprime to m_f.

        ``signs``: explicit sign bits for the infinite places (overrides the
        signs of x itself -- needed when the archimedean component of the
        idele differs from the element used for the finite residue).
        """
        vec = []
        for pr, m, ring, gens, rel_cols, dlog in self.prime_blocks:
            if pr.valuation(x) != 0:
                raise NotCoprime(f"element not coprime to {pr.label}")
            key = ring.reduce_elem(x)
            if key not in dlog:
                raise AssertionError("dlog table incomplete")
            vec.extend(dlog[key])
        if signs is None:
            signs = [0 if self.field.sign_at(x, i) > 0 else 1
                     for i in self.modulus.infinite]
        vec.extend(int(s) % 2 for s in signs)
        return vec

    def log_signs_only(self, signs):
        return [0] * self.r_finite + [int(s) % 2 for s in signs]


def _unit_candidates(ring, pr):
    """Deterministic stream of units of Z_F/pr^m (elements outside pr)."""
    for a in ring.elements():
        x = ring.lift(a)
        if x.is_zero():
            continue
        if pr.valuation(x) == 0:
            yield a


def _crt_idempotents(field, prime_powers):
    """e_i = 1 mod pr_i^{m_i}, = 0 mod the others, as field elements."""
    if not prime_powers:
        return []
    ideals = [pr.power(m) for pr, m in prime_powers]
    out = []
    for i, I in enumerate(ideals):
        rest = None
        for j, J in enumerate(ideals):
            if j != i:
                rest = J if rest is None else rest.mul(J)
        if rest is None:
            out.append(field.one())
            continue
        # 1 = u + v with u in I, v in rest: v is the idempotent lift
        n = field.n
        rows = [[c[k] for c in I.hnf] + [c[k] for c in rest.hnf] for k in range(n)]
        sol = solve_int(rows, [int(c) for c in field.to_ob(field.one())])
        assert sol is not None, "prime powers not coprime"
        v_ob = [0] * n
        for j, c in enumerate(sol[len(I.hnf):]):
            if c:
                kernels.addmul(v_ob, rest.hnf[j], c)
        out.append(field.elem_ob(v_ob))
    return out


def crt_elements(field, prime_powers, residues, idempotents=None):
    """x = residues[i] mod prime_powers[i], via precomputed idempotents."""
    idem = idempotents or _crt_idempotents(field, prime_powers)
    acc = field.zero()
    for e, r in zip(idem, residues):
        acc = acc.add(e.mul(r))
    return acc
