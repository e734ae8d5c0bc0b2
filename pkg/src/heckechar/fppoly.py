"""Dense univariate polynomials over prime fields F_p, with factorization.

Coefficients are ints in [0, p); the zero polynomial is the empty list.
Factorization runs squarefree / distinct-degree / equal-degree splitting with
a pseudo-random sequence seeded by (p, coefficients), so the output order is
reproducible run to run.
"""

import random
from fractions import Fraction


class FpPoly:
    __slots__ = ("p", "c")

    def __init__(self, p, coeffs):
        self.p = p
        c = [x % p for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = c

    @classmethod
    def x(cls, p):
        return cls(p, [0, 1])

    @classmethod
    def const(cls, p, a):
        return cls(p, [a])

    @property
    def degree(self):
        return len(self.c) - 1  # zero polynomial reports -1

    def is_zero(self):
        return not self.c

    def __eq__(self, other):
        return isinstance(other, FpPoly) and self.p == other.p and self.c == other.c

    def __hash__(self):
        return hash((self.p, tuple(self.c)))

    def __repr__(self):
        return f"FpPoly(p={self.p}, {self.c})"

    def __add__(self, other):
        n = max(len(self.c), len(other.c))
        a = self.c + [0] * (n - len(self.c))
        b = other.c + [0] * (n - len(other.c))
        return FpPoly(self.p, [x + y for x, y in zip(a, b)])

    def __sub__(self, other):
        n = max(len(self.c), len(other.c))
        a = self.c + [0] * (n - len(self.c))
        b = other.c + [0] * (n - len(other.c))
        return FpPoly(self.p, [x - y for x, y in zip(a, b)])

    def __mul__(self, other):
        if isinstance(other, int):
            return FpPoly(self.p, [x * other for x in self.c])
        if self.is_zero() or other.is_zero():
            return FpPoly(self.p, [])
        out = [0] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    out[i + j] += a * b
        return FpPoly(self.p, out)

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError
        p = self.p
        rem = list(self.c)
        dq = len(rem) - len(other.c)
        if dq < 0:
            return FpPoly(p, []), FpPoly(p, rem)
        inv_lead = pow(other.c[-1], p - 2, p)
        quo = [0] * (dq + 1)
        for i in range(dq, -1, -1):
            if len(rem) - 1 - (dq - i) < len(other.c) - 1 + i:
                continue
            coef = rem[len(other.c) - 1 + i] * inv_lead % p
            quo[i] = coef
            if coef:
                for j, b in enumerate(other.c):
                    rem[i + j] = (rem[i + j] - coef * b) % p
        return FpPoly(p, quo), FpPoly(p, rem[: len(other.c) - 1])

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def monic(self):
        if self.is_zero():
            return self
        inv = pow(self.c[-1], self.p - 2, self.p)
        return self * inv

    def deriv(self):
        return FpPoly(self.p, [i * a for i, a in enumerate(self.c)][1:])

    def pow_mod(self, e, mod):
        result = FpPoly(self.p, [1])
        base = self % mod
        while e:
            if e & 1:
                result = result * base % mod
            base = base * base % mod
            e >>= 1
        return result

    def evaluate(self, a):
        v = 0
        for coef in reversed(self.c):
            v = (v * a + coef) % self.p
        return v

    def key(self):
        return (self.degree, tuple(self.c))


def gcd(a, b):
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def _pth_root(f):
    """f(x) = g(x^p) -> g, valid over F_p where c^(1/p) = c."""
    return FpPoly(f.p, f.c[:: f.p])


def squarefree_decomposition(f):
    """Yun's algorithm adapted to char p (derivative may collapse to 0)."""
    out = []
    if f.degree < 1:
        return out

    def yun(g, mult):
        d = g.deriv()
        if d.is_zero():
            yun(_pth_root(g), mult * g.p)
            return
        c = gcd(g, d)
        w = g // c
        i = 1
        while w.degree > 0:
            y = gcd(w, c)
            fac = w // y
            if fac.degree > 0:
                out.append((fac.monic(), i * mult))
            w, c = y, c // y
            i += 1
        if c.degree > 0:
            yun(_pth_root(c), mult * g.p)

    yun(f.monic(), 1)
    return out


def _distinct_degree(f):
    """f squarefree monic -> list of (product of factors of degree d, d)."""
    p = f.p
    result = []
    x = FpPoly.x(p)
    h = x
    v = f
    d = 0
    while v.degree >= 2 * (d + 1):
        d += 1
        h = h.pow_mod(p, v)
        g = gcd(h - x, v)
        if g.degree > 0:
            result.append((g.monic(), d))
            v = v // g
            h = h % v
    if v.degree > 0:
        result.append((v.monic(), v.degree))
    return result


def _equal_degree_split(f, d, rng):
    """Cantor-Zassenhaus split of a product of degree-d irreducibles."""
    p = f.p
    n = f.degree
    if n == d:
        return [f]
    while True:
        r = FpPoly(p, [rng.randrange(p) for _ in range(n)])
        if r.degree < 1:
            continue
        g = gcd(r, f)
        if 0 < g.degree < n:
            pass  # lucky split
        elif p == 2:
            # trace map over F_{2^d}
            t = FpPoly(p, [])
            w = r % f
            for _ in range(d):
                t = (t + w) % f
                w = w.pow_mod(2, f)
            g = gcd(t, f)
        else:
            e = (p**d - 1) // 2
            g = gcd(r.pow_mod(e, f) - FpPoly.const(p, 1), f)
        if 0 < g.degree < n:
            left = _equal_degree_split(g.monic(), d, rng)
            right = _equal_degree_split((f // g).monic(), d, rng)
            return left + right


def fp_factor(f):
    """Factor f over F_p: list of (monic irreducible, multiplicity).

    Deterministic: the CZ randomness is seeded by (p, coefficients) and the
    output is sorted by (degree, coefficient tuple).
    """
    if f.is_zero():
        raise ZeroDivisionError("factor of zero polynomial")
    rng = random.Random(("fp_factor", f.p, tuple(f.c)).__repr__())
    factors = {}
    for sq, mult in squarefree_decomposition(f):
        for block, d in _distinct_degree(sq):
            for irr in _equal_degree_split(block, d, rng):
                irr = irr.monic()
                factors[irr.key()] = (irr, factors.get(irr.key(), (irr, 0))[1] + mult)
    return [factors[k] for k in sorted(factors)]


def rat_poly_mod_p(coeffs, p):
    """Reduce a rational-coefficient polynomial mod p; denominators must be units."""
    out = []
    for q in coeffs:
        q = Fraction(q)
        if q.denominator % p == 0:
            raise ValueError(f"denominator divisible by {p}")
        out.append(q.numerator * pow(q.denominator, p - 2, p) % p)
    return FpPoly(p, out)
