"""Univariate polynomials over Q and certified complex root isolation.

Root isolation drives the embedding tables of number fields: the ordering
convention fixed here (real roots ascending, then one representative per
conjugate pair with positive imaginary part, ascending by real part, ties by
imaginary part) defines place indices everywhere downstream.
"""

from fractions import Fraction

from mpmath import mp

from .ball import ComplexBall, RealBall, workprec
from .errors import PrecisionCeiling
from . import ball as _ball


class RatPoly:
    __slots__ = ("c",)

    def __init__(self, coeffs):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = c

    @property
    def degree(self):
        return len(self.c) - 1

    def is_zero(self):
        return not self.c

    def __eq__(self, other):
        return isinstance(other, RatPoly) and self.c == other.c

    def __repr__(self):
        return f"RatPoly({self.c})"

    def __add__(self, other):
        n = max(len(self.c), len(other.c))
        a = self.c + [Fraction(0)] * (n - len(self.c))
        b = other.c + [Fraction(0)] * (n - len(other.c))
        return RatPoly([x + y for x, y in zip(a, b)])

    def __sub__(self, other):
        n = max(len(self.c), len(other.c))
        a = self.c + [Fraction(0)] * (n - len(self.c))
        b = other.c + [Fraction(0)] * (n - len(other.c))
        return RatPoly([x - y for x, y in zip(a, b)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatPoly([x * other for x in self.c])
        if self.is_zero() or other.is_zero():
            return RatPoly([])
        out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError
        rem = list(self.c)
        quo = [Fraction(0)] * max(0, len(rem) - len(other.c) + 1)
        lead = other.c[-1]
        for i in range(len(quo) - 1, -1, -1):
            coef = rem[i + len(other.c) - 1] / lead
            quo[i] = coef
            if coef:
                for j, b in enumerate(other.c):
                    rem[i + j] -= coef * b
        return RatPoly(quo), RatPoly(rem[: len(other.c) - 1])

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def deriv(self):
        return RatPoly([i * a for i, a in enumerate(self.c)][1:])

    def monic(self):
        if self.is_zero():
            return self
        lead = self.c[-1]
        return RatPoly([x / lead for x in self.c])

    def evaluate(self, x):
        """Horner evaluation; works for Fraction, RealBall and ComplexBall."""
        if isinstance(x, (int, Fraction)):
            v = Fraction(0)
        elif isinstance(x, ComplexBall):
            v = ComplexBall(0, 0)
        else:
            v = RealBall(0)
        for coef in reversed(self.c):
            v = v * x + coef
        return v

    def is_squarefree(self):
        return gcd(self, self.deriv()).degree == 0

    def resultant(self, other):
        """Res(self, other) over Q by the Euclidean remainder chain."""
        a, b = self, other
        if a.is_zero() or b.is_zero():
            return Fraction(0)
        res = Fraction(1)
        while b.degree > 0:
            r = a % b
            if r.is_zero():
                return Fraction(0)
            res *= b.c[-1] ** (a.degree - r.degree) * Fraction(-1) ** (a.degree * b.degree)
            a, b = b, r
        return res * b.c[-1] ** a.degree

    def discriminant(self):
        n = self.degree
        sign = Fraction(-1) ** (n * (n - 1) // 2)
        return sign * self.resultant(self.deriv()) / self.c[-1]


def gcd(a, b):
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def _box(re_mid, im_mid, r):
    return ComplexBall(RealBall.from_endpoints(re_mid - r, re_mid + r),
                       RealBall.from_endpoints(im_mid - r, im_mid + r))


def _subset_interior(inner, outer):
    return (inner.re.lower > outer.re.lower and inner.re.upper < outer.re.upper
            and inner.im.lower > outer.im.lower and inner.im.upper < outer.im.upper)


def _mpf_fraction(x):
    """Exact value of an mpf (no re-rounding at the ambient precision)."""
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    sign, man, exp, _ = x._mpf_
    man = int(man)
    if man == 0:
        return Fraction(0)
    v = Fraction(man) * Fraction(2) ** exp
    return -v if sign else v


def _certify_root(P, dP, re_mid, im_mid, radius, real_line):
    """Interval-Newton verification; returns a contracted enclosure or None.

    Strict contraction of the Newton operator into the interior of the box
    proves existence and uniqueness of a root inside it; the contracted box
    is then polished a few rounds to tighten the radius.
    """
    verified = None
    for _ in range(6):
        if real_line:
            box = ComplexBall(RealBall.from_endpoints(re_mid - radius, re_mid + radius), 0)
            mid = ComplexBall(re_mid, 0)
        else:
            box = _box(re_mid, im_mid, radius)
            mid = ComplexBall(re_mid, im_mid)
        deriv_on_box = dP.evaluate(box)
        if deriv_on_box.contains_zero():
            return verified
        newton = mid - P.evaluate(mid) / deriv_on_box
        if real_line:
            newton = ComplexBall(newton.re, 0)  # real coefficients, real box
            ok = newton.re.lower > box.re.lower and newton.re.upper < box.re.upper
        else:
            ok = _subset_interior(newton, box)
        if not ok:
            return verified
        verified = newton
        new_rad = max(newton.re.rad, newton.im.rad)
        if new_rad == 0 or new_rad * 4 >= radius:
            return verified
        re_mid = newton.re.mid
        im_mid = Fraction(0) if real_line else newton.im.mid
        radius = new_rad * 2  # margin lets the next Newton step contract strictly
    return verified


def complex_roots(P, target_bits=53):
    """Certified roots of a squarefree rational polynomial.

    Returns deg(P) pairwise-disjoint enclosures... real roots first
    (ascending), then one representative per conjugate pair (positive
    imaginary part), sorted by real part then imaginary part.  Only the
    representatives are returned for conjugate pairs, so the list has
    r1 + r2 entries for a polynomial with r1 real roots and r2 pairs.
    """
    if P.degree < 1:
        return []
    if not P.is_squarefree():
        raise ValueError("polynomial must be squarefree")
    dP = P.deriv()
    n = P.degree
    prec = max(64, target_bits + 32)
    ceiling = _ball.max_precision()
    while prec <= ceiling:
        with workprec(prec):
            result = _attempt_roots(P, dP, n, prec, target_bits)
        if result is not None:
            return result
        prec *= 2
    raise PrecisionCeiling(f"root isolation of degree {n} failed below {ceiling} bits")


def _attempt_roots(P, dP, n, prec, target_bits):
    old_prec = mp.prec
    try:
        mp.prec = prec
        approx = mp.polyroots([mp.mpf(c.numerator) / mp.mpf(c.denominator)
                               for c in reversed(P.c)], maxsteps=200, extraprec=prec // 2)
    except mp.NoConvergence:
        return None
    finally:
        mp.prec = old_prec

    tol = Fraction(1, 2**target_bits)
    floor_rad = Fraction(1, 2 ** (prec // 2))
    reals = []
    pairs = []
    for z in approx:
        re_mid = _mpf_fraction(getattr(z, "real", z))
        im_mid = _mpf_fraction(getattr(z, "imag", 0))
        if im_mid < -4 * floor_rad:
            continue  # conjugate of a pair handled via its partner
        if im_mid <= 4 * floor_rad:
            # near the real axis: must certify as an actual real root
            enclosure = _certify_root(P, dP, re_mid, Fraction(0), floor_rad * 8, True)
            if enclosure is None:
                return None  # ambiguous at this precision
            reals.append(enclosure)
            continue
        enclosure = _certify_root(P, dP, re_mid, im_mid,
                                  max(floor_rad, abs(im_mid) / 8), False)
        if enclosure is None or not enclosure.im.lower > 0:
            return None
        pairs.append(enclosure)
    if len(reals) + 2 * len(pairs) != n:
        return None
    roots = sorted(reals, key=lambda b: b.re.mid) + sorted(pairs, key=lambda b: (b.re.mid, b.im.mid))
    # disjointness: compare as intervals, conservatively via endpoints
    def overlap(a, b):
        return not (a.re.upper < b.re.lower or b.re.upper < a.re.lower
                    or a.im.upper < b.im.lower or b.im.upper < a.im.lower)

    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if overlap(roots[i], roots[j]):
                return None
    if any(max(r.re.rad, r.im.rad) >= tol for r in roots):
        return None
    return roots
