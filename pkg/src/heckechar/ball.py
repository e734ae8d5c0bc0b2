"""Certified real/complex arithmetic in midpoint-radius style.

Values are stored as dyadic-endpoint intervals (mpmath's interval context
supplies the outward-rounded elementary operations); midpoint and radius are
derived views.  Every operation returns a ball that contains the exact
mathematical result whenever the input balls contain theirs.  ``adaptive_run``
wraps a precision-parameterized computation and doubles the working precision
until all output radii clear a target, which is the precision contract the
rest of the package relies on.

The working precision is thread-local: each thread owns one interval context,
so balls may be shared freely across threads while ``workprec`` blocks stay
independent.
"""

import os
import threading
from contextlib import contextmanager
from fractions import Fraction

from mpmath import ctx_iv, libmp

from .errors import BallContainsZero, PrecisionCeiling

DEFAULT_PREC = 128

_tls = threading.local()


def _ctx():
    ctx = getattr(_tls, "ctx", None)
    if ctx is None:
        ctx = ctx_iv.MPIntervalContext()
        ctx.prec = DEFAULT_PREC
        _tls.ctx = ctx
    return ctx


def getprec():
    return _ctx().prec


@contextmanager
def workprec(bits):
    ctx = _ctx()
    old = ctx.prec
    ctx.prec = int(bits)
    try:
        yield ctx
    finally:
        ctx.prec = old


def max_precision():
    return int(os.environ.get("GCHAR_MAX_PREC", 1 << 16))


def _tuple_to_fraction(t):
    sign, man, exp, _ = t
    man = int(man)
    if man == 0:
        if exp != 0:  # inf/nan encode with man == 0, exp != 0
            raise ValueError("non-finite endpoint")
        return Fraction(0)
    val = Fraction(man, 1) * Fraction(2) ** exp
    return -val if sign else val


def _fraction_to_iv(q):
    ctx = _ctx()
    lo = libmp.from_rational(q.numerator, q.denominator, ctx.prec, "f")
    hi = libmp.from_rational(q.numerator, q.denominator, ctx.prec, "c")
    return ctx.make_mpf((lo, hi))


class RealBall:
    """A certified enclosure of a real number."""

    __slots__ = ("iv",)

    def __init__(self, value=0):
        if isinstance(value, RealBall):
            self.iv = value.iv
        elif isinstance(value, (int, Fraction)):
            self.iv = _fraction_to_iv(Fraction(value))
        else:
            self.iv = _ctx().convert(value)

    @classmethod
    def _wrap(cls, iv):
        b = object.__new__(cls)
        b.iv = iv
        return b

    @classmethod
    def from_endpoints(cls, lo, hi):
        ctx = _ctx()
        lo, hi = Fraction(lo), Fraction(hi)
        lo_t = libmp.from_rational(lo.numerator, lo.denominator, ctx.prec, "f")
        hi_t = libmp.from_rational(hi.numerator, hi.denominator, ctx.prec, "c")
        return cls._wrap(ctx.make_mpf((lo_t, hi_t)))

    # -- views ---------------------------------------------------------------

    @property
    def lower(self):
        return _tuple_to_fraction(self.iv._mpi_[0])

    @property
    def upper(self):
        return _tuple_to_fraction(self.iv._mpi_[1])

    @property
    def mid(self):
        return (self.lower + self.upper) / 2

    @property
    def rad(self):
        return (self.upper - self.lower) / 2

    def contains(self, q):
        q = Fraction(q)
        return self.lower <= q <= self.upper

    def contains_zero(self):
        return self.contains(0)

    def sign(self):
        """Certified sign; raises if the ball straddles 0."""
        if self.lower > 0:
            return 1
        if self.upper < 0:
            return -1
        if self.lower == 0 and self.upper == 0:
            return 0
        raise BallContainsZero(f"sign of {self}")

    def is_exact_zero(self):
        return self.lower == 0 and self.upper == 0

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, RealBall):
            return other.iv
        if isinstance(other, (int, Fraction)):
            return _fraction_to_iv(Fraction(other))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RealBall._wrap(self.iv + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RealBall._wrap(self.iv - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RealBall._wrap(o - self.iv)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RealBall._wrap(self.iv * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if isinstance(other, RealBall) and other.contains_zero():
            raise BallContainsZero("division by a ball containing 0")
        if isinstance(other, (int, Fraction)) and other == 0:
            raise ZeroDivisionError
        return RealBall._wrap(self.iv / o)

    def __rtruediv__(self, other):
        if self.contains_zero():
            raise BallContainsZero("division by a ball containing 0")
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RealBall._wrap(o / self.iv)

    def __neg__(self):
        return RealBall._wrap(-self.iv)

    def __abs__(self):
        return RealBall._wrap(abs(self.iv))

    def __repr__(self):
        m = self.mid
        r = self.rad
        return f"RealBall({float(m):.17g} ± {float(r):.3g})"

    # -- elementary functions --------------------------------------------------

    def sqrt(self):
        if self.lower < 0:
            raise BallContainsZero("sqrt of a ball reaching below 0")
        return RealBall._wrap(_ctx().sqrt(self.iv))

    def exp(self):
        return RealBall._wrap(_ctx().exp(self.iv))

    def log(self):
        if self.lower <= 0:
            raise BallContainsZero("log of a ball reaching 0")
        return RealBall._wrap(_ctx().log(self.iv))


def ball_pi():
    return RealBall._wrap(_ctx().pi)


class ComplexBall:
    """Rectangular enclosure: certified real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, RealBall) else RealBall(re)
        self.im = im if isinstance(im, RealBall) else RealBall(im)

    @staticmethod
    def _coerce(other):
        if isinstance(other, ComplexBall):
            return other
        if isinstance(other, (int, Fraction, RealBall)):
            return ComplexBall(other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ComplexBall(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ComplexBall(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ComplexBall(self.re * o.re - self.im * o.im,
                           self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = o.re * o.re + o.im * o.im
        if d.contains_zero():
            raise BallContainsZero("division by a complex ball containing 0")
        return ComplexBall((self.re * o.re + self.im * o.im) / d,
                           (self.im * o.re - self.re * o.im) / d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        return ComplexBall(-self.re, -self.im)

    def conj(self):
        return ComplexBall(self.re, -self.im)

    def __abs__(self):
        return (self.re * self.re + self.im * self.im).sqrt()

    def powi(self, k):
        if k < 0:
            return ComplexBall(1) / self.powi(-k)
        result = ComplexBall(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def contains_zero(self):
        return self.re.contains_zero() and self.im.contains_zero()

    @property
    def rad(self):
        return max(self.re.rad, self.im.rad)

    def arg(self):
        """Certified arg with branch (-pi, pi].

        A ball touching the negative real axis returns an enclosure around pi
        that is valid modulo 2*pi (the enclosure may dip below -pi+eps rather
        than splitting into two components).
        """
        if self.contains_zero():
            raise BallContainsZero("arg of a ball containing 0")
        ctx = _ctx()
        if self.re.lower > 0 or not self.im.contains_zero():
            return RealBall._wrap(ctx.atan2(self.im.iv, self.re.iv))
        # re may reach <= 0 while im straddles 0: enclose around pi, mod 2*pi.
        half_spread = RealBall._wrap(ctx.atan2(abs(self.im).iv, (-self.re).iv))
        pi = ball_pi()
        lo = (pi - half_spread).lower
        hi = (pi + half_spread).upper
        return RealBall.from_endpoints(lo, hi)

    def __repr__(self):
        return f"ComplexBall({float(self.re.mid):.17g} + {float(self.im.mid):.17g}j ± {float(self.rad):.3g})"


def exp2pii(t):
    """e^(2*pi*i*t) as a ComplexBall; t may be exact or a RealBall."""
    if isinstance(t, int):
        return ComplexBall(1, 0)
    if isinstance(t, Fraction):
        t = t - (t.numerator // t.denominator)  # reduce mod 1, exact
        if t == 0:
            return ComplexBall(1, 0)
        if 2 * t == 1:
            return ComplexBall(-1, 0)
        if 4 * t == 1:
            return ComplexBall(0, 1)
        if 4 * t == 3:
            return ComplexBall(0, -1)
        t = RealBall(t)
    ctx = _ctx()
    angle = (2 * ball_pi() * t).iv
    c, s = ctx.cos_sin(angle)
    return ComplexBall(RealBall._wrap(c), RealBall._wrap(s))


def ball_op(a, b, op):
    """Dispatcher over the primitive certified operations."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "exp2pii":
        return exp2pii(a)
    if op == "arg":
        z = a if isinstance(a, ComplexBall) else ComplexBall(a)
        return z.arg()
    if op == "log":
        x = a if isinstance(a, RealBall) else RealBall(a)
        return x.log()
    if op == "abs":
        return abs(a if isinstance(a, (RealBall, ComplexBall)) else RealBall(a))
    raise ValueError(f"unknown op {op!r}")


def max_radius(obj):
    """Largest radius found anywhere in a nested result; exact parts count 0."""
    if isinstance(obj, RealBall):
        return obj.rad
    if isinstance(obj, ComplexBall):
        return obj.rad
    if isinstance(obj, (int, Fraction)) or obj is None:
        return Fraction(0)
    if isinstance(obj, dict):
        obj = obj.values()
    if isinstance(obj, (list, tuple)) or hasattr(obj, "__iter__"):
        r = Fraction(0)
        for item in obj:
            r = max(r, max_radius(item))
        return r
    return Fraction(0)


def is_exact(obj):
    if isinstance(obj, (RealBall, ComplexBall)):
        return False
    if isinstance(obj, (int, Fraction)) or obj is None:
        return True
    if isinstance(obj, dict):
        obj = obj.values()
    if isinstance(obj, (list, tuple)):
        return all(is_exact(item) for item in obj)
    return False


def adaptive_run(task, target_bits=DEFAULT_PREC, start_bits=None):
    """Run ``task(prec)`` at doubling precision until radii < 2^-target_bits.

    The task must be monotone: raising the working precision never widens its
    certified outputs.  Exact results short-circuit at the first iteration.
    """
    ceiling = max_precision()
    prec = start_bits if start_bits is not None else max(64, target_bits + 32)
    tol = Fraction(1, 2 ** target_bits)
    while prec <= ceiling:
        with workprec(prec):
            result = task(prec)
        if is_exact(result) or max_radius(result) < tol:
            return result
        prec *= 2
    raise PrecisionCeiling(f"target 2^-{target_bits} unreachable below {ceiling} bits")


def _simplest_in_interval(lo, hi):
    """The rational with smallest denominator in the closed interval [lo, hi]."""
    if lo > hi:
        raise ValueError("empty interval")
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -_simplest_in_interval(-hi, -lo)
    # 0 < lo <= hi: continued-fraction recursion on the fractional part.
    fl = lo.numerator // lo.denominator
    if lo.denominator == 1:
        return Fraction(fl)
    if fl + 1 <= hi:
        return Fraction(fl + 1)
    inner = _simplest_in_interval(1 / (hi - fl), 1 / (lo - fl))
    return fl + 1 / inner


def snap_rational(x, max_den):
    """The unique rational p/q with q <= max_den inside the ball, or None.

    None signals "no candidate or not provably unique"; callers respond by
    raising the working precision.
    """
    if isinstance(x, (int, Fraction)):
        q = Fraction(x)
        return q if q.denominator <= max_den else None
    if max_den < 1:
        raise ValueError("max_den must be >= 1")
    lo, hi = x.lower, x.upper
    cand = _simplest_in_interval(lo, hi)
    if cand.denominator > max_den:
        return None
    if hi - lo >= Fraction(1, cand.denominator * max_den):
        return None
    return cand


def snap_integer(x):
    return snap_rational(x, 1)
