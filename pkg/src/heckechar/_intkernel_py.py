"""Pure-Python fallback for the integer column micro-kernels.

Semantics must match _intkernel.pyx exactly; the test suite runs both
implementations against each other.
"""


def addmul(a, b, q):
    """a[i] += q * b[i] in place."""
    if q == 0:
        return
    for i, bi in enumerate(b):
        if bi:
            a[i] += q * bi


def combine2(a, b, u1, u2, v1, v2):
    """(a, b) <- (u1*a + u2*b, v1*a + v2*b) in place."""
    for i in range(len(a)):
        ai = a[i]
        bi = b[i]
        a[i] = u1 * ai + u2 * bi
        b[i] = v1 * ai + v2 * bi


def dot(a, b):
    s = 0
    for ai, bi in zip(a, b):
        if ai and bi:
            s += ai * bi
    return s


def scal(a, c):
    for i, ai in enumerate(a):
        if ai:
            a[i] = c * ai


IMPLEMENTATION = "python"
