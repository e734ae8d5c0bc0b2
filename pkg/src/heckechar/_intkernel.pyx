# cython: boundscheck=False, wraparound=False
"""Compiled micro-kernels for exact integer column operations.

These are the inner loops of the HNF/SNF routines: every entry is an
arbitrary-precision Python int, so the win over the pure-Python fallback is
interpreter overhead only, but the column operations dominate the runtime of
ideal arithmetic and lattice reductions.
"""


def addmul(list a, list b, q):
    """a[i] += q * b[i] in place."""
    cdef Py_ssize_t i, n = len(a)
    if q == 0:
        return
    for i in range(n):
        bi = b[i]
        if bi:
            a[i] = a[i] + q * bi


def combine2(list a, list b, u1, u2, v1, v2):
    """(a, b) <- (u1*a + u2*b, v1*a + v2*b) in place."""
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        ai = a[i]
        bi = b[i]
        a[i] = u1 * ai + u2 * bi
        b[i] = v1 * ai + v2 * bi


def dot(list a, list b):
    cdef Py_ssize_t i, n = len(a)
    s = 0
    for i in range(n):
        ai = a[i]
        bi = b[i]
        if ai and bi:
            s += ai * bi
    return s


def scal(list a, c):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if a[i]:
            a[i] = c * a[i]


IMPLEMENTATION = "cython"
