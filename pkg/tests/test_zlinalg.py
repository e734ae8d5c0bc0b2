import random
from fractions import Fraction

import pytest

from heckechar.ball import RealBall, workprec
from heckechar.errors import NonIntegralPairing, SingularMatrix, ZeroVector
from heckechar.zlinalg import (
    MixedMat,
    ball_inverse,
    det_int,
    dual_basis,
    hnf_basis_from_cols,
    hnf_columns,
    hnf_saturate,
    integer_kernel_pairing,
    left_kernel_int,
    mat_mul_rows,
    mixed_dot,
    project_v0,
    rat_inverse,
    right_kernel_int,
    snf_with_transform,
    solve_int,
    transpose,
    vec_in_lattice,
)


def rand_mat(rng, m, n, lo=-9, hi=9):
    return [[rng.randrange(lo, hi + 1) for _ in range(n)] for _ in range(m)]


def lattice_equal(cols_a, cols_b, nrows):
    ha = hnf_basis_from_cols(cols_a, nrows)
    hb = hnf_basis_from_cols(cols_b, nrows)
    return ha == hb


# -- HNF / saturation ---------------------------------------------------------


def test_hnf_saturate_span_preserved_random():
    rng = random.Random(99)
    for _ in range(500):
        m = rng.randrange(1, 7)
        g = rng.randrange(0, 4)
        h = rng.randrange(0, 4)
        G = [ [rng.randrange(-9, 10) for _ in range(m)] for _ in range(g)]
        H = [ [rng.randrange(-9, 10) for _ in range(m)] for _ in range(h)]
        desig = sorted(rng.sample(range(m), rng.randrange(0, m + 1)))
        comp, zero, U = hnf_saturate(G, H, m, desig)
        assert lattice_equal(G + H, comp + zero, m)
        for c in zero:
            assert all(c[r] == 0 for r in desig)


def test_hnf_saturate_saturation_property():
    # any lattice vector with zero designated rows lies in the zero-column span
    rng = random.Random(7)
    for _ in range(100):
        m = rng.randrange(2, 6)
        cols = [[rng.randrange(-5, 6) for _ in range(m)] for _ in range(rng.randrange(1, 5))]
        desig = sorted(rng.sample(range(m), rng.randrange(1, m)))
        comp, zero, _ = hnf_saturate(cols, [], m, desig)
        # random combos of all columns that land in the zero-desig subspace
        for _ in range(20):
            coeffs = [rng.randrange(-3, 4) for _ in cols]
            v = [sum(c * col[i] for c, col in zip(coeffs, cols)) for i in range(m)]
            if all(v[r] == 0 for r in desig):
                if zero:
                    basis = hnf_basis_from_cols(zero, m)
                    pivots, _, _ = hnf_columns(basis, m)
                    assert vec_in_lattice([basis[i] for i in range(len(basis))],
                                          [p[0] for p in pivots], v)
                else:
                    assert not any(v)


def test_hnf_saturate_paper_step1_shape():
    # roots of unity vs residue relation lattice over Q(sqrt-23), m = 3:
    # columns (log_m | arg) for [Lambda_m basis, zeta], designated = log rows
    zeta = [1, 1, Fraction(1, 2)]
    lam1 = [2, 0, 0]
    lam2 = [0, 2, 0]
    comp, zero, _ = hnf_saturate([lam1, lam2], [zeta], 3, [0, 1])
    assert len(zero) == 1  # <zeta(m)> has rank 1: zeta^2 = 1 trivial residue
    assert zero[0][:2] == [0, 0]
    assert abs(zero[0][2]) == 1  # 2 * arg(-1)/2pi, up to inversion of zeta(m)
    assert len(comp) == 2


def test_hnf_saturate_empty_G():
    H = [[2, 4], [0, 6]]
    comp, zero, U = hnf_saturate([], H, 2, [0, 1])
    assert zero == []
    assert lattice_equal(H, comp, 2)


# -- SNF -----------------------------------------------------------------------


def snf_check(M):
    d, U, V = snf_with_transform(M)
    assert abs(det_int(U)) == 1
    assert abs(det_int(V)) == 1
    D = mat_mul_rows(mat_mul_rows(U, M), V)
    for i in range(len(M)):
        for j in range(len(M[0])):
            assert D[i][j] == (d[i] if i == j and i < len(d) else 0)
    for i in range(len(d) - 1):
        if d[i + 1]:
            assert d[i + 1] % max(d[i], 1) == 0 or d[i] == 0
    return d


def test_snf_examples():
    assert snf_check([[2, 0], [0, 3]]) == [1, 6]
    assert snf_check([[0, 0], [0, 0]]) == [0, 0]
    # relation matrix of (Z/2)^2 (the (Z_F/3)^x of Q(sqrt-23))
    assert snf_check([[2, 0], [0, 2]]) == [2, 2]


def test_snf_random():
    rng = random.Random(3)
    for _ in range(200):
        m, n = rng.randrange(1, 5), rng.randrange(1, 5)
        M = rand_mat(rng, m, n)
        d = snf_check(M)
        assert all(x >= 0 for x in d)


# -- kernels / solve -------------------------------------------------------------


def test_kernels_random():
    rng = random.Random(17)
    for _ in range(200):
        m, n = rng.randrange(1, 5), rng.randrange(1, 5)
        M = rand_mat(rng, m, n)
        for k in right_kernel_int(M):
            assert all(sum(M[i][j] * k[j] for j in range(n)) == 0 for i in range(m))
        for k in left_kernel_int(M):
            assert all(sum(k[i] * M[i][j] for i in range(m)) == 0 for j in range(n))


def test_solve_int():
    M = [[2, 0], [1, 3]]
    x = solve_int(M, [4, 8])
    assert x is not None
    assert [2 * x[0], x[0] + 3 * x[1]] == [4, 8]
    assert solve_int(M, [1, 0]) is None  # 2x = 1 unsolvable over Z


# -- exact and ball inverses ------------------------------------------------------


def test_rat_inverse():
    M = [[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]]
    Minv = rat_inverse(M)
    assert mat_mul_rows(M, Minv) == [[1, 0], [0, 1]]
    with pytest.raises(SingularMatrix):
        rat_inverse([[1, 2], [2, 4]])


def test_ball_inverse_contains_exact():
    rng = random.Random(5)
    with workprec(96):
        for _ in range(50):
            n = rng.randrange(1, 5)
            M = rand_mat(rng, n, n)
            if det_int(M) == 0:
                continue
            exact = rat_inverse(M)
            approx = ball_inverse(M)
            for i in range(n):
                for j in range(n):
                    assert approx[i][j].contains(exact[i][j])


# -- dual basis / projection / pairing kernel -------------------------------------


def test_dual_basis_identity():
    with workprec(64):
        A = MixedMat([[1, 0], [0, 1]])
        B = dual_basis(A, [(i, j, 1) for i in range(2) for j in range(2)])
    assert B.rows == [[1, 0], [0, 1]]


def test_dual_basis_duplicate_columns():
    with workprec(64):
        A = MixedMat([[1, 1], [2, 2]])
        with pytest.raises(SingularMatrix):
            dual_basis(A, [])


def test_dual_basis_mixed_snap():
    # columns: (3, ball(log-ish)) and (0, 1/2); duals must snap per plan
    with workprec(128):
        t = RealBall(5).sqrt()  # irrational stand-in
        A = MixedMat([[3, 0], [t, Fraction(1, 2)]])
        B = dual_basis(A, [(0, 0, 3), (1, 1, 2)])
        assert B.rows[0][0] == Fraction(1, 3)
        assert B.rows[1][1] == 2
        # remaining entry is the ball -2t/3; the duality relation certifies it
        assert mixed_dot(B.rows[1], A.column(0)).contains(0)


def test_project_v0():
    with workprec(96):
        B = MixedMat([[Fraction(1), Fraction(0)]])
        v0 = [1, 2]
        P = project_v0(B, v0)
        assert P.rows[0] == [Fraction(4, 5), Fraction(-2, 5)]
        # parallel row projects to zero
        Q = project_v0(MixedMat([[Fraction(1), Fraction(2)]]), v0)
        assert Q.rows[0] == [0, 0]
        # orthogonal row unchanged
        R = project_v0(MixedMat([[Fraction(-2), Fraction(1)]]), v0)
        assert R.rows[0] == [-2, 1]
        with pytest.raises(ZeroVector):
            project_v0(B, [0, 0])


def test_project_v0_idempotent_and_orthogonal():
    rng = random.Random(11)
    with workprec(96):
        for _ in range(50):
            n = rng.randrange(1, 5)
            v0 = [rng.randrange(-3, 4) for _ in range(n)]
            if not any(v0):
                continue
            B = MixedMat([[Fraction(rng.randrange(-9, 10), rng.randrange(1, 5))
                           for _ in range(n)]])
            P = project_v0(B, v0)
            assert mixed_dot(P.rows[0], [Fraction(x) for x in v0]) == 0
            PP = project_v0(P, v0)
            assert PP.rows == P.rows


def test_integer_kernel_pairing():
    with workprec(96):
        B = MixedMat([[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]])
        # U empty: full row span
        ker = integer_kernel_pairing(B, [])
        assert len(ker) == 2
        # U = standard basis: zero subgroup
        ker = integer_kernel_pairing(B, [[1, 0], [0, 1]])
        assert ker == []
        # pairing with ball entries snapping to ints
        tiny = RealBall.from_endpoints(Fraction(-1, 2**70), Fraction(1, 2**70))
        B2 = MixedMat([[RealBall(1) + tiny, Fraction(0)], [Fraction(0), Fraction(1)]])
        ker = integer_kernel_pairing(B2, [[1, 0]])
        assert len(ker) == 1 and ker[0][0] == 0
        wide = RealBall.from_endpoints(Fraction(1, 3), Fraction(2, 3))
        with pytest.raises(NonIntegralPairing):
            integer_kernel_pairing(MixedMat([[wide]]), [[1]])
