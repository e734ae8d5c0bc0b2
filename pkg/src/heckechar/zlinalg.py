"""Exact linear algebra over Z and Q, plus mixed exact/ball matrices.

Integer matrices are handled column-major (lists of columns) because the
whole Hecke-character pipeline works by unimodular *column* operations: HNF
with saturation semantics, Smith normal form, kernels, and the dual-basis
computation with its snapping plan.  Mixed matrices carry Fraction entries
next to RealBall entries; integer column operations keep exact entries exact,
which is what makes the pipeline certifiable.
"""

from fractions import Fraction

from . import kernels
from .ball import RealBall, snap_rational
from .errors import (
    DimensionMismatch,
    NonIntegralPairing,
    SingularMatrix,
    ZeroVector,
)

# ---------------------------------------------------------------------------
# integer column matrices: list of columns, each a list of ints
# ---------------------------------------------------------------------------


def identity_cols(n):
    return [[1 if i == j else 0 for i in range(n)] for j in range(n)]


def transpose(rows):
    return [list(col) for col in zip(*rows)] if rows else []


def cols_of_rows(rows):
    return transpose(rows)


def rows_of_cols(cols):
    return transpose(cols)


def mat_mul_rows(a, b):
    """Row-major integer/rational matrix product."""
    if not a or not b:
        return []
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def _argmin_pivot(cols, active, r):
    best = None
    for j in active:
        v = abs(cols[j][r])
        if v and (best is None or v < abs(cols[best][r])):
            best = j
    return best


def hnf_columns(cols, nrows, desig_rows=None, transform=False, reduce_off=True):
    """Column HNF echelonization along ``desig_rows`` (default: all, top-down).

    Returns (pivots, cols, U) where pivots is a list of (row, col_index)
    in processing order, cols is the transformed matrix (in place on a copy),
    and U satisfies cols_out = cols_in * U (None unless requested).
    Pivot choice: smallest nonzero absolute value, then leftmost.
    """
    cols = [list(c) for c in cols]
    U = identity_cols(len(cols)) if transform else None
    if desig_rows is None:
        desig_rows = range(nrows)
    pivots = []
    pivot_set = set()
    for r in desig_rows:
        active = [j for j in range(len(cols)) if j not in pivot_set and cols[j][r]]
        while len(active) > 1:
            j0 = _argmin_pivot(cols, active, r)
            nxt = []
            for j in active:
                if j == j0:
                    continue
                q = cols[j][r] // cols[j0][r]
                if q:
                    kernels.addmul(cols[j], cols[j0], -q)
                    if U is not None:
                        kernels.addmul(U[j], U[j0], -q)
                if cols[j][r]:
                    nxt.append(j)
            nxt.append(j0)
            active = sorted(nxt)
        if not active:
            continue
        j0 = active[0]
        if cols[j0][r] < 0:
            kernels.scal(cols[j0], -1)
            if U is not None:
                kernels.scal(U[j0], -1)
        if reduce_off:
            for (_, jprev) in pivots:
                q = cols[jprev][r] // cols[j0][r]
                if q:
                    kernels.addmul(cols[jprev], cols[j0], -q)
                    if U is not None:
                        kernels.addmul(U[jprev], U[j0], -q)
        pivots.append((r, j0))
        pivot_set.add(j0)
    return pivots, cols, U


def hnf_basis_from_cols(cols, nrows):
    """Canonical HNF basis (list of columns) of the lattice the columns span."""
    pivots, work, _ = hnf_columns(cols, nrows)
    return [work[j] for (_, j) in pivots]


def hnf_saturate(gen_cols, sat_cols, nrows, desig_rows):
    """Joint column HNF: split G+H into a complement and a saturated part.

    Applies unimodular column operations to [G | H] so that the designated
    rows of the trailing columns vanish.  Returns (comp_cols, zero_cols, U):
    the zero_cols span the intersection of G+H with the subspace where the
    designated rows vanish (saturated in G+H by construction), and comp_cols
    complete them to a generating set of G+H.
    """
    for c in list(gen_cols) + list(sat_cols):
        if len(c) != nrows:
            raise DimensionMismatch("column length mismatch")
    cols = [list(c) for c in gen_cols] + [list(c) for c in sat_cols]
    pivots, work, U = hnf_columns(cols, nrows, desig_rows=desig_rows, transform=True)
    pivot_set = {j for (_, j) in pivots}
    comp = [work[j] for (_, j) in pivots]
    zero = [work[j] for j in range(len(work)) if j not in pivot_set]
    return comp, zero, U


def vec_in_lattice(basis_cols, pivot_rows, v):
    """Membership of integer vector v in the lattice with HNF basis columns.

    ``basis_cols`` and ``pivot_rows`` must be aligned and in processing order,
    as produced by hnf_columns/hnf_basis_from_cols.
    """
    v = list(v)
    for col, r in zip(basis_cols, pivot_rows):
        if v[r] % col[r]:
            return False
        q = v[r] // col[r]
        if q:
            kernels.addmul(v, col, -q)
    return not any(v)


def right_kernel_int(rows):
    """Basis (list of vectors) of {x : M x = 0} for integer row-major M."""
    ncols = len(rows[0]) if rows else 0
    cols = cols_of_rows(rows)
    if not cols:
        return [list(e) for e in identity_cols(ncols)]
    pivots, work, U = hnf_columns(cols, len(rows), transform=True)
    pivot_set = {j for (_, j) in pivots}
    return [U[j] for j in range(len(U)) if j not in pivot_set]


def left_kernel_int(rows):
    return right_kernel_int(rows_of_cols(rows)) if rows else []


def solve_int(rows, b):
    """One integer solution of M x = b (row-major M), or None."""
    nrows = len(rows)
    cols = cols_of_rows(rows)
    pivots, work, U = hnf_columns(cols, nrows, transform=True)
    v = list(b)
    coeffs = [0] * len(cols)
    for (r, j) in pivots:
        if v[r] % work[j][r]:
            return None
        q = v[r] // work[j][r]
        if q:
            kernels.addmul(v, work[j], -q)
        coeffs[j] = q
    if any(v):
        return None
    # x = U * coeffs  (columns of U express work-columns in original ones)
    x = [0] * len(cols)
    for j, c in enumerate(coeffs):
        if c:
            kernels.addmul(x, U[j], c)
    return x


def snf_with_transform(rows):
    """Smith normal form: returns (d, U, V) with U*M*V = diag(d), d_i | d_{i+1}."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    A = [list(r) for r in rows]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_op(i, j, q):  # row_i -= q*row_j
        kernels.addmul(A[i], A[j], -q)
        kernels.addmul(U[i], U[j], -q)

    def col_op(i, j, q):  # col_i -= q*col_j
        for row in A:
            row[i] -= q * row[j]
        for row in V:
            row[i] -= q * row[j]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    k = 0
    while k < min(m, n):
        # find nonzero pivot in the (k..) block, smallest |value|
        piv = None
        for i in range(k, m):
            for j in range(k, n):
                if A[i][j] and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(k, piv[0])
        swap_cols(k, piv[1])
        stable = False
        while not stable:
            stable = True
            for i in range(k + 1, m):
                if A[i][k]:
                    q = A[i][k] // A[k][k]
                    row_op(i, k, q)
                    if A[i][k]:
                        swap_rows(k, i)
                        stable = False
            for j in range(k + 1, n):
                if A[k][j]:
                    q = A[k][j] // A[k][k]
                    col_op(j, k, q)
                    if A[k][j]:
                        swap_cols(k, j)
                        stable = False
        # divisibility: pivot must divide the whole remaining block
        fixed = False
        while not fixed:
            fixed = True
            for i in range(k + 1, m):
                bad = next((j for j in range(k + 1, n) if A[i][j] % A[k][k]), None)
                if bad is not None:
                    row_op(k, i, -1)  # add row i to row k, then redo elimination
                    fixed = False
                    stable = False
                    while not stable:
                        stable = True
                        for i2 in range(k + 1, m):
                            if A[i2][k]:
                                q = A[i2][k] // A[k][k]
                                row_op(i2, k, q)
                                if A[i2][k]:
                                    swap_rows(k, i2)
                                    stable = False
                        for j2 in range(k + 1, n):
                            if A[k][j2]:
                                q = A[k][j2] // A[k][k]
                                col_op(j2, k, q)
                                if A[k][j2]:
                                    swap_cols(k, j2)
                                    stable = False
                    break
        if A[k][k] < 0:
            kernels.scal(A[k], -1)
            kernels.scal(U[k], -1)
        k += 1
    d = [A[i][i] for i in range(min(m, n))]
    return d, U, V


def rat_inverse(rows):
    """Exact inverse of a square matrix with Fraction entries (Gauss-Jordan)."""
    n = len(rows)
    A = [[Fraction(x) for x in r] + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, r in enumerate(rows)]
    for j in range(n):
        piv = next((i for i in range(j, n) if A[i][j] != 0), None)
        if piv is None:
            raise SingularMatrix("exact elimination found no pivot")
        A[j], A[piv] = A[piv], A[j]
        inv = 1 / A[j][j]
        A[j] = [x * inv for x in A[j]]
        for i in range(n):
            if i != j and A[i][j]:
                f = A[i][j]
                A[i] = [x - f * y for x, y in zip(A[i], A[j])]
    return [r[n:] for r in A]


def det_int(rows):
    """Exact determinant via fraction-free-ish Gauss over Q."""
    n = len(rows)
    A = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for j in range(n):
        piv = next((i for i in range(j, n) if A[i][j] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != j:
            A[j], A[piv] = A[piv], A[j]
            det = -det
        det *= A[j][j]
        for i in range(j + 1, n):
            if A[i][j]:
                f = A[i][j] / A[j][j]
                A[i] = [x - f * y for x, y in zip(A[i], A[j])]
    return det


# ---------------------------------------------------------------------------
# mixed exact/ball matrices
# ---------------------------------------------------------------------------


def _is_exact(x):
    return isinstance(x, (int, Fraction))


def _mixed_mul(a, b):
    if _is_exact(a) and _is_exact(b):
        return Fraction(a) * Fraction(b)
    if _is_exact(a) and a == 0:
        return Fraction(0)
    if _is_exact(b) and b == 0:
        return Fraction(0)
    return (a if isinstance(a, RealBall) else RealBall(Fraction(a))) * b


def _mixed_add(a, b):
    if _is_exact(a) and _is_exact(b):
        return Fraction(a) + Fraction(b)
    if isinstance(a, RealBall):
        return a + b
    return b + a


def mixed_dot(u, v):
    s = Fraction(0)
    for a, b in zip(u, v):
        s = _mixed_add(s, _mixed_mul(a, b))
    return s


class MixedMat:
    """Row-major matrix whose entries are Fractions or RealBalls.

    Column operations with integer coefficients preserve exactness entrywise.
    Optional column labels tag the pipeline blocks.
    """

    __slots__ = ("rows", "col_labels")

    def __init__(self, rows, col_labels=None):
        self.rows = [list(r) for r in rows]
        self.col_labels = list(col_labels) if col_labels is not None else None

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def copy(self):
        return MixedMat(self.rows, self.col_labels)

    def column(self, j):
        return [r[j] for r in self.rows]

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def to_ball(self):
        return [[x if isinstance(x, RealBall) else RealBall(Fraction(x)) for x in r]
                for r in self.rows]

    def col_addmul(self, dst, src, q):
        """column dst += q * column src, q integer/Fraction."""
        if q == 0:
            return
        for r in self.rows:
            r[dst] = _mixed_add(r[dst], _mixed_mul(q, r[src]))

    def col_scale(self, j, s):
        for r in self.rows:
            r[j] = _mixed_mul(s, r[j])

    def permute_cols(self, perm):
        self.rows = [[r[j] for j in perm] for r in self.rows]
        if self.col_labels is not None:
            self.col_labels = [self.col_labels[j] for j in perm]

    def drop_cols(self, idxs):
        keep = [j for j in range(self.ncols) if j not in set(idxs)]
        self.permute_cols(keep)

    def entry_int(self, i, j):
        x = self.rows[i][j]
        if not _is_exact(x) or Fraction(x).denominator != 1:
            raise ValueError(f"entry ({i},{j}) not an exact integer")
        return int(Fraction(x))


def mixed_hnf_saturate(M, desig_rows, float_cols=None):
    """In-place joint column HNF of a MixedMat along exact integer rows.

    Designated-row entries must be exact integers in every column touched.
    Returns (pivots, transform U) with the same conventions as hnf_columns.
    """
    cols = list(range(M.ncols))
    int_rows = [[M.entry_int(r, j) for j in cols] for r in desig_rows]
    # run the integer HNF on the designated submatrix, mirroring ops on M
    pivots, _, U = hnf_columns(cols_of_rows(int_rows), len(desig_rows), transform=True)
    apply_column_transform(M, U)
    # map pivot rows back to ambient indices
    pivots = [(desig_rows[r], j) for (r, j) in pivots]
    return pivots, U


def apply_column_transform(M, U):
    """M <- M * U entrywise (U column-major integer, unimodular)."""
    old_cols = M.columns()
    new_rows = [[None] * len(U) for _ in range(M.nrows)]
    for jnew, u in enumerate(U):
        acc = [Fraction(0)] * M.nrows
        for jold, q in enumerate(u):
            if q:
                col = old_cols[jold]
                acc = [_mixed_add(a, _mixed_mul(q, x)) for a, x in zip(acc, col)]
        for i in range(M.nrows):
            new_rows[i][jnew] = acc[i]
    M.rows = new_rows


def ball_inverse(rows):
    """Interval Gauss-Jordan inverse of a square mixed/ball matrix.

    Raises SingularMatrix when no pivot with interval excluding zero exists
    (genuinely singular input keeps failing at every precision).
    """
    n = len(rows)
    A = [[x if isinstance(x, RealBall) else RealBall(Fraction(x)) for x in r]
         + [RealBall(1 if i == j else 0) for j in range(n)]
         for i, r in enumerate(rows)]
    for j in range(n):
        piv = None
        best = None
        for i in range(j, n):
            e = A[i][j]
            if not e.contains_zero():
                mag = abs(e.mid)
                if best is None or mag > best:
                    best, piv = mag, i
        if piv is None:
            raise SingularMatrix(f"no certified pivot in column {j}")
        A[j], A[piv] = A[piv], A[j]
        inv = A[j][j]
        A[j] = [x / inv for x in A[j]]
        for i in range(n):
            if i != j:
                f = A[i][j]
                if not (f.is_exact_zero()):
                    A[i] = [x - f * y for x, y in zip(A[i], A[j])]
    return [r[n:] for r in A]


def dual_basis(A, plan, verify=True):
    """Rows of A^-1 with the exactness plan applied.

    ``A`` is a square MixedMat (columns = lattice generators); the result is
    a MixedMat whose row i is dual to column i.  ``plan`` is a list of
    (row_index, col_index, max_den) triples: those entries are snapped to
    rationals with denominator bounded by max_den.  A failed snap returns
    None so the caller can retry at a higher precision.
    """
    n = A.nrows
    if n != A.ncols:
        raise DimensionMismatch("dual basis needs a square matrix")
    inv = ball_inverse(A.rows)
    B = [[x for x in r] for r in inv]
    for (i, j, max_den) in plan:
        snapped = snap_rational(B[i][j], max_den)
        if snapped is None:
            return None
        B[i][j] = snapped
    M = MixedMat(B)
    if verify and not _verify_inverse(M, A):
        return None
    return M


def _verify_inverse(B, A):
    for i in range(B.nrows):
        for j in range(A.ncols):
            v = mixed_dot(B.rows[i], A.column(j))
            target = 1 if i == j else 0
            if _is_exact(v):
                if v != target:
                    return False
            elif not v.contains(target):
                return False
    return True


def project_v0(B, v0):
    """Replace each row r of B by r - (r.v0 / v0.v0) v0; v0 rational."""
    if all(x == 0 for x in v0):
        raise ZeroVector("projection direction is zero")
    v0 = [Fraction(x) for x in v0]
    denom = sum(x * x for x in v0)
    out = []
    for r in B.rows:
        coef = mixed_dot(r, v0)
        if _is_exact(coef) and coef == 0:
            out.append(list(r))
            continue
        factor = coef / denom
        out.append([_mixed_add(x, _mixed_mul(-1, _mixed_mul(factor, v))) if v else x
                    for x, v in zip(r, v0)])
    return MixedMat(out, B.col_labels)


def integer_kernel_pairing(B_rows, u_cols):
    """Basis of {x : sum_i x_i <B_i, u> = 0 for all u}, pairings snapped to Z.

    B_rows: MixedMat whose rows span the dual lattice; u_cols: list of ambient
    columns lying in the primal lattice, so every pairing must be an integer.
    """
    pair_rows = []
    for r in B_rows.rows:
        row = []
        for u in u_cols:
            v = mixed_dot(r, u)
            snapped = snap_rational(v, 1) if isinstance(v, RealBall) else (
                v if Fraction(v).denominator == 1 else None)
            if snapped is None or Fraction(snapped).denominator != 1:
                raise NonIntegralPairing(f"pairing {v} did not snap to an integer")
            row.append(int(snapped))
        pair_rows.append(row)
    if not pair_rows or not pair_rows[0]:
        return [list(e) for e in identity_cols(len(pair_rows))]
    return left_kernel_int(pair_rows)
