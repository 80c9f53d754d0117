"""Exact dense linear algebra.

Field routines (rref, solve, inverse, nullspace) are generic over any
element type with operator arithmetic plus a field descriptor supplying
``zero``/``one``/``inv``.  Commutative-ring determinants use Bird's
division-free iteration, with an evaluation/interpolation fast path for
matrices of univariate polynomials.  Hermite normal form over F[x]
provides canonical module bases and kernels.
"""

from __future__ import annotations

from .polynomials import Poly, PolyRing, distinct_field_points, interpolate


class SingularMatrixError(ArithmeticError):
    pass


def identity(n, field):
    return [
        [field.one if i == j else field.zero for j in range(n)] for i in range(n)
    ]


def mat_mul(A, B, zero):
    n, k, m = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        Ai = A[i]
        for j in range(m):
            acc = zero
            for t in range(k):
                a = Ai[t]
                if a != zero:
                    acc = acc + a * B[t][j]
            row.append(acc)
        out.append(row)
    return out


def mat_vec(A, v, zero):
    out = []
    for row in A:
        acc = zero
        for a, x in zip(row, v):
            if a != zero:
                acc = acc + a * x
        out.append(acc)
    return out


def rref(rows, field):
    """Reduced row echelon form (on a copy); returns (rref_rows, pivot_cols)."""
    R = [list(r) for r in rows]
    if not R:
        return R, []
    ncols = len(R[0])
    zero = field.zero
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(R)):
            if R[i][col] != zero:
                pivot = i
                break
        if pivot is None:
            continue
        R[r], R[pivot] = R[pivot], R[r]
        inv = field.inv(R[r][col])
        if R[r][col] != field.one:
            R[r] = [x * inv for x in R[r]]
        for i in range(len(R)):
            if i != r and R[i][col] != zero:
                f = R[i][col]
                Ri, Rr = R[i], R[r]
                R[i] = [a - f * b for a, b in zip(Ri, Rr)]
        pivots.append(col)
        r += 1
        if r == len(R):
            break
    return R[:r] + [[zero] * ncols for _ in range(len(R) - r)], pivots


def rank(rows, field):
    return len(rref(rows, field)[1])


def reduce_against_rref(rref_rows, pivots, vec, field):
    """Residual of vec after elimination against an rref basis."""
    zero = field.zero
    v = list(vec)
    for row, col in zip(rref_rows, pivots):
        f = v[col]
        if f != zero:
            v = [a - f * b for a, b in zip(v, row)]
    return v


def in_row_span(rref_rows, pivots, vec, field):
    return all(x == field.zero for x in reduce_against_rref(rref_rows, pivots, vec, field))


class RowSpan:
    """Incrementally maintained row space in reduced echelon form."""

    def __init__(self, field, ncols):
        self.field = field
        self.ncols = ncols
        self.rows = []
        self.pivots = []

    def reduce(self, vec):
        v = list(vec)
        zero = self.field.zero
        for row, col in zip(self.rows, self.pivots):
            f = v[col]
            if f != zero:
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def contains(self, vec) -> bool:
        zero = self.field.zero
        return all(x == zero for x in self.reduce(vec))

    def add(self, vec) -> bool:
        """Insert vec; True when it enlarged the span."""
        v = self.reduce(vec)
        zero = self.field.zero
        pivot = None
        for col, x in enumerate(v):
            if x != zero:
                pivot = col
                break
        if pivot is None:
            return False
        inv = self.field.inv(v[pivot])
        v = [x * inv for x in v]
        for i, (row, col) in enumerate(zip(self.rows, self.pivots)):
            f = row[pivot]
            if f != zero:
                self.rows[i] = [a - f * b for a, b in zip(row, v)]
        at = 0
        while at < len(self.pivots) and self.pivots[at] < pivot:
            at += 1
        self.rows.insert(at, v)
        self.pivots.insert(at, pivot)
        return True

    @property
    def dim(self):
        return len(self.rows)


def nullspace(rows, ncols, field):
    """Basis of {v : rows . v = 0}, canonical w.r.t. rref free columns."""
    R, pivots = rref(rows, field)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for row, pc in zip(R, pivots):
            coeff = row[fc]
            if coeff != field.zero:
                v[pc] = -coeff
        basis.append(v)
    return basis


def solve_unique(A, b, field):
    """Solve A x = b for square nonsingular A."""
    n = len(A)
    aug = [list(A[i]) + [b[i]] for i in range(n)]
    R, pivots = rref(aug, field)
    if pivots != list(range(n)):
        raise SingularMatrixError("matrix is singular or system inconsistent")
    return [R[i][n] for i in range(n)]


def solve_any(A, b, field):
    """One solution of A x = b, or None if inconsistent (A may be rectangular)."""
    if not A:
        return None
    ncols = len(A[0])
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(aug, field)
    if ncols in pivots:
        return None
    x = [field.zero] * ncols
    for row, col in zip(R, pivots):
        x[col] = row[ncols]
    return x


def invert(A, field):
    n = len(A)
    aug = [list(A[i]) + identity(n, field)[i] for i in range(n)]
    R, pivots = rref(aug, field)
    if pivots != list(range(n)):
        raise SingularMatrixError("matrix is not invertible")
    return [row[n:] for row in R[:n]]


def det_field(A, field):
    n = len(A)
    M = [list(r) for r in A]
    zero = field.zero
    det = field.one
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if M[i][col] != zero:
                pivot = i
                break
        if pivot is None:
            return zero
        if pivot != col:
            M[col], M[pivot] = M[pivot], M[col]
            det = -det
        p = M[col][col]
        det = det * p
        inv = field.inv(p)
        for i in range(col + 1, n):
            f = M[i][col]
            if f != zero:
                f = f * inv
                Mi, Mc = M[i], M[col]
                M[i] = [a - f * b for a, b in zip(Mi, Mc)]
    return det


def matvec_field_action(A, vec, ring):
    """A over the ground field applied to a vector over a coefficient
    ring, entry-wise through ring.scale."""
    out = []
    for row in A:
        acc = ring.zero
        for f, s in zip(row, vec):
            if f:
                acc = acc + ring.scale(f, s)
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# determinants over commutative rings
# ---------------------------------------------------------------------------


def det_bird(A, ring):
    """Division-free determinant (Bird's iteration), any commutative ring."""
    n = len(A)
    if n == 0:
        return ring.one
    if n == 1:
        return A[0][0]
    zero = ring.zero
    X = [list(r) for r in A]
    for _ in range(n - 1):
        mu = []
        tail = zero
        diag = [zero] * n
        for i in range(n - 1, -1, -1):
            diag[i] = tail
            tail = tail + X[i][i]
        for i in range(n):
            row = [zero] * n
            for j in range(i + 1, n):
                row[j] = X[i][j]
            row[i] = -diag[i]
            mu.append(row)
        X = mat_mul(mu, A, zero)
    d = X[0][0]
    return d if n % 2 else -d


def _row_degree_bound(M, rhs=None):
    bound = 0
    for i, row in enumerate(M):
        degs = [p.total_degree() for p in row]
        if rhs is not None:
            degs.append(rhs[i].total_degree())
        bound += max(max(degs), 0)
    return bound


def det_commutative(M, ring):
    """Determinant over a commutative coefficient ring."""
    if isinstance(ring, PolyRing) and ring.nvars == 1:
        bound = _row_degree_bound(M)
        sz = ring.field.size()
        if sz is None or sz > bound + 1:
            return _det_poly_interpolated(M, ring, bound)
    return det_bird(M, ring)


def _det_poly_interpolated(M, ring, bound):
    points = distinct_field_points(ring.field, bound + 1)
    values = []
    for t in points:
        Mt = [[p.evaluate([t]) for p in row] for row in M]
        values.append(det_field(Mt, ring.field))
    return interpolate(ring, points, values)


def cramer_solve_commutative(M, rhs, ring):
    """(det M, [det of M with column m replaced by rhs]) over a
    commutative ring; division-free."""
    n = len(M)
    if isinstance(ring, PolyRing) and ring.nvars == 1:
        bound = _row_degree_bound(M, rhs)
        sz = ring.field.size()
        if sz is None or sz > bound + 1:
            points = distinct_field_points(ring.field, bound + 1)
            dets = []
            cols = [[] for _ in range(n)]
            for t in points:
                Mt = [[p.evaluate([t]) for p in row] for row in M]
                bt = [p.evaluate([t]) for p in rhs]
                dets.append(det_field(Mt, ring.field))
                for m in range(n):
                    Mm = [list(row) for row in Mt]
                    for i in range(n):
                        Mm[i][m] = bt[i]
                    cols[m].append(det_field(Mm, ring.field))
            det = interpolate(ring, points, dets)
            sols = [interpolate(ring, points, cols[m]) for m in range(n)]
            return det, sols
    det = det_bird(M, ring)
    sols = []
    for m in range(n):
        Mm = [list(row) for row in M]
        for i in range(n):
            Mm[i][m] = rhs[i]
        sols.append(det_bird(Mm, ring))
    return det, sols


# ---------------------------------------------------------------------------
# Hermite normal form over F[x]
# ---------------------------------------------------------------------------


def hnf_with_transform(rows, polyring: PolyRing):
    """Row HNF of a matrix over univariate F[x].

    Returns (H, U) with U unimodular, U * rows = H, pivots monic and
    entries above each pivot reduced below its degree.  Zero rows of H
    sit at the bottom; the matching rows of U span the left kernel.
    """
    if polyring.nvars != 1:
        raise ValueError("HNF requires a univariate polynomial ring")
    m = len(rows)
    H = [list(r) for r in rows]
    k = len(H[0]) if m else 0
    U = identity(m, polyring)
    r = 0
    for col in range(k):
        while True:
            cands = [i for i in range(r, m) if H[i][col].terms]
            if not cands:
                break
            i0 = min(cands, key=lambda i: (H[i][col].total_degree(), i))
            if i0 != r:
                H[r], H[i0] = H[i0], H[r]
                U[r], U[i0] = U[i0], U[r]
            if len(cands) == 1:
                break
            for i in range(r + 1, m):
                if H[i][col].terms:
                    q, _ = H[i][col].divmod_univ(H[r][col])
                    if q.terms:
                        H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                        U[i] = [a - q * b for a, b in zip(U[i], U[r])]
        if r < m and H[r][col].terms:
            lc = H[r][col].lead_coeff()
            if lc != polyring.field.one:
                inv = polyring.field.inv(lc)
                H[r] = [p.scale_coeff(inv) for p in H[r]]
                U[r] = [p.scale_coeff(inv) for p in U[r]]
            for i in range(r):
                if H[i][col].terms:
                    q, _ = H[i][col].divmod_univ(H[r][col])
                    if q.terms:
                        H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                        U[i] = [a - q * b for a, b in zip(U[i], U[r])]
            r += 1
            if r == m:
                break
    return H, U


def left_kernel(rows, polyring: PolyRing):
    """Basis (as rows) of {v : v * rows = 0} over univariate F[x]."""
    H, U = hnf_with_transform(rows, polyring)
    out = []
    for h, u in zip(H, U):
        if all(not p.terms for p in h):
            out.append(u)
    return out
