"""Finite-dimensional algebras given by structure constants.

A :class:`StructAlgebra` stores a sparse multiplication table over an
exact field and verifies associativity and the unit laws at
construction.  The module also provides the standard constructions
(matrix algebras, quaternion algebras, triangular algebras, direct sums,
tensor products, quotients), Jacobson radicals in characteristic zero,
and the spanning-matrix machinery shared by the central-simplicity test,
coordinate extraction and dual systems.
"""

from __future__ import annotations

from . import linalg


class AlgebraError(Exception):
    pass


class UnsupportedOperation(Exception):
    pass


class StructAlgebra:
    """An associative unital algebra with basis b_0..b_{d-1} and sparse
    structure constants ``table[i][j] = ((k, coeff), ...)``."""

    def __init__(self, field, table, unit, labels=None, verified=False):
        self.field = field
        self.dim = len(table)
        self.table = tuple(
            tuple(tuple((k, c) for (k, c) in row if not field.is_zero(c)) for row in trow)
            for trow in table
        )
        self.unit = tuple(unit)
        if labels is not None and len(labels) != self.dim:
            raise AlgebraError("label count does not match dimension")
        self.labels = tuple(labels) if labels else tuple("b%d" % i for i in range(self.dim))
        if len(self.unit) != self.dim or any(len(r) != self.dim for r in self.table):
            raise AlgebraError("structure constant table has wrong shape")
        self._left_mats = None
        self._trace_left = None
        self._spanning = None
        self._spanning_inverse = False
        self._dual_cache = {}
        if not verified:
            self._verify_structure()

    # -- construction-time checks --

    def _verify_structure(self):
        d = self.dim
        zero = self.field.zero
        for i in range(d):
            ei = tuple(self.field.one if t == i else zero for t in range(d))
            if self.mul_coords(self.unit, ei) != ei:
                raise AlgebraError("unit law fails on the left of %s" % self.labels[i])
            if self.mul_coords(ei, self.unit) != ei:
                raise AlgebraError("unit law fails on the right of %s" % self.labels[i])
        table = self.table
        for i in range(d):
            for j in range(d):
                ij = table[i][j]
                for l in range(d):
                    left = {}
                    for k, c in ij:
                        for m, g in table[k][l]:
                            v = left.get(m, zero) + c * g
                            if self.field.is_zero(v):
                                left.pop(m, None)
                            else:
                                left[m] = v
                    right = {}
                    for k, c in table[j][l]:
                        for m, g in table[i][k]:
                            v = right.get(m, zero) + c * g
                            if self.field.is_zero(v):
                                right.pop(m, None)
                            else:
                                right[m] = v
                    if left != right:
                        raise AlgebraError(
                            "associativity fails on (%s, %s, %s)"
                            % (self.labels[i], self.labels[j], self.labels[l])
                        )

    # -- raw coordinate arithmetic --

    def mul_coords(self, u, v):
        zero = self.field.zero
        out = [zero] * self.dim
        table = self.table
        for i, ui in enumerate(u):
            if self.field.is_zero(ui):
                continue
            row = table[i]
            for j, vj in enumerate(v):
                if self.field.is_zero(vj):
                    continue
                f = ui * vj
                for k, c in row[j]:
                    out[k] = out[k] + f * c
        return tuple(out)

    def element(self, coords) -> "AlgElement":
        coords = tuple(self.field.of(c) if isinstance(c, (int, str)) else c for c in coords)
        if len(coords) != self.dim:
            raise AlgebraError("coordinate vector has wrong length")
        return AlgElement(self, coords)

    def basis_element(self, i) -> "AlgElement":
        return AlgElement(
            self,
            tuple(self.field.one if t == i else self.field.zero for t in range(self.dim)),
        )

    def basis(self):
        return [self.basis_element(i) for i in range(self.dim)]

    @property
    def one(self) -> "AlgElement":
        return AlgElement(self, self.unit)

    @property
    def zero(self) -> "AlgElement":
        return AlgElement(self, (self.field.zero,) * self.dim)

    def left_mult_matrix(self, coords):
        zero = self.field.zero
        M = [[zero] * self.dim for _ in range(self.dim)]
        for i, ui in enumerate(coords):
            if self.field.is_zero(ui):
                continue
            for k in range(self.dim):
                for m, c in self.table[i][k]:
                    M[m][k] = M[m][k] + ui * c
        return M

    def right_mult_matrix(self, coords):
        zero = self.field.zero
        M = [[zero] * self.dim for _ in range(self.dim)]
        for j, uj in enumerate(coords):
            if self.field.is_zero(uj):
                continue
            for k in range(self.dim):
                for m, c in self.table[k][j]:
                    M[m][k] = M[m][k] + uj * c
        return M

    def trace_left_vector(self):
        if self._trace_left is None:
            out = []
            for i in range(self.dim):
                acc = self.field.zero
                for m in range(self.dim):
                    for k, c in self.table[i][m]:
                        if k == m:
                            acc = acc + c
                out.append(acc)
            self._trace_left = out
        return self._trace_left

    def is_commutative(self) -> bool:
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.table[i][j] != self.table[j][i]:
                    return False
        return True

    # -- the spanning matrix of two-sided multiplications --

    def spanning_matrix(self):
        """Rows (t, m), columns (k, l): coordinate m of b_l b_t b_k.

        Column (k, l) is the vectorization of x -> b_l x b_k; the matrix
        is invertible exactly when these d^2 operators span all linear
        maps on the algebra.
        """
        if self._spanning is None:
            d = self.dim
            zero = self.field.zero
            E = [[zero] * (d * d) for _ in range(d * d)]
            for l in range(d):
                for t in range(d):
                    lt = self.table[l][t]
                    for k in range(d):
                        col = k * d + l
                        for m0, c in lt:
                            for m, g in self.table[m0][k]:
                                row = t * d + m
                                E[row][col] = E[row][col] + c * g
            self._spanning = E
        return self._spanning

    def spanning_inverse(self):
        """Inverse of the spanning matrix, or None when it is singular."""
        if self._spanning_inverse is False:
            try:
                self._spanning_inverse = linalg.invert(self.spanning_matrix(), self.field)
            except linalg.SingularMatrixError:
                self._spanning_inverse = None
        return self._spanning_inverse

    def spanning_rank_deficit(self) -> int:
        d2 = self.dim * self.dim
        return d2 - linalg.rank(self.spanning_matrix(), self.field)

    def change_field(self, new_field, convert) -> "StructAlgebra":
        table = tuple(
            tuple(tuple((k, convert(c)) for (k, c) in cell) for cell in row)
            for row in self.table
        )
        unit = tuple(convert(c) for c in self.unit)
        return StructAlgebra(new_field, table, unit, labels=self.labels, verified=True)

    def to_json(self):
        field = self.field
        dense = [
            [
                [field.elem_to_json(_cell_coeff(self, i, j, k)) for k in range(self.dim)]
                for j in range(self.dim)
            ]
            for i in range(self.dim)
        ]
        return {
            "dim": self.dim,
            "structure_constants": dense,
            "unit": [field.elem_to_json(c) for c in self.unit],
            "labels": list(self.labels),
        }

    def __eq__(self, other):
        return (
            isinstance(other, StructAlgebra)
            and other.field == self.field
            and other.table == self.table
            and other.unit == self.unit
        )

    def __hash__(self):
        return hash((self.field, self.dim, self.unit))

    def __repr__(self):
        return "StructAlgebra(dim=%d over %s)" % (self.dim, self.field.describe())


def _cell_coeff(A, i, j, k):
    for kk, c in A.table[i][j]:
        if kk == k:
            return c
    return A.field.zero


def verify_central_simple(A: StructAlgebra) -> bool:
    """True iff products of left/right basis multiplications span all
    linear maps on A, i.e. A is central simple."""
    return A.spanning_inverse() is not None


class AlgElement:
    """Element of a StructAlgebra as a coordinate vector."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: StructAlgebra, coords):
        self.algebra = algebra
        self.coords = tuple(coords)

    def _check(self, other):
        if not isinstance(other, AlgElement) or other.algebra != self.algebra:
            raise AlgebraError("elements of different algebras")
        return other

    def __add__(self, other):
        other = self._check(other)
        return AlgElement(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        other = self._check(other)
        return AlgElement(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return AlgElement(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other):
        other = self._check(other)
        return AlgElement(self.algebra, self.algebra.mul_coords(self.coords, other.coords))

    def scale(self, f):
        return AlgElement(self.algebra, tuple(f * a for a in self.coords))

    def is_zero(self) -> bool:
        field = self.algebra.field
        return all(field.is_zero(a) for a in self.coords)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self.algebra == other.algebra and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        parts = []
        for lbl, c in zip(self.algebra.labels, self.coords):
            if not self.algebra.field.is_zero(c):
                parts.append("%s*%s" % (c, lbl))
        return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def matrix_algebra(n: int, field) -> StructAlgebra:
    """M_n(F) with the matrix-unit basis e_11, e_12, ..., e_nn (row-major)."""
    if n < 1:
        raise AlgebraError("matrix algebra needs n >= 1")
    d = n * n
    one = field.one

    def idx(i, j):
        return i * n + j

    table = [[() for _ in range(d)] for _ in range(d)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if j == k:
                        table[idx(i, j)][idx(k, l)] = ((idx(i, l), one),)
    unit = [field.zero] * d
    for i in range(n):
        unit[idx(i, i)] = one
    labels = ["e%d%d" % (i + 1, j + 1) for i in range(n) for j in range(n)]
    return StructAlgebra(field, table, unit, labels=labels, verified=True)


def quaternion_algebra(alpha, beta, field) -> StructAlgebra:
    """Basis {1, i, j, k} with i^2 = alpha, j^2 = beta, ij = k = -ji."""
    alpha = field.of(alpha) if isinstance(alpha, (int, str)) else alpha
    beta = field.of(beta) if isinstance(beta, (int, str)) else beta
    if field.is_zero(alpha) or field.is_zero(beta):
        raise AlgebraError("quaternion parameters must be nonzero")
    if field.characteristic == 2:
        raise AlgebraError("quaternion algebras need characteristic != 2")
    one = field.one
    U, I, J, K = 0, 1, 2, 3
    t = [[() for _ in range(4)] for _ in range(4)]
    for x in range(4):
        t[U][x] = ((x, one),)
        t[x][U] = ((x, one),)
    t[I][I] = ((U, alpha),)
    t[I][J] = ((K, one),)
    t[I][K] = ((J, alpha),)
    t[J][I] = ((K, -one),)
    t[J][J] = ((U, beta),)
    t[J][K] = ((I, -beta),)
    t[K][I] = ((J, -alpha),)
    t[K][J] = ((I, beta),)
    t[K][K] = ((U, -(alpha * beta)),)
    unit = (one, field.zero, field.zero, field.zero)
    return StructAlgebra(field, t, unit, labels=("1", "i", "j", "k"))


def upper_triangular_algebra(n: int, field) -> StructAlgebra:
    """Upper-triangular n x n matrices."""
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    index = {p: t for t, p in enumerate(pairs)}
    d = len(pairs)
    one = field.one
    table = [[() for _ in range(d)] for _ in range(d)]
    for (i, j), a in index.items():
        for (k, l), b in index.items():
            if j == k:
                table[a][b] = ((index[(i, l)], one),)
    unit = [field.zero] * d
    for i in range(n):
        unit[index[(i, i)]] = one
    labels = ["e%d%d" % (i + 1, j + 1) for (i, j) in pairs]
    return StructAlgebra(field, table, unit, labels=labels, verified=True)


def truncated_poly_algebra(field, k: int) -> StructAlgebra:
    """F[t]/(t^k) with basis 1, t, ..., t^(k-1)."""
    if k < 1:
        raise AlgebraError("truncation order must be >= 1")
    one = field.one
    table = [
        [(((i + j), one),) if i + j < k else () for j in range(k)] for i in range(k)
    ]
    unit = [one] + [field.zero] * (k - 1)
    labels = ["1"] + ["t^%d" % i if i > 1 else "t" for i in range(1, k)]
    return StructAlgebra(field, table, unit, labels=labels, verified=True)


def direct_sum_algebra(A: StructAlgebra, B: StructAlgebra) -> StructAlgebra:
    """A x B with componentwise operations."""
    if A.field != B.field:
        raise AlgebraError("direct sum needs a common ground field")
    dA = A.dim
    table = [[() for _ in range(dA + B.dim)] for _ in range(dA + B.dim)]
    for i in range(dA):
        for j in range(dA):
            table[i][j] = A.table[i][j]
    for i in range(B.dim):
        for j in range(B.dim):
            table[dA + i][dA + j] = tuple((dA + k, c) for k, c in B.table[i][j])
    unit = list(A.unit) + list(B.unit)
    labels = ["(%s,0)" % l for l in A.labels] + ["(0,%s)" % l for l in B.labels]
    return StructAlgebra(A.field, table, unit, labels=labels, verified=True)


def tensor_struct(A: StructAlgebra, B: StructAlgebra) -> StructAlgebra:
    """The tensor product algebra on the basis a_i (x) b_j (row-major)."""
    if A.field != B.field:
        raise AlgebraError("tensor product needs a common ground field")
    dB = B.dim
    d = A.dim * dB
    table = [[() for _ in range(d)] for _ in range(d)]
    for i in range(A.dim):
        for j in range(A.dim):
            tij = A.table[i][j]
            for a in range(dB):
                for b in range(dB):
                    cell = []
                    for k, cA in tij:
                        for c, cB in B.table[a][b]:
                            v = cA * cB
                            if not A.field.is_zero(v):
                                cell.append((k * dB + c, v))
                    table[i * dB + a][j * dB + b] = tuple(cell)
    unit = [A.field.zero] * d
    for i, cA in enumerate(A.unit):
        if not A.field.is_zero(cA):
            for a, cB in enumerate(B.unit):
                v = cA * cB
                if not A.field.is_zero(v):
                    unit[i * dB + a] = v
    labels = ["%s(x)%s" % (la, lb) for la in A.labels for lb in B.labels]
    return StructAlgebra(A.field, table, unit, labels=labels, verified=True)


def from_dense_table(field, gamma, unit, labels=None) -> StructAlgebra:
    """Build (and fully verify) an algebra from a dense coefficient table
    gamma[i][j][k]."""
    d = len(gamma)
    table = []
    for i in range(d):
        row = []
        for j in range(d):
            cell = []
            for k in range(d):
                c = gamma[i][j][k]
                c = field.of(c) if isinstance(c, (int, str)) else c
                if not field.is_zero(c):
                    cell.append((k, c))
            row.append(tuple(cell))
        table.append(row)
    unit = [field.of(c) if isinstance(c, (int, str)) else c for c in unit]
    return StructAlgebra(field, table, unit, labels=labels)


# ---------------------------------------------------------------------------
# radicals and quotients (characteristic zero)
# ---------------------------------------------------------------------------


def jacobson_radical(A: StructAlgebra):
    """Basis of the radical via the trace form of left multiplication.

    The kernel of (x, y) -> trace(L_{xy}) is the radical in
    characteristic zero; the result is verified to be a nilpotent ideal.
    """
    if A.field.characteristic != 0:
        raise UnsupportedOperation("radical computation requires characteristic 0")
    d = A.dim
    trL = A.trace_left_vector()
    zero = A.field.zero
    G = [[zero] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            acc = zero
            for k, c in A.table[i][j]:
                acc = acc + c * trL[k]
            G[i][j] = acc
    basis = linalg.nullspace(G, d, A.field)
    span, pivots = linalg.rref(basis, A.field)
    span = [row for row in span if any(not A.field.is_zero(x) for x in row)]
    for v in span:
        for i in range(d):
            ei = tuple(A.field.one if t == i else zero for t in range(d))
            for prod in (A.mul_coords(v, ei), A.mul_coords(ei, v)):
                if not linalg.in_row_span(span, pivots, prod, A.field):
                    raise AlgebraError("radical candidate is not an ideal")
    current = span
    for _ in range(d + 1):
        if not current:
            break
        products = []
        for u in current:
            for v in span:
                products.append(list(A.mul_coords(u, v)))
        nxt, _ = linalg.rref(products, A.field)
        nxt = [row for row in nxt if any(not A.field.is_zero(x) for x in row)]
        if len(nxt) >= len(current):
            if nxt == current:
                raise AlgebraError("radical candidate is not nilpotent")
        current = nxt
    else:
        if current:
            raise AlgebraError("radical candidate is not nilpotent")
    return [A.element(v) for v in span]


def quotient_by_ideal(A: StructAlgebra, ideal_elems):
    """Quotient algebra A / I for a (verified) ideal given by elements.

    Returns (Q, project) where project maps coordinate vectors of A onto
    coordinates of Q.
    """
    rows = [list(e.coords if isinstance(e, AlgElement) else e) for e in ideal_elems]
    span, pivots = linalg.rref(rows, A.field)
    span = [row for row in span if any(not A.field.is_zero(x) for x in row)]
    pivot_set = set(pivots)
    rest = [c for c in range(A.dim) if c not in pivot_set]
    if not rest:
        raise AlgebraError("quotient by the whole algebra")

    def project(coords):
        red = linalg.reduce_against_rref(span, pivots, coords, A.field)
        return tuple(red[c] for c in rest)

    dQ = len(rest)
    table = []
    for a, i in enumerate(rest):
        row = []
        for b, j in enumerate(rest):
            ei = [A.field.zero] * A.dim
            ei[i] = A.field.one
            ej = [A.field.zero] * A.dim
            ej[j] = A.field.one
            prod = project(A.mul_coords(tuple(ei), tuple(ej)))
            cell = tuple((k, c) for k, c in enumerate(prod) if not A.field.is_zero(c))
            row.append(cell)
        table.append(row)
    unit = project(A.unit)
    labels = [A.labels[c] for c in rest]
    Q = StructAlgebra(A.field, table, unit, labels=labels, verified=True)
    return Q, project


# ---------------------------------------------------------------------------
# bimodules
# ---------------------------------------------------------------------------


class Bimodule:
    """A finite-dimensional unital bimodule over a StructAlgebra, given by
    left and right action matrices per basis element."""

    def __init__(self, algebra: StructAlgebra, left, right, verified=False):
        self.algebra = algebra
        self.dim = len(left[0]) if left else 0
        self.left = [[list(r) for r in m] for m in left]
        self.right = [[list(r) for r in m] for m in right]
        if not verified:
            self._verify()

    @classmethod
    def regular(cls, algebra: StructAlgebra) -> "Bimodule":
        left = [algebra.left_mult_matrix(algebra.basis_element(i).coords) for i in range(algebra.dim)]
        right = [algebra.right_mult_matrix(algebra.basis_element(i).coords) for i in range(algebra.dim)]
        return cls(algebra, left, right, verified=True)

    def _verify(self):
        A = self.algebra
        field = A.field
        zero = field.zero
        d = A.dim

        def from_coords(coords, mats):
            out = [[zero] * self.dim for _ in range(self.dim)]
            for i, c in enumerate(coords):
                if field.is_zero(c):
                    continue
                for r in range(self.dim):
                    for s in range(self.dim):
                        out[r][s] = out[r][s] + c * mats[i][r][s]
            return out

        unit_left = from_coords(A.unit, self.left)
        unit_right = from_coords(A.unit, self.right)
        idm = linalg.identity(self.dim, field)
        if unit_left != idm or unit_right != idm:
            raise AlgebraError("bimodule unit does not act as the identity")
        for i in range(d):
            for j in range(d):
                prod = [zero] * d
                for k, c in A.table[i][j]:
                    prod[k] = prod[k] + c
                target_left = from_coords(prod, self.left)
                target_right = from_coords(prod, self.right)
                LL = linalg.mat_mul(self.left[i], self.left[j], zero)
                RR = linalg.mat_mul(self.right[j], self.right[i], zero)
                if LL != target_left:
                    raise AlgebraError("left action is not multiplicative")
                if RR != target_right:
                    raise AlgebraError("right action is not antimultiplicative")
                LR = linalg.mat_mul(self.left[i], self.right[j], zero)
                RL = linalg.mat_mul(self.right[j], self.left[i], zero)
                if LR != RL:
                    raise AlgebraError("left and right actions do not commute")

    def act_left(self, coords_r, vec):
        field = self.algebra.field
        out = [field.zero] * self.dim
        for i, c in enumerate(coords_r):
            if field.is_zero(c):
                continue
            Av = linalg.mat_vec(self.left[i], vec, field.zero)
            out = [a + c * b for a, b in zip(out, Av)]
        return out

    def act_right(self, vec, coords_r):
        field = self.algebra.field
        out = [field.zero] * self.dim
        for i, c in enumerate(coords_r):
            if field.is_zero(c):
                continue
            Av = linalg.mat_vec(self.right[i], vec, field.zero)
            out = [a + c * b for a, b in zip(out, Av)]
        return out
