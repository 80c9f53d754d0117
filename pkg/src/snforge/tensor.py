"""Elements of R (x) S: coordinate vectors over S indexed by a basis of R.

Multiplication runs through the structure constants of R with
S-coefficient products.  Inversion is exact and family-dispatched:
commutative rings go through the regular representation and Cramer's
rule, finite-dimensional rings through one linear solve over the ground
field, truncated series by order recursion, products componentwise and
matrix rings over F[xi] by flattening to a commutative problem.  Every
returned inverse is verified two-sided before it leaves this module.
"""

from __future__ import annotations

from . import linalg
from .algebras import AlgebraError, StructAlgebra, matrix_algebra, tensor_struct
from .rings import (
    FinDimRing,
    MatrixPolyRing,
    NotInvertibleError,
    ProductRing,
    SeriesRing,
    TruncSeries,
)

_ONE_DIM_MEMO = {}
_TENSOR_MEMO = {}


def field_as_algebra(field) -> StructAlgebra:
    """The ground field as a one-dimensional algebra over itself."""
    A = _ONE_DIM_MEMO.get(field)
    if A is None:
        table = ((((0, field.one),),),)
        A = StructAlgebra(field, table, (field.one,), labels=("1",), verified=True)
        _ONE_DIM_MEMO[field] = A
    return A


def tensor_square_algebra(R: StructAlgebra, S: StructAlgebra) -> StructAlgebra:
    """Memoized tensor product R (x) S as a structure-constant algebra."""
    key = (R, S)
    T = _TENSOR_MEMO.get(key)
    if T is None:
        T = tensor_struct(R, S)
        _TENSOR_MEMO[key] = T
    return T


class TensorElement:
    """sum_l r_l (x) s_l, stored as the tuple (s_0, ..., s_{d-1})."""

    __slots__ = ("algebra", "ring", "coords")

    def __init__(self, algebra: StructAlgebra, ring, coords):
        self.algebra = algebra
        self.ring = ring
        self.coords = tuple(coords)
        if len(self.coords) != algebra.dim:
            raise AlgebraError("tensor coordinate vector has wrong length")

    @classmethod
    def unit(cls, algebra: StructAlgebra, ring) -> "TensorElement":
        return cls(algebra, ring, tuple(ring.from_field(c) for c in algebra.unit))

    @classmethod
    def zero(cls, algebra: StructAlgebra, ring) -> "TensorElement":
        return cls(algebra, ring, (ring.zero,) * algebra.dim)

    @classmethod
    def from_algebra(cls, algebra: StructAlgebra, ring, r_coords) -> "TensorElement":
        """r (x) 1 for r given by ground-field coordinates."""
        return cls(algebra, ring, tuple(ring.from_field(c) for c in r_coords))

    @classmethod
    def from_ring(cls, algebra: StructAlgebra, ring, s) -> "TensorElement":
        """1 (x) s."""
        return cls(algebra, ring, tuple(ring.scale(c, s) for c in algebra.unit))

    @classmethod
    def pure(cls, algebra: StructAlgebra, ring, r_coords, s) -> "TensorElement":
        """r (x) s."""
        return cls(algebra, ring, tuple(ring.scale(c, s) for c in r_coords))

    def _check(self, other):
        if (
            not isinstance(other, TensorElement)
            or other.algebra != self.algebra
            or other.ring != self.ring
        ):
            raise AlgebraError("tensor elements with mismatched descriptors")
        return other

    def __add__(self, other):
        other = self._check(other)
        return TensorElement(
            self.algebra, self.ring, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other):
        other = self._check(other)
        return TensorElement(
            self.algebra, self.ring, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self):
        return TensorElement(self.algebra, self.ring, tuple(-a for a in self.coords))

    def __mul__(self, other):
        other = self._check(other)
        ring = self.ring
        table = self.algebra.table
        out = [ring.zero] * self.algebra.dim
        for i, si in enumerate(self.coords):
            if ring.is_zero(si):
                continue
            row = table[i]
            for j, tj in enumerate(other.coords):
                if ring.is_zero(tj):
                    continue
                prod = si * tj
                for k, gamma in row[j]:
                    out[k] = out[k] + ring.scale(gamma, prod)
        return TensorElement(self.algebra, ring, out)

    def mul_alg_right(self, r_coords) -> "TensorElement":
        """self * (r (x) 1) without any S-by-S products."""
        ring = self.ring
        field = self.algebra.field
        table = self.algebra.table
        out = [ring.zero] * self.algebra.dim
        for i, si in enumerate(self.coords):
            if ring.is_zero(si):
                continue
            row = table[i]
            for j, vj in enumerate(r_coords):
                if field.is_zero(vj):
                    continue
                for k, gamma in row[j]:
                    out[k] = out[k] + ring.scale(gamma * vj, si)
        return TensorElement(self.algebra, ring, out)

    def mul_alg_left(self, r_coords) -> "TensorElement":
        """(r (x) 1) * self without any S-by-S products."""
        ring = self.ring
        field = self.algebra.field
        table = self.algebra.table
        out = [ring.zero] * self.algebra.dim
        for j, vj in enumerate(r_coords):
            if field.is_zero(vj):
                continue
            row = table[j]
            for i, si in enumerate(self.coords):
                if ring.is_zero(si):
                    continue
                for k, gamma in row[i]:
                    out[k] = out[k] + ring.scale(gamma * vj, si)
        return TensorElement(self.algebra, ring, out)

    def scale_field(self, f) -> "TensorElement":
        ring = self.ring
        return TensorElement(self.algebra, ring, tuple(ring.scale(f, s) for s in self.coords))

    def scale_ring(self, s) -> "TensorElement":
        """Multiply by 1 (x) s on the right."""
        return TensorElement(self.algebra, self.ring, tuple(c * s for c in self.coords))

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(c) for c in self.coords)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.ring == other.ring
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash(self.coords)

    def central_part(self):
        """s with self = 1 (x) s, else None."""
        ring = self.ring
        field = self.algebra.field
        unit = self.algebra.unit
        pivot = None
        for l, lam in enumerate(unit):
            if not field.is_zero(lam):
                pivot = l
                break
        s = ring.scale(field.inv(unit[pivot]), self.coords[pivot])
        for l, lam in enumerate(unit):
            if self.coords[l] != ring.scale(lam, s):
                return None
        return s

    def __repr__(self):
        parts = []
        for lbl, s in zip(self.algebra.labels, self.coords):
            if not self.ring.is_zero(s):
                parts.append("%s(x)[%r]" % (lbl, s))
        return " + ".join(parts) if parts else "0"


def regular_representation(u: TensorElement):
    """Matrix over S of left multiplication by u on the basis r_k (x) 1."""
    ring = u.ring
    field = u.algebra.field
    d = u.algebra.dim
    M = [[ring.zero] * d for _ in range(d)]
    for i, si in enumerate(u.coords):
        if ring.is_zero(si):
            continue
        row = u.algebra.table[i]
        for k in range(d):
            for m, gamma in row[k]:
                M[m][k] = M[m][k] + ring.scale(gamma, si)
    return M


# ---------------------------------------------------------------------------
# flattening adapters
# ---------------------------------------------------------------------------


def flatten_findim(u: TensorElement):
    """Coordinates of u over F in the materialized algebra R (x) S."""
    ring = u.ring
    if isinstance(ring, FinDimRing):
        SA = ring.algebra
        T = tensor_square_algebra(u.algebra, SA)
        flat = []
        for s in u.coords:
            flat.extend(s.coords)
        return T, flat
    if ring.is_field:
        SA = field_as_algebra(ring)
        T = tensor_square_algebra(u.algebra, SA)
        return T, list(u.coords)
    raise AlgebraError("ring is not finite-dimensional")


def unflatten_findim(R: StructAlgebra, ring, flat) -> TensorElement:
    if isinstance(ring, FinDimRing):
        e = ring.algebra.dim
        coords = [ring.algebra.element(flat[i * e : (i + 1) * e]) for i in range(R.dim)]
        return TensorElement(R, ring, coords)
    if ring.is_field:
        return TensorElement(R, ring, flat)
    raise AlgebraError("ring is not finite-dimensional")


def flatten_matrix_poly(u: TensorElement):
    """R (x) M_n(F[xi]) re-read as (R (x) M_n(F)) (x) F[xi]."""
    ring = u.ring
    if not isinstance(ring, MatrixPolyRing):
        raise AlgebraError("ring is not a matrix-polynomial ring")
    Mn = matrix_algebra(ring.n, ring.field)
    T2 = tensor_square_algebra(u.algebra, Mn)
    flat = []
    for m in u.coords:
        for row in m.rows:
            flat.extend(row)
    return T2, TensorElement(T2, ring.polyring, flat)


def unflatten_matrix_poly(R: StructAlgebra, ring: MatrixPolyRing, flat_elem: TensorElement) -> TensorElement:
    n = ring.n
    coords = []
    flat = flat_elem.coords
    for i in range(R.dim):
        block = flat[i * n * n : (i + 1) * n * n]
        rows = tuple(tuple(block[r * n + c] for c in range(n)) for r in range(n))
        coords.append(ring.matrix(rows))
    return TensorElement(R, ring, coords)


# -- truncated series helpers --


def series_component(u: TensorElement, m: int) -> TensorElement:
    ring = u.ring
    if not isinstance(ring, SeriesRing):
        raise AlgebraError("not a series tensor element")
    return TensorElement(u.algebra, ring.base, tuple(s.coeffs[m] for s in u.coords))


def series_assemble(R: StructAlgebra, sring: SeriesRing, components) -> TensorElement:
    base = sring.base
    coords = []
    for i in range(R.dim):
        coeffs = [components[m].coords[i] if m < len(components) else base.zero for m in range(sring.order)]
        coords.append(TruncSeries(sring, tuple(coeffs)))
    return TensorElement(R, sring, coords)


def series_embed(u: TensorElement, sring: SeriesRing) -> TensorElement:
    """Constant-series embedding of a base tensor element."""
    if u.ring != sring.base:
        raise AlgebraError("series base mismatch")
    return TensorElement(u.algebra, sring, tuple(sring.embed_base(s) for s in u.coords))


def series_truncate(u: TensorElement, new_order: int) -> TensorElement:
    ring = u.ring
    if not isinstance(ring, SeriesRing):
        raise AlgebraError("not a series tensor element")
    target = ring.truncated(new_order)
    return TensorElement(u.algebra, target, tuple(ring.truncate_elem(s, new_order) for s in u.coords))


# ---------------------------------------------------------------------------
# inversion
# ---------------------------------------------------------------------------


def tensor_invert(u: TensorElement) -> TensorElement:
    """Two-sided inverse of u in R (x) S; raises NotInvertibleError with a
    witness when none exists.  The returned element always satisfies
    u v = v u = 1 exactly (checked here, not assumed)."""
    ring = u.ring
    if isinstance(ring, ProductRing):
        v = _invert_product(u)
    elif isinstance(ring, SeriesRing):
        v = _invert_series(u)
    elif isinstance(ring, FinDimRing):
        v = _invert_findim(u)
    elif isinstance(ring, MatrixPolyRing):
        v = _invert_matrix_poly(u)
    elif getattr(ring, "is_commutative", False):
        v = _invert_commutative(u)
    else:
        raise AlgebraError("no inversion path for ring family %r" % ring.family)
    one = TensorElement.unit(u.algebra, ring)
    if u * v != one or v * u != one:
        raise AlgebraError("inversion produced a one-sided inverse only")
    return v


def _invert_commutative(u: TensorElement) -> TensorElement:
    ring = u.ring
    M = regular_representation(u)
    rhs = [ring.from_field(c) for c in u.algebra.unit]
    det, cramer = linalg.cramer_solve_commutative(M, rhs, ring)
    if not ring.is_unit(det):
        raise NotInvertibleError(
            "regular-representation determinant is not a unit", witness=det
        )
    inv_det = ring.inv(det)
    return TensorElement(u.algebra, ring, tuple(s * inv_det for s in cramer))


def _invert_findim(u: TensorElement) -> TensorElement:
    T, flat = flatten_findim(u)
    L = T.left_mult_matrix(flat)
    try:
        x = linalg.solve_unique(L, list(T.unit), T.field)
    except linalg.SingularMatrixError:
        raise NotInvertibleError("element is singular in R (x) S", witness=None)
    return unflatten_findim(u.algebra, u.ring, x)


def _invert_product(u: TensorElement) -> TensorElement:
    ring = u.ring
    s1, s2 = ring.factors
    u1 = TensorElement(u.algebra, s1, tuple(c.parts[0] for c in u.coords))
    u2 = TensorElement(u.algebra, s2, tuple(c.parts[1] for c in u.coords))
    try:
        v1 = tensor_invert(u1)
    except NotInvertibleError as exc:
        raise NotInvertibleError("first factor is not invertible", witness=exc.witness)
    try:
        v2 = tensor_invert(u2)
    except NotInvertibleError as exc:
        raise NotInvertibleError("second factor is not invertible", witness=exc.witness)
    coords = tuple(ring.pair(a, b) for a, b in zip(v1.coords, v2.coords))
    return TensorElement(u.algebra, ring, coords)


def _invert_series(u: TensorElement) -> TensorElement:
    ring = u.ring
    n = ring.order
    comps = [series_component(u, m) for m in range(n)]
    v0 = tensor_invert(comps[0])
    out = [v0]
    for m in range(1, n):
        acc = TensorElement.zero(u.algebra, ring.base)
        for i in range(1, m + 1):
            acc = acc + comps[i] * out[m - i]
        out.append(-(v0 * acc))
    return series_assemble(u.algebra, ring, out)


def _invert_matrix_poly(u: TensorElement) -> TensorElement:
    T2, flat = flatten_matrix_poly(u)
    v_flat = _invert_commutative(flat)
    return unflatten_matrix_poly(u.algebra, u.ring, v_flat)
