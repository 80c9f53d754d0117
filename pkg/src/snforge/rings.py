"""Coefficient rings: every family of S the solvers support.

Each descriptor carries the capability flags the backend dispatcher
reads (is_field, has_gcd, is_pid, is_findim, is_series, is_product),
exact element arithmetic through operators, and unit/inverse decisions.
All element types are immutable.
"""

from __future__ import annotations

from .algebras import AlgElement, StructAlgebra
from .fields import FieldError
from .linalg import (
    SingularMatrixError,
    cramer_solve_commutative,
    det_commutative,
    solve_unique,
)
from .polynomials import Poly, PolyRing, PolynomialError

__all__ = [
    "RingError",
    "NotInvertibleError",
    "CurveRing",
    "CurveElement",
    "SeriesRing",
    "TruncSeries",
    "ProductRing",
    "ProductElement",
    "MatrixPolyRing",
    "MatrixPolyElement",
    "FinDimRing",
    "UnsupportedRing",
    "ring_is_unit",
    "ring_inv",
]


class RingError(ArithmeticError):
    pass


class NotInvertibleError(ArithmeticError):
    """Raised when an inverse is requested for a non-unit; ``witness``
    carries the obstruction (e.g. a non-unit determinant)."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def ring_is_unit(ring, elem) -> bool:
    """Family dispatch for unit detection; exact in every family."""
    return ring.is_unit(elem)


def ring_inv(ring, elem):
    """Inverse of a unit; raises NotInvertibleError otherwise."""
    return ring.inv(elem)


# ---------------------------------------------------------------------------
# the elliptic coordinate ring F[x,y]/(y^2 - x^3 - x)
# ---------------------------------------------------------------------------


class CurveRing:
    """F[x, y] modulo y^2 = x^3 + x; elements are pairs a(x) + b(x) y.

    Units are the nonzero constants, detected through the norm
    a^2 - b^2 (x^3 + x).  Requires characteristic != 2.
    """

    family = "curve"
    is_field = False
    has_gcd = False
    is_pid = False
    is_findim = False
    is_series = False
    is_product = False
    is_commutative = True

    def __init__(self, field):
        if field.characteristic == 2:
            raise RingError("the curve ring needs characteristic != 2")
        self.field = field
        self.polyring = PolyRing(field, ("x",))
        x = self.polyring.gen()
        self.branch_poly = x * x * x + x
        self.characteristic = field.characteristic
        self.zero = CurveElement(self, self.polyring.zero, self.polyring.zero)
        self.one = CurveElement(self, self.polyring.one, self.polyring.zero)

    def of(self, v) -> "CurveElement":
        if isinstance(v, CurveElement):
            if v.ring != self:
                raise RingError("curve element from a different ring")
            return v
        if isinstance(v, dict):
            return self.elem_from_json(v)
        if isinstance(v, Poly):
            if v.ring != self.polyring:
                raise RingError("polynomial from a different ring")
            return CurveElement(self, v, self.polyring.zero)
        return CurveElement(self, self.polyring.of(v), self.polyring.zero)

    def element(self, a: Poly, b: Poly) -> "CurveElement":
        return CurveElement(self, self.polyring.of(a), self.polyring.of(b))

    def x(self) -> "CurveElement":
        return CurveElement(self, self.polyring.gen(), self.polyring.zero)

    def y(self) -> "CurveElement":
        return CurveElement(self, self.polyring.zero, self.polyring.one)

    def from_field(self, f) -> "CurveElement":
        return CurveElement(self, self.polyring.from_field(f), self.polyring.zero)

    def scale(self, f, u: "CurveElement") -> "CurveElement":
        return CurveElement(self, u.a.scale_coeff(f), u.b.scale_coeff(f))

    def is_zero(self, u: "CurveElement") -> bool:
        return u.a.is_zero() and u.b.is_zero()

    def norm(self, u: "CurveElement") -> Poly:
        """a^2 - b^2 (x^3 + x); zero only on the zero element."""
        return u.a * u.a - u.b * u.b * self.branch_poly

    def is_unit(self, u: "CurveElement") -> bool:
        c = self.norm(u).constant_value()
        return c is not None and self.field.is_unit(c)

    def inv(self, u: "CurveElement") -> "CurveElement":
        nu = self.norm(u)
        c = nu.constant_value()
        if c is None or not self.field.is_unit(c):
            raise NotInvertibleError("curve element is not a unit", witness=u)
        ci = self.field.inv(c)
        return CurveElement(self, u.a.scale_coeff(ci), (-u.b).scale_coeff(ci))

    def divide(self, num: "CurveElement", den: "CurveElement"):
        """Exact quotient num/den in the ring, or None.

        Solves the 2x2 F[x]-linear system of multiplication by den on
        the coordinate pair; the quotient exists iff both Cramer
        divisions are exact.
        """
        if self.is_zero(den):
            raise RingError("division by zero in the curve ring")
        delta = self.norm(den)
        a, b = den.a, den.b
        e, f = num.a, num.b
        cn = a * e - b * self.branch_poly * f
        dn = a * f - b * e
        c = cn.exact_div(delta)
        if c is None:
            return None
        d = dn.exact_div(delta)
        if d is None:
            return None
        return CurveElement(self, c, d)

    def size(self):
        return None

    def elem_to_json(self, u: "CurveElement"):
        return {"a": self.polyring.elem_to_json(u.a), "b": self.polyring.elem_to_json(u.b)}

    def elem_from_json(self, obj) -> "CurveElement":
        if not isinstance(obj, dict) or set(obj) != {"a", "b"}:
            raise RingError("curve element literal must be {a, b}")
        return CurveElement(
            self,
            self.polyring.elem_from_json(obj["a"]),
            self.polyring.elem_from_json(obj["b"]),
        )

    def to_json(self):
        return {"family": "curve", "field": self.field.to_json()}

    def __eq__(self, other):
        return isinstance(other, CurveRing) and other.field == self.field

    def __hash__(self):
        return hash(("curve", self.field))

    def describe(self):
        return "%s[x,y]/(y^2-x^3-x)" % self.field.describe()


class CurveElement:
    __slots__ = ("ring", "a", "b")

    def __init__(self, ring: CurveRing, a: Poly, b: Poly):
        self.ring = ring
        self.a = a
        self.b = b

    def _check(self, other):
        if not isinstance(other, CurveElement) or other.ring != self.ring:
            raise RingError("curve elements from different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        return CurveElement(self.ring, self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        other = self._check(other)
        return CurveElement(self.ring, self.a - other.a, self.b - other.b)

    def __neg__(self):
        return CurveElement(self.ring, -self.a, -self.b)

    def __mul__(self, other):
        other = self._check(other)
        w = self.ring.branch_poly
        return CurveElement(
            self.ring,
            self.a * other.a + self.b * other.b * w,
            self.a * other.b + self.b * other.a,
        )

    def __eq__(self, other):
        if not isinstance(other, CurveElement):
            return NotImplemented
        return self.ring == other.ring and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a.terms) or bool(self.b.terms)

    def __repr__(self):
        if not self.b.terms:
            return repr(self.a)
        return "(%r) + (%r)*y" % (self.a, self.b)


# ---------------------------------------------------------------------------
# truncated power series S0[xi] / (xi^N)
# ---------------------------------------------------------------------------


class SeriesRing:
    """Power series over a base ring, exact modulo xi^N."""

    family = "series"
    is_field = False
    has_gcd = False
    is_pid = False
    is_findim = False
    is_series = True
    is_product = False

    def __init__(self, base, order: int):
        if order < 1:
            raise RingError("series truncation order must be >= 1")
        self.base = base
        self.order = order
        self.characteristic = base.characteristic
        self.is_commutative = base.is_commutative
        self.zero = TruncSeries(self, (base.zero,) * order)
        one = [base.zero] * order
        one[0] = base.one
        self.one = TruncSeries(self, tuple(one))

    def of(self, v) -> "TruncSeries":
        if isinstance(v, TruncSeries):
            if v.ring != self:
                raise RingError("series from a different ring")
            return v
        if isinstance(v, list):
            return self.elem_from_json(v)
        return self.embed_base(self.base.of(v))

    def series(self, coeffs) -> "TruncSeries":
        coeffs = [self.base.of(c) if not self._is_base_elem(c) else c for c in coeffs]
        if len(coeffs) > self.order:
            raise RingError("too many series coefficients")
        coeffs = coeffs + [self.base.zero] * (self.order - len(coeffs))
        return TruncSeries(self, tuple(coeffs))

    def _is_base_elem(self, c):
        return type(c) is type(self.base.zero)

    def gen(self) -> "TruncSeries":
        if self.order == 1:
            return self.zero
        coeffs = [self.base.zero] * self.order
        coeffs[1] = self.base.one
        return TruncSeries(self, tuple(coeffs))

    def embed_base(self, e) -> "TruncSeries":
        coeffs = [self.base.zero] * self.order
        coeffs[0] = e
        return TruncSeries(self, tuple(coeffs))

    def from_field(self, f) -> "TruncSeries":
        return self.embed_base(self.base.from_field(f))

    def scale(self, f, s: "TruncSeries") -> "TruncSeries":
        return TruncSeries(self, tuple(self.base.scale(f, c) for c in s.coeffs))

    def is_zero(self, s: "TruncSeries") -> bool:
        return all(self.base.is_zero(c) for c in s.coeffs)

    def is_unit(self, s: "TruncSeries") -> bool:
        return self.base.is_unit(s.coeffs[0])

    def inv(self, s: "TruncSeries") -> "TruncSeries":
        """Order-by-order inversion; needs a unit constant coefficient."""
        if not self.base.is_unit(s.coeffs[0]):
            raise NotInvertibleError("series constant term is not a unit", witness=s.coeffs[0])
        c0 = self.base.inv(s.coeffs[0])
        out = [c0]
        for m in range(1, self.order):
            acc = self.base.zero
            for i in range(1, m + 1):
                acc = acc + s.coeffs[i] * out[m - i]
            out.append(-(c0 * acc))
        result = TruncSeries(self, tuple(out))
        if s * result != self.one or result * s != self.one:
            raise RingError("series inversion failed verification")
        return result

    def truncated(self, new_order: int) -> "SeriesRing":
        return SeriesRing(self.base, new_order)

    def truncate_elem(self, s: "TruncSeries", new_order: int) -> "TruncSeries":
        if new_order > self.order:
            raise RingError("cannot extend a truncated series")
        ring = self.truncated(new_order)
        return TruncSeries(ring, s.coeffs[:new_order])

    def size(self):
        return None

    def elem_to_json(self, s: "TruncSeries"):
        return [self.base.elem_to_json(c) for c in s.coeffs]

    def elem_from_json(self, obj) -> "TruncSeries":
        if not isinstance(obj, list) or len(obj) != self.order:
            raise RingError("series literal must list exactly %d coefficients" % self.order)
        return TruncSeries(self, tuple(self.base.elem_from_json(c) for c in obj))

    def to_json(self):
        return {"family": "series", "base": self.base.to_json(), "order": self.order}

    def __eq__(self, other):
        return (
            isinstance(other, SeriesRing)
            and other.base == self.base
            and other.order == self.order
        )

    def __hash__(self):
        return hash(("series", self.base, self.order))

    def describe(self):
        return "%s[[xi]]/(xi^%d)" % (self.base.describe(), self.order)


class TruncSeries:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: SeriesRing, coeffs):
        self.ring = ring
        self.coeffs = tuple(coeffs)

    def _check(self, other):
        if not isinstance(other, TruncSeries) or other.ring != self.ring:
            raise RingError("series from different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        return TruncSeries(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        other = self._check(other)
        return TruncSeries(self.ring, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return TruncSeries(self.ring, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        other = self._check(other)
        base = self.ring.base
        n = self.ring.order
        out = [base.zero] * n
        for i, a in enumerate(self.coeffs):
            if base.is_zero(a):
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if not base.is_zero(b):
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(self.ring, tuple(out))

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return not self.ring.is_zero(self)

    def __repr__(self):
        return "series[%s]" % ", ".join(repr(c) for c in self.coeffs)


# ---------------------------------------------------------------------------
# direct products
# ---------------------------------------------------------------------------


class ProductRing:
    """S1 x S2 with componentwise operations; a unit iff both parts are."""

    family = "product"
    is_field = False
    has_gcd = False
    is_pid = False
    is_findim = False
    is_series = False
    is_product = True

    def __init__(self, first, second):
        self.factors = (first, second)
        if first.characteristic != second.characteristic:
            raise RingError("product factors must share a characteristic")
        self.characteristic = first.characteristic
        self.is_commutative = first.is_commutative and second.is_commutative
        self.zero = ProductElement(self, (first.zero, second.zero))
        self.one = ProductElement(self, (first.one, second.one))

    def of(self, v) -> "ProductElement":
        if isinstance(v, ProductElement):
            if v.ring != self:
                raise RingError("product element from a different ring")
            return v
        if isinstance(v, (list, tuple)) and len(v) == 2:
            return ProductElement(self, (self.factors[0].of(v[0]), self.factors[1].of(v[1])))
        return ProductElement(self, (self.factors[0].of(v), self.factors[1].of(v)))

    def pair(self, e1, e2) -> "ProductElement":
        return ProductElement(self, (self.factors[0].of(e1), self.factors[1].of(e2)))

    def from_field(self, f) -> "ProductElement":
        return ProductElement(self, (self.factors[0].from_field(f), self.factors[1].from_field(f)))

    def scale(self, f, u: "ProductElement") -> "ProductElement":
        return ProductElement(
            self, (self.factors[0].scale(f, u.parts[0]), self.factors[1].scale(f, u.parts[1]))
        )

    def is_zero(self, u: "ProductElement") -> bool:
        return self.factors[0].is_zero(u.parts[0]) and self.factors[1].is_zero(u.parts[1])

    def is_unit(self, u: "ProductElement") -> bool:
        return self.factors[0].is_unit(u.parts[0]) and self.factors[1].is_unit(u.parts[1])

    def inv(self, u: "ProductElement") -> "ProductElement":
        if not self.is_unit(u):
            raise NotInvertibleError("a component is not a unit", witness=u)
        return ProductElement(
            self, (self.factors[0].inv(u.parts[0]), self.factors[1].inv(u.parts[1]))
        )

    def size(self):
        return None

    def elem_to_json(self, u: "ProductElement"):
        return [self.factors[0].elem_to_json(u.parts[0]), self.factors[1].elem_to_json(u.parts[1])]

    def elem_from_json(self, obj) -> "ProductElement":
        if not isinstance(obj, list) or len(obj) != 2:
            raise RingError("product element literal must be a pair")
        return ProductElement(
            self,
            (self.factors[0].elem_from_json(obj[0]), self.factors[1].elem_from_json(obj[1])),
        )

    def to_json(self):
        return {"family": "product", "factors": [f.to_json() for f in self.factors]}

    def __eq__(self, other):
        return isinstance(other, ProductRing) and other.factors == self.factors

    def __hash__(self):
        return hash(("product", self.factors))

    def describe(self):
        return "%s x %s" % (self.factors[0].describe(), self.factors[1].describe())


class ProductElement:
    __slots__ = ("ring", "parts")

    def __init__(self, ring: ProductRing, parts):
        self.ring = ring
        self.parts = tuple(parts)

    def _check(self, other):
        if not isinstance(other, ProductElement) or other.ring != self.ring:
            raise RingError("product elements from different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        return ProductElement(self.ring, (self.parts[0] + other.parts[0], self.parts[1] + other.parts[1]))

    def __sub__(self, other):
        other = self._check(other)
        return ProductElement(self.ring, (self.parts[0] - other.parts[0], self.parts[1] - other.parts[1]))

    def __neg__(self):
        return ProductElement(self.ring, (-self.parts[0], -self.parts[1]))

    def __mul__(self, other):
        other = self._check(other)
        return ProductElement(self.ring, (self.parts[0] * other.parts[0], self.parts[1] * other.parts[1]))

    def __eq__(self, other):
        if not isinstance(other, ProductElement):
            return NotImplemented
        return self.ring == other.ring and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __bool__(self):
        return not self.ring.is_zero(self)

    def __repr__(self):
        return "(%r, %r)" % self.parts


# ---------------------------------------------------------------------------
# matrix rings over univariate polynomials
# ---------------------------------------------------------------------------


class MatrixPolyRing:
    """M_n(F[xi]): square matrices over a univariate polynomial ring."""

    family = "matrix_poly"
    is_field = False
    has_gcd = False
    is_pid = False
    is_findim = False
    is_series = False
    is_product = False

    def __init__(self, n: int, polyring: PolyRing):
        if n < 1:
            raise RingError("matrix size must be >= 1")
        if polyring.nvars != 1:
            raise RingError("matrix ring base must be univariate")
        self.n = n
        self.polyring = polyring
        self.field = polyring.field
        self.characteristic = polyring.characteristic
        self.is_commutative = n == 1
        zero = polyring.zero
        self.zero = MatrixPolyElement(self, tuple((zero,) * n for _ in range(n)))
        self.one = MatrixPolyElement(
            self,
            tuple(
                tuple(polyring.one if i == j else zero for j in range(n)) for i in range(n)
            ),
        )

    def of(self, v) -> "MatrixPolyElement":
        if isinstance(v, MatrixPolyElement):
            if v.ring != self:
                raise RingError("matrix from a different ring")
            return v
        if isinstance(v, (list, tuple)):
            return self.matrix(v)
        return self.from_scalar(self.polyring.of(v))

    def matrix(self, rows) -> "MatrixPolyElement":
        rows = tuple(tuple(self.polyring.of(p) for p in row) for row in rows)
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise RingError("matrix has wrong shape")
        return MatrixPolyElement(self, rows)

    def from_scalar(self, p: Poly) -> "MatrixPolyElement":
        zero = self.polyring.zero
        return MatrixPolyElement(
            self,
            tuple(tuple(p if i == j else zero for j in range(self.n)) for i in range(self.n)),
        )

    def from_field(self, f) -> "MatrixPolyElement":
        return self.from_scalar(self.polyring.from_field(f))

    def scale(self, f, m: "MatrixPolyElement") -> "MatrixPolyElement":
        return MatrixPolyElement(
            self, tuple(tuple(p.scale_coeff(f) for p in row) for row in m.rows)
        )

    def is_zero(self, m: "MatrixPolyElement") -> bool:
        return all(p.is_zero() for row in m.rows for p in row)

    def det(self, m: "MatrixPolyElement") -> Poly:
        return det_commutative([list(r) for r in m.rows], self.polyring)

    def is_unit(self, m: "MatrixPolyElement") -> bool:
        return self.polyring.is_unit(self.det(m))

    def inv(self, m: "MatrixPolyElement") -> "MatrixPolyElement":
        det = self.det(m)
        if not self.polyring.is_unit(det):
            raise NotInvertibleError("matrix determinant is not a unit", witness=det)
        inv_det = self.polyring.inv(det)
        cols = []
        M = [list(r) for r in m.rows]
        for j in range(self.n):
            rhs = [self.polyring.one if i == j else self.polyring.zero for i in range(self.n)]
            _, sols = cramer_solve_commutative(M, rhs, self.polyring)
            cols.append([p * inv_det for p in sols])
        rows = tuple(tuple(cols[j][i] for j in range(self.n)) for i in range(self.n))
        out = MatrixPolyElement(self, rows)
        if m * out != self.one or out * m != self.one:
            raise RingError("matrix inversion failed verification")
        return out

    def size(self):
        return None

    def elem_to_json(self, m: "MatrixPolyElement"):
        return [[self.polyring.elem_to_json(p) for p in row] for row in m.rows]

    def elem_from_json(self, obj) -> "MatrixPolyElement":
        if not isinstance(obj, list) or len(obj) != self.n:
            raise RingError("matrix literal must list %d rows" % self.n)
        rows = []
        for row in obj:
            if not isinstance(row, list) or len(row) != self.n:
                raise RingError("matrix literal must have %d columns" % self.n)
            rows.append(tuple(self.polyring.elem_from_json(p) for p in row))
        return MatrixPolyElement(self, tuple(rows))

    def to_json(self):
        return {
            "family": "matrix_poly",
            "n": self.n,
            "field": self.polyring.field.to_json(),
            "var": self.polyring.names[0],
        }

    def __eq__(self, other):
        return (
            isinstance(other, MatrixPolyRing)
            and other.n == self.n
            and other.polyring == self.polyring
        )

    def __hash__(self):
        return hash(("matrix_poly", self.n, self.polyring))

    def describe(self):
        return "M_%d(%s)" % (self.n, self.polyring.describe())


class MatrixPolyElement:
    __slots__ = ("ring", "rows")

    def __init__(self, ring: MatrixPolyRing, rows):
        self.ring = ring
        self.rows = rows

    def _check(self, other):
        if not isinstance(other, MatrixPolyElement) or other.ring != self.ring:
            raise RingError("matrices from different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        return MatrixPolyElement(
            self.ring,
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)),
        )

    def __sub__(self, other):
        other = self._check(other)
        return MatrixPolyElement(
            self.ring,
            tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)),
        )

    def __neg__(self):
        return MatrixPolyElement(self.ring, tuple(tuple(-a for a in r) for r in self.rows))

    def __mul__(self, other):
        other = self._check(other)
        n = self.ring.n
        zero = self.ring.polyring.zero
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for t in range(n):
                    a = self.rows[i][t]
                    if a.terms:
                        acc = acc + a * other.rows[t][j]
                row.append(acc)
            out.append(tuple(row))
        return MatrixPolyElement(self.ring, tuple(out))

    def __eq__(self, other):
        if not isinstance(other, MatrixPolyElement):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __bool__(self):
        return not self.ring.is_zero(self)

    def __repr__(self):
        return "[%s]" % "; ".join(", ".join(repr(p) for p in row) for row in self.rows)


# ---------------------------------------------------------------------------
# finite-dimensional algebras as coefficient rings
# ---------------------------------------------------------------------------


class FinDimRing:
    """A finite-dimensional algebra (possibly noncommutative) used as a
    coefficient ring; elements are AlgElements of the wrapped algebra."""

    family = "findim"
    is_field = False
    has_gcd = False
    is_pid = False
    is_findim = True
    is_series = False
    is_product = False

    def __init__(self, algebra: StructAlgebra):
        self.algebra = algebra
        self.field = algebra.field
        self.characteristic = algebra.field.characteristic
        self.is_commutative = algebra.is_commutative()
        self.zero = algebra.zero
        self.one = algebra.one

    def of(self, v) -> AlgElement:
        if isinstance(v, AlgElement):
            if v.algebra != self.algebra:
                raise RingError("element of a different algebra")
            return v
        if isinstance(v, (list, tuple)):
            return self.algebra.element(list(v))
        return self.from_field(self.field.of(v))

    def from_field(self, f) -> AlgElement:
        return self.algebra.one.scale(f)

    def scale(self, f, u: AlgElement) -> AlgElement:
        return u.scale(f)

    def is_zero(self, u: AlgElement) -> bool:
        return u.is_zero()

    def is_unit(self, u: AlgElement) -> bool:
        try:
            self.inv(u)
            return True
        except NotInvertibleError:
            return False

    def inv(self, u: AlgElement) -> AlgElement:
        """Two-sided inverse through the regular representation over F."""
        L = self.algebra.left_mult_matrix(u.coords)
        try:
            coords = solve_unique(L, list(self.algebra.unit), self.field)
        except SingularMatrixError:
            raise NotInvertibleError("element is singular in its algebra", witness=u)
        v = self.algebra.element(coords)
        if u * v != self.one or v * u != self.one:
            raise NotInvertibleError("one-sided inverse only", witness=u)
        return v

    def generator_names(self):
        return list(self.algebra.labels)

    def apply_generator_map(self, u: AlgElement, images) -> AlgElement:
        """Linear extension of basis-element images."""
        out = self.zero
        for c, img in zip(u.coords, images):
            if not self.field.is_zero(c):
                out = out + img.scale(c)
        return out

    def size(self):
        return None

    def elem_to_json(self, u: AlgElement):
        return [self.field.elem_to_json(c) for c in u.coords]

    def elem_from_json(self, obj) -> AlgElement:
        if not isinstance(obj, list) or len(obj) != self.algebra.dim:
            raise RingError("element literal must list %d coordinates" % self.algebra.dim)
        return self.algebra.element([self.field.elem_from_json(c) for c in obj])

    def to_json(self):
        return {"family": "findim", "algebra": self.algebra.to_json(), "field": self.field.to_json()}

    def __eq__(self, other):
        return isinstance(other, FinDimRing) and other.algebra == self.algebra

    def __hash__(self):
        return hash(("findim", self.algebra))

    def describe(self):
        return "findim(dim=%d over %s)" % (self.algebra.dim, self.field.describe())


class UnsupportedRing:
    """Parsed-but-unsupported ring family; dispatch reports it as such."""

    is_field = False
    has_gcd = False
    is_pid = False
    is_findim = False
    is_series = False
    is_product = False
    is_commutative = False
    characteristic = None

    def __init__(self, family: str, payload=None):
        self.family = family
        self.payload = payload or {}

    def to_json(self):
        out = {"family": self.family}
        out.update(self.payload)
        return out

    def __eq__(self, other):
        return isinstance(other, UnsupportedRing) and other.family == self.family

    def __hash__(self):
        return hash(("unsupported", self.family))

    def describe(self):
        return self.family
