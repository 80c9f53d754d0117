"""Homomorphism validation, coefficient extraction and witnesses.

For a homomorphism phi: R -> R (x) S from a central simple algebra R
with basis r_1..r_d, there are unique c_1..c_d in R (x) S with

  (a) phi(x) = sum_k c_k x r_k for all x,
  (b) phi(x) c_k = c_k x for all x and k,
  (c) sum_k c_k r_k = 1,

and writing c_k = sum_l r_l (x) s_kl there are witnesses b with
b c_k = 1 (x) s_kl.  This module computes all of these by exact linear
algebra over the ground field and asserts each identity before handing
anything back.  Whether some c_k can be promoted to an invertible
conjugator is the backends' business, not this module's.
"""

from __future__ import annotations

from . import linalg
from .algebras import AlgElement, StructAlgebra, verify_central_simple
from .rings import NotInvertibleError
from .tensor import TensorElement, tensor_invert


class HomomorphismError(Exception):
    """The supplied images do not define a homomorphism.  ``report``
    carries (i, j, product_of_images, image_of_product) for the first
    violated basis product, or a unit-preservation note."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ConjugationError(Exception):
    """A claimed conjugator fails; ``index`` is the offending basis index."""

    def __init__(self, message, index=None, witness=None):
        super().__init__(message)
        self.index = index
        self.witness = witness


class ExtractionError(Exception):
    pass


class DualSystem:
    """Pairs (w_j, z_j) with sum_j w_j r_k z_j = delta_ik 1, verified."""

    def __init__(self, algebra: StructAlgebra, index: int, pairs):
        self.algebra = algebra
        self.index = index
        self.pairs = tuple(pairs)
        self._verify()

    def _verify(self):
        A = self.algebra
        field = A.field
        for k in range(A.dim):
            acc = [field.zero] * A.dim
            ek = [field.zero] * A.dim
            ek[k] = field.one
            for w, z in self.pairs:
                term = A.mul_coords(A.mul_coords(w.coords, tuple(ek)), z.coords)
                acc = [a + b for a, b in zip(acc, term)]
            target = A.unit if k == self.index else (field.zero,) * A.dim
            if tuple(acc) != tuple(target):
                raise ExtractionError(
                    "dual system fails on basis index %d (target index %d)" % (k, self.index)
                )

    def __len__(self):
        return len(self.pairs)


def dual_system(R: StructAlgebra, index: int) -> DualSystem:
    """Dual system selecting the coordinate functional of basis index i.

    Solves the d^2 x d^2 system expressing x -> (coordinate_i x) 1 in
    the spanning operators b_p (.) b_q, then rank-factors the d x d
    coefficient matrix so at most d pairs are returned.
    """
    Einv = R.spanning_inverse()
    if Einv is None:
        raise ExtractionError("algebra is not central simple; spanning matrix is singular")
    d = R.dim
    field = R.field
    rhs = [field.zero] * (d * d)
    for m in range(d):
        rhs[index * d + m] = R.unit[m]
    w = linalg.mat_vec(Einv, rhs, field.zero)
    # w is indexed by columns (k, l) of the spanning matrix, i.e. the
    # coefficient of L_{b_l} R_{b_k}; regroup as T[p][q] for L_{b_p} R_{b_q}.
    T = [[w[q * d + p] for q in range(d)] for p in range(d)]
    Rr, pivots = linalg.rref(T, field)
    Rr = [row for row in Rr if any(not field.is_zero(x) for x in row)]
    pairs = []
    for a, pc in enumerate(pivots):
        w_coords = tuple(T[p][pc] for p in range(d))
        z_coords = tuple(Rr[a])
        pairs.append((AlgElement(R, w_coords), AlgElement(R, z_coords)))
    return DualSystem(R, index, pairs)


class HomSpec:
    """A validated homomorphism R -> R (x) S given by basis images."""

    def __init__(self, R: StructAlgebra, ring, images, validated=False):
        self.R = R
        self.ring = ring
        self.images = tuple(images)
        self.validated = validated

    def image_of_coords(self, coords) -> TensorElement:
        """phi(x) for x given by ground-field coordinates."""
        field = self.R.field
        out = TensorElement.zero(self.R, self.ring)
        for c, img in zip(coords, self.images):
            if not field.is_zero(c):
                out = out + img.scale_field(c)
        return out

    def __repr__(self):
        return "HomSpec(R dim %d, S = %s)" % (self.R.dim, self.ring.describe())


def validate_hom(R: StructAlgebra, ring, images) -> HomSpec:
    """Check unit preservation and multiplicativity on all basis pairs."""
    if not verify_central_simple(R):
        raise HomomorphismError("source algebra is not central simple")
    images = tuple(images)
    if len(images) != R.dim:
        raise HomomorphismError("need one image per basis element")
    for img in images:
        if not isinstance(img, TensorElement) or img.algebra != R or img.ring != ring:
            raise HomomorphismError("images must live in R (x) S with the stated R and S")
    field = R.field
    one = TensorElement.unit(R, ring)
    phi_one = TensorElement.zero(R, ring)
    for lam, img in zip(R.unit, images):
        if not field.is_zero(lam):
            phi_one = phi_one + img.scale_field(lam)
    if phi_one != one:
        raise HomomorphismError("unit is not preserved", report={"kind": "unit"})
    spec = HomSpec(R, ring, images, validated=False)
    for i in range(R.dim):
        for j in range(R.dim):
            lhs = images[i] * images[j]
            rhs = spec.image_of_coords(R.mul_coords(
                tuple(field.one if t == i else field.zero for t in range(R.dim)),
                tuple(field.one if t == j else field.zero for t in range(R.dim)),
            ))
            if lhs != rhs:
                raise HomomorphismError(
                    "images violate multiplicativity on basis pair (%s, %s)"
                    % (R.labels[i], R.labels[j]),
                    report={"kind": "product", "i": i, "j": j, "lhs": lhs, "rhs": rhs},
                )
    spec.validated = True
    return spec


def hom_from_conjugation(R: StructAlgebra, ring, a: TensorElement, a_inv=None):
    """The inner homomorphism x -> a x a^{-1}; returns (HomSpec, a_inv)."""
    if a_inv is None:
        a_inv = tensor_invert(a)
    images = []
    for i in range(R.dim):
        ei = tuple(R.field.one if t == i else R.field.zero for t in range(R.dim))
        images.append(a.mul_alg_right(ei) * a_inv)
    return validate_hom(R, ring, images), a_inv


def _solve_spanning_with_ring_rhs(R: StructAlgebra, ring, rhs, reverse_pivots=False):
    """Fresh elimination of the spanning system with an S-valued right side.

    Independent of the cached inverse; used to confirm uniqueness of the
    extraction solution under a different pivoting order.
    """
    E = [list(row) for row in R.spanning_matrix()]
    field = R.field
    n = len(E)
    b = list(rhs)
    cols = list(range(n))
    if reverse_pivots:
        cols = cols[::-1]
    where = [None] * n
    rowsused = set()
    for col in cols:
        pivot = None
        for i in range(n):
            if i not in rowsused and not field.is_zero(E[i][col]):
                pivot = i
                break
        if pivot is None:
            raise ExtractionError("extraction system is singular")
        rowsused.add(pivot)
        where[col] = pivot
        inv = field.inv(E[pivot][col])
        E[pivot] = [x * inv for x in E[pivot]]
        b[pivot] = ring.scale(inv, b[pivot])
        for i in range(n):
            if i != pivot and not field.is_zero(E[i][col]):
                f = E[i][col]
                E[i] = [x - f * y for x, y in zip(E[i], E[pivot])]
                b[i] = b[i] - ring.scale(f, b[pivot])
    return [b[where[col]] for col in range(n)]


class CoefficientTuple:
    """The c_k and their S-coordinates s_kl, with (a), (b), (c) verified."""

    def __init__(self, hom: HomSpec, cs, s_matrix):
        self.hom = hom
        self.cs = tuple(cs)
        self.s_matrix = tuple(tuple(row) for row in s_matrix)

    def first_nonzero_index(self):
        for k, c in enumerate(self.cs):
            if not c.is_zero():
                return k
        return None


def extract_coefficients(hom: HomSpec, independent_solve=False) -> CoefficientTuple:
    """Solve for the c_k of a validated homomorphism and verify the
    three defining identities exactly.

    The linear system has the d^2 x d^2 spanning matrix of R over the
    ground field and an S-valued right side, so one cached inverse
    serves every coefficient ring.  ``independent_solve`` re-derives the
    solution by fresh elimination with reversed pivot order instead.
    """
    if not hom.validated:
        raise ExtractionError("homomorphism must be validated before extraction")
    R = hom.R
    ring = hom.ring
    d = R.dim
    rhs = []
    for t in range(d):
        rhs.extend(hom.images[t].coords)
    if independent_solve:
        svec = _solve_spanning_with_ring_rhs(R, ring, rhs, reverse_pivots=True)
    else:
        Einv = R.spanning_inverse()
        if Einv is None:
            raise ExtractionError("algebra is not central simple")
        svec = linalg.matvec_field_action(Einv, rhs, ring)
    s_matrix = [[svec[k * d + l] for l in range(d)] for k in range(d)]
    cs = [TensorElement(R, ring, s_matrix[k]) for k in range(d)]
    ct = CoefficientTuple(hom, cs, s_matrix)
    _verify_coefficients(ct)
    return ct


def _verify_coefficients(ct: CoefficientTuple):
    hom = ct.hom
    R = hom.R
    field = R.field
    d = R.dim
    basis_coords = [
        tuple(field.one if t == i else field.zero for t in range(d)) for i in range(d)
    ]
    # (a) phi(x) = sum_k c_k x r_k on all basis x
    for t in range(d):
        acc = TensorElement.zero(R, hom.ring)
        for k in range(d):
            xr = R.mul_coords(basis_coords[t], basis_coords[k])
            acc = acc + ct.cs[k].mul_alg_right(xr)
        if acc != hom.images[t]:
            raise ExtractionError("coefficient identity (a) fails on basis index %d" % t)
    # (b) phi(x) c_k = c_k x
    for k in range(d):
        for t in range(d):
            lhs = hom.images[t] * ct.cs[k]
            rhs = ct.cs[k].mul_alg_right(basis_coords[t])
            if lhs != rhs:
                raise ExtractionError(
                    "intertwining identity (b) fails at (x index %d, k %d)" % (t, k)
                )
    # (c) sum_k c_k r_k = 1
    acc = TensorElement.zero(R, hom.ring)
    for k in range(d):
        acc = acc + ct.cs[k].mul_alg_right(basis_coords[k])
    if acc != TensorElement.unit(R, hom.ring):
        raise ExtractionError("unit-sum identity (c) fails")


def witness_element(hom: HomSpec, l: int) -> TensorElement:
    """B_l = sum_j w_j phi(z_j) over the dual system for coordinate l;
    satisfies B_l c_k = 1 (x) s_kl for every k."""
    ds = dual_system(hom.R, l)
    out = TensorElement.zero(hom.R, hom.ring)
    for w, z in ds.pairs:
        out = out + hom.image_of_coords(z.coords).mul_alg_left(w.coords)
    return out


def witness(hom: HomSpec, ct: CoefficientTuple, k: int, l: int) -> TensorElement:
    """The witness b with b c_k = 1 (x) s_kl, verified before returning."""
    b = witness_element(hom, l)
    expected = TensorElement.from_ring(hom.R, hom.ring, ct.s_matrix[k][l])
    if b * ct.cs[k] != expected:
        raise ExtractionError("witness identity fails at (k=%d, l=%d)" % (k, l))
    return b


def unit_in_coefficient_span(ct: CoefficientTuple):
    """Coefficients lambda_kl over F with sum lambda_kl s_kl = 1, for S
    finite-dimensional over F or S = F itself; None when no such
    combination exists (impossible for valid input)."""
    ring = ct.hom.ring
    field = ct.hom.R.field
    flat = [s for row in ct.s_matrix for s in row]
    if ring.is_field:
        cols = [[s] for s in flat]
        target = [ring.one]
    elif ring.family == "findim":
        cols = [list(s.coords) for s in flat]
        target = list(ring.algebra.unit)
    else:
        raise ExtractionError("span check needs a finite-dimensional coefficient ring")
    rows = [[cols[j][i] for j in range(len(cols))] for i in range(len(target))]
    return linalg.solve_any(rows, target, field)


class ConjugatorCheck:
    """Successful verification record: the pair (c, c^{-1}) plus the list
    of identities that were checked."""

    def __init__(self, conjugator, inverse, checks):
        self.conjugator = conjugator
        self.inverse = inverse
        self.checks = list(checks)


def verify_conjugator(hom: HomSpec, c: TensorElement) -> ConjugatorCheck:
    """Check phi(r_k) c = c r_k for every basis index and produce a
    verified two-sided inverse; raises ConjugationError / NotInvertibleError."""
    R = hom.R
    field = R.field
    checks = []
    for t in range(R.dim):
        et = tuple(field.one if i == t else field.zero for i in range(R.dim))
        if hom.images[t] * c != c.mul_alg_right(et):
            raise ConjugationError(
                "conjugation identity fails on basis index %d" % t, index=t
            )
    checks.append("conjugation identity on all %d basis elements" % R.dim)
    c_inv = tensor_invert(c)
    checks.append("two-sided inverse verified by multiplication")
    return ConjugatorCheck(c, c_inv, checks)


def central_quotient(a: TensorElement, c: TensorElement):
    """s with a^{-1} c = 1 (x) s, or None; the ambiguity of conjugators
    for one homomorphism is exactly such central factors."""
    a_inv = tensor_invert(a)
    return (a_inv * c).central_part()
