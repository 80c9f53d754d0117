"""snforge: exact construction, verification and refutation of inner
conjugators c with phi(x) = c x c^{-1} for homomorphisms
phi: R -> R (x) S from a central simple algebra R into its tensor
product with a coefficient ring S.

Supported coefficient rings: the ground field, finite-dimensional
algebras, polynomial rings (GCD normalization), matrix rings over
univariate polynomials (module factorization), truncated power series
(order-by-order lifting), direct products, and the elliptic coordinate
ring F[x,y]/(y^2 - x^3 - x), where innerness can fail and refutations
are produced instead.
"""

from .algebras import (
    AlgebraError,
    AlgElement,
    Bimodule,
    StructAlgebra,
    direct_sum_algebra,
    from_dense_table,
    jacobson_radical,
    matrix_algebra,
    quaternion_algebra,
    quotient_by_ideal,
    tensor_struct,
    truncated_poly_algebra,
    upper_triangular_algebra,
    verify_central_simple,
)
from .applications import (
    AutSpec,
    DerivationSpec,
    decompose_automorphism,
    flip_innerness_check,
    inner_derivation_witness,
)
from .backends import (
    Certificate,
    SolveRequest,
    certify_not_inner_curve,
    dispatch,
    solve_findim,
    solve_pid_module,
    solve_power_series,
    solve_product,
    solve_ufd,
)
from .fields import QQ, FieldError, PrimeField
from .polynomials import PolyRing, RationalFunctionField, poly_gcd
from .rings import (
    CurveRing,
    FinDimRing,
    MatrixPolyRing,
    NotInvertibleError,
    ProductRing,
    SeriesRing,
)
from .sn_core import (
    CoefficientTuple,
    DualSystem,
    HomSpec,
    central_quotient,
    dual_system,
    extract_coefficients,
    hom_from_conjugation,
    validate_hom,
    verify_conjugator,
    witness,
    witness_element,
)
from .tensor import TensorElement, regular_representation, tensor_invert

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "AlgElement",
    "AutSpec",
    "Bimodule",
    "Certificate",
    "CoefficientTuple",
    "CurveRing",
    "DerivationSpec",
    "DualSystem",
    "FieldError",
    "FinDimRing",
    "HomSpec",
    "MatrixPolyRing",
    "NotInvertibleError",
    "PolyRing",
    "PrimeField",
    "ProductRing",
    "QQ",
    "RationalFunctionField",
    "SeriesRing",
    "SolveRequest",
    "StructAlgebra",
    "TensorElement",
    "central_quotient",
    "certify_not_inner_curve",
    "decompose_automorphism",
    "direct_sum_algebra",
    "dispatch",
    "dual_system",
    "extract_coefficients",
    "flip_innerness_check",
    "from_dense_table",
    "hom_from_conjugation",
    "inner_derivation_witness",
    "jacobson_radical",
    "matrix_algebra",
    "poly_gcd",
    "quaternion_algebra",
    "quotient_by_ideal",
    "regular_representation",
    "solve_findim",
    "solve_pid_module",
    "solve_power_series",
    "solve_product",
    "solve_ufd",
    "tensor_invert",
    "tensor_struct",
    "truncated_poly_algebra",
    "upper_triangular_algebra",
    "validate_hom",
    "verify_central_simple",
    "verify_conjugator",
    "witness",
    "witness_element",
]
