"""Exact matrix pencils over GF(p) and Q.

Eigenvector varieties, realization of quadric-defined varieties as
eigenvalue sets, and reflection functors on Kronecker modules.
"""

__version__ = "0.1.0"

from ._accel import backend_name

from .canonical import (
    CanonicalModule,
    QuadraticForm,
    beilinson_check,
    build_canonical,
    eval_quadratic,
    quad_to_hom,
    veronese_d,
)
from .eigen import (
    EigenReport,
    bristle_sum_submodule,
    eigenvalue_of,
    eigenvalues,
    eigenvector_space,
    eigenvector_variety,
    eigenvector_variety_oracle,
    has_sufficiently_many,
    is_eigenvector,
)
from .field import GF, QQ, FieldSpec
from .linalg import Matrix, Subspace, apply, kernel_basis, matmul, rref, subspace_intersection, subspace_sum
from .pencil import (
    DimensionVector,
    MatrixPencil,
    bristle,
    direct_sum,
    hom_dim,
    is_equivalence_witness,
    is_reduced,
    reduced_decomposition,
    simple,
)
from .projective import ProjectivePoint
from .realize import RealizationResult, realize_variety, select_generating_bristles, squareize, verify_realization
from .reflect import (
    E0Set,
    OrbitReport,
    build_preprojectives,
    e0_set,
    preprojective_dimvecs,
    sigma,
    sigma_iterate,
    sigma_minus,
    theorem2_harness,
)

__all__ = [
    "__version__",
    "apply",
    "backend_name",
    "beilinson_check",
    "bristle",
    "bristle_sum_submodule",
    "build_canonical",
    "build_preprojectives",
    "CanonicalModule",
    "DimensionVector",
    "direct_sum",
    "e0_set",
    "E0Set",
    "EigenReport",
    "eigenvalue_of",
    "eigenvalues",
    "eigenvector_space",
    "eigenvector_variety",
    "eigenvector_variety_oracle",
    "eval_quadratic",
    "FieldSpec",
    "GF",
    "has_sufficiently_many",
    "hom_dim",
    "is_eigenvector",
    "is_equivalence_witness",
    "is_reduced",
    "kernel_basis",
    "matmul",
    "Matrix",
    "MatrixPencil",
    "OrbitReport",
    "preprojective_dimvecs",
    "ProjectivePoint",
    "QQ",
    "quad_to_hom",
    "QuadraticForm",
    "RealizationResult",
    "realize_variety",
    "reduced_decomposition",
    "rref",
    "select_generating_bristles",
    "sigma",
    "sigma_iterate",
    "sigma_minus",
    "simple",
    "squareize",
    "Subspace",
    "subspace_intersection",
    "subspace_sum",
    "theorem2_harness",
    "verify_realization",
    "veronese_d",
]
