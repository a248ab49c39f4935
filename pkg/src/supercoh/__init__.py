"""Exact cohomology of finite-dimensional Lie superalgebras with trivial coefficients."""

from .cochain import Cochain, CohomologyResult, cochain_basis, cohomology, differential_matrix
from .extension import CentralExtension, build_central_extension, class_of, extensions_equivalent, factor_set
from .field import GF, QQ, Field
from .fiveseq import check_exactness, lemma32_check, multiplier
from .io import parse_algebra, serialize_algebra
from .superalg import GradedSubspace, SuperAlgebra, center, derived_subalgebra, quotient, validate

__version__ = "0.1.0"

__all__ = [
    "Cochain", "CohomologyResult", "cochain_basis", "cohomology", "differential_matrix",
    "CentralExtension", "build_central_extension", "class_of", "extensions_equivalent", "factor_set",
    "GF", "QQ", "Field", "check_exactness", "lemma32_check", "multiplier",
    "parse_algebra", "serialize_algebra",
    "GradedSubspace", "SuperAlgebra", "center", "derived_subalgebra", "quotient", "validate",
]
