"""Constant-dimension subspace codes from multilevel (echelon-Ferrers) constructions."""

from .algebra import GF, MatrixGF, field
from .grassmann import Subspace, gaussian_binomial, subspace_distance
from .multilevel import (
    ConstructionConfig,
    SizePolynomial,
    SubspaceCode,
    construct_classic,
    construct_improved,
)
from .skeleton import IdentifyingVector, constant_weight_lexicode
from .verify import VerifyReport, verify_code, verify_propositions

__all__ = [
    "GF", "MatrixGF", "field", "Subspace", "gaussian_binomial", "subspace_distance",
    "ConstructionConfig", "SizePolynomial", "SubspaceCode", "construct_classic",
    "construct_improved", "IdentifyingVector", "constant_weight_lexicode",
    "VerifyReport", "verify_code", "verify_propositions",
]
