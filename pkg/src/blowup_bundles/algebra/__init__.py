"""Exact coefficient arithmetic and truncated Laurent polynomial/matrix algebra."""

from .laurent import (
    BiLaurentPoly,
    NotVHolomorphic,
    add,
    from_V_chart,
    is_U_holomorphic,
    is_V_holomorphic,
    mul,
    restrict_to_exceptional,
    to_V_chart,
)
from .matrix import (
    InvalidTransitionMatrix,
    Matrix2,
    NonUnitDeterminant,
    TransitionMatrix2,
    is_constant_unit,
    is_unit,
    mat_det,
    mat_inverse,
    mat_mul,
)
from .scalars import ONE, ZERO, GaussianRational, I, as_scalar

ExactScalar = GaussianRational

__all__ = [
    "BiLaurentPoly",
    "ExactScalar",
    "GaussianRational",
    "I",
    "InvalidTransitionMatrix",
    "Matrix2",
    "NonUnitDeterminant",
    "NotVHolomorphic",
    "ONE",
    "TransitionMatrix2",
    "ZERO",
    "add",
    "as_scalar",
    "from_V_chart",
    "is_U_holomorphic",
    "is_V_holomorphic",
    "is_constant_unit",
    "is_unit",
    "mat_det",
    "mat_inverse",
    "mat_mul",
    "mul",
    "restrict_to_exceptional",
    "to_V_chart",
]
