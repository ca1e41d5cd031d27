from .parse import (InexactConversionWarning, PolySyntaxError, UnknownVariableError,
                    format_polynomial, format_scalar, parse_polynomial, parse_scalar)
from .polynomial import Polynomial, bombieri_weyl_norm
from .program import EvalProgram
from .scalar import GaussianRational, Mode, ModeMismatchError
from .system import (ConstantEquationError, DimensionMismatchError, NewtonResult,
                     NonSquareSystemError, Point, PolySystem, delta_matrix, delta_sq_diagonal,
                     distance_sq, evaluate, evaluate_jacobian, evaluate_with_jacobian, jacobian,
                     newton_operator, projective_point_norm, projective_point_norm_sq,
                     system_norm, system_norm_sq)

__all__ = [
    "ConstantEquationError", "DimensionMismatchError", "EvalProgram", "GaussianRational",
    "InexactConversionWarning", "Mode", "ModeMismatchError", "NewtonResult",
    "NonSquareSystemError", "Point", "PolySyntaxError", "PolySystem", "Polynomial",
    "UnknownVariableError", "bombieri_weyl_norm", "delta_matrix", "delta_sq_diagonal",
    "distance_sq", "evaluate", "evaluate_jacobian", "evaluate_with_jacobian",
    "format_polynomial", "format_scalar", "jacobian", "newton_operator", "parse_polynomial",
    "parse_scalar", "projective_point_norm", "projective_point_norm_sq", "system_norm",
    "system_norm_sq",
]
