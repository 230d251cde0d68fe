"""Exact symbolic engine for multiparametric quantum orthogonal planes."""

from .scalar import Coeff, ParameterContext, Scalar
from .tensor import Tensor
from .errors import (
    BudgetError,
    DegeneracyError,
    DomainError,
    ExprSyntaxError,
    IndeterminateError,
    PoleError,
    QPlaneError,
    ShapeError,
    UnresolvedSymbolError,
    UnsupportedWordError,
)

__all__ = [
    "Coeff",
    "ParameterContext",
    "Scalar",
    "Tensor",
    "QPlaneError",
    "DomainError",
    "PoleError",
    "IndeterminateError",
    "UnresolvedSymbolError",
    "ShapeError",
    "DegeneracyError",
    "BudgetError",
    "UnsupportedWordError",
    "ExprSyntaxError",
]

__version__ = "0.1.0"
