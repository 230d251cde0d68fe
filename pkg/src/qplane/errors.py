"""Exception types shared across the package."""


class QPlaneError(Exception):
    """Base class for all package errors."""


class DomainError(QPlaneError):
    """Operation called outside its domain (bad N, wrong grade, ...)."""


class PoleError(QPlaneError):
    """Denominator vanishes at an evaluation point (numerator does not)."""

    code = "pole"


class IndeterminateError(QPlaneError):
    """Both numerator and denominator vanish at an evaluation point."""

    code = "indeterminate"


class UnresolvedSymbolError(QPlaneError):
    """A symbol has no resolution or involution rule in the context."""


class ShapeError(QPlaneError):
    """Tensor legs incompatible for the requested operation."""


class DegeneracyError(QPlaneError):
    """A linear solve in rule generation hit a vanishing minor."""


class BudgetError(QPlaneError):
    """Rewrite step budget exceeded."""


class UnsupportedWordError(QPlaneError):
    """Word outside the supported alphabet or ordering domain."""


class ExprSyntaxError(QPlaneError):
    """Expression parse failure; carries a 1-based column."""

    def __init__(self, message, column):
        super().__init__("%s (column %d)" % (message, column))
        self.column = column
