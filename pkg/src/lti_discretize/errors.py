"""
Exception hierarchy shared by every lti_discretize module.
"""

from typing import Optional, Sequence, Tuple, TYPE_CHECKING

if TYPE_CHECKING:
    from lti_discretize.model.validation import Violation


class DiscretizationError(Exception):
    """Base class for all errors raised by lti_discretize."""
    pass


class DimensionMismatchError(DiscretizationError, ValueError):
    """Raised when matrix shapes are incompatible for an operation."""

    def __init__(self, message: str, shapes: Sequence[Tuple[int, int]] = ()):
        super().__init__(message)
        self.shapes = tuple(shapes)


class NonFiniteEntryError(DiscretizationError, ValueError):
    """Raised when a matrix would hold NaN or infinite entries."""
    pass


class AsymmetricMatrixError(DiscretizationError, ValueError):
    """Raised when a matrix that must be symmetric is not, within tolerance."""
    pass


class IndefiniteMatrixError(DiscretizationError, ArithmeticError):
    """Raised when a matrix that must be positive semi-definite is not."""

    def __init__(self, message: str, pivot: Optional[float] = None, index: Optional[int] = None):
        super().__init__(message)
        self.pivot = pivot
        self.index = index


class SystemValidationError(DiscretizationError, ValueError):
    """Raised when a continuous-time system violates one or more structural rules."""

    def __init__(self, violations: Sequence['Violation']):
        self.violations = list(violations)
        lines = "\n".join(f"  - {violation.message}" for violation in self.violations)
        super().__init__(f"System failed validation with {len(self.violations)} violation(s):\n{lines}")


class NumericalOverflowError(DiscretizationError, ArithmeticError):
    """Raised when a computation leaves the representable floating point range."""
    pass


class OracleDivergenceError(DiscretizationError, ArithmeticError):
    """Raised when the integration oracle produces non-finite state."""
    pass


class DocumentError(DiscretizationError, ValueError):
    """Raised when a system document cannot be read, parsed or schema-validated."""
    pass
