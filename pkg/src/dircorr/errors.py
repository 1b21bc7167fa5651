"""Exception hierarchy."""


class DircorrError(Exception):
    """Base class for all package errors."""


class DomainError(DircorrError, ValueError):
    """Input outside the mathematical domain (negative noise, unphysical CM, ...)."""


class FormError(DircorrError, ValueError):
    """Covariance matrix is not in squeezed-thermal form (c2 != -c1)."""


class ProductStateError(DircorrError, ValueError):
    """Quantity undefined for an uncorrelated (c = 0) state."""


class SpectrumError(DircorrError, ArithmeticError):
    """Symplectic discriminant inconsistent beyond rounding."""


class ScanSpecError(DircorrError, ValueError):
    """Invalid scan specification."""


class OracleError(DircorrError, RuntimeError):
    """The bisection oracle's assumptions (monotonicity) do not hold."""
