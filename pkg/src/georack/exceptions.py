"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Raised when an input file or data structure violates a model invariant."""


class InfeasibleInstanceError(RuntimeError):
    """Raised when no rack placement can satisfy the instance constraints."""


class OracleSizeError(RuntimeError):
    """Raised when an instance is too large for exhaustive enumeration."""
