"""
Exception hierarchy for typeb-fock.

Every error raised on purpose by the library derives from TypeBFockError and
also from the builtin it refines, so callers catching ValueError/RuntimeError
keep working.
"""

from typing import Any, Optional


class TypeBFockError(Exception):
    """Base class for library errors."""


class ArgumentError(TypeBFockError, ValueError):
    """An argument is outside the operation's domain."""


class ConstructionError(ArgumentError):
    """A value object failed its construction-time invariant check."""


class ResourceLimitError(TypeBFockError, RuntimeError):
    """A configured size cap would be exceeded."""

    def __init__(self, what: str, requested: int, cap: int):
        self.what = what
        self.requested = requested
        self.cap = cap
        super().__init__(
            f"{what} = {requested} exceeds the configured cap {cap}; "
            "raise the cap explicitly to proceed"
        )


class DomainError(TypeBFockError, ValueError):
    """A numerical formula is evaluated outside its domain."""

    def __init__(self, message: str, context: Optional[dict[str, Any]] = None):
        self.context = context or {}
        super().__init__(message)


class CrossCheckError(TypeBFockError, RuntimeError):
    """Two independent computational routes disagree."""

    def __init__(self, what: str, residual: float, tolerance: float):
        self.what = what
        self.residual = residual
        self.tolerance = tolerance
        super().__init__(
            f"{what}: routes disagree by {residual:.3e} (tolerance {tolerance:.1e})"
        )
