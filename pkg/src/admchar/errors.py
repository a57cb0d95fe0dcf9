"""Exception types shared across the package."""


class ResourceLimitError(RuntimeError):
    """An enumeration exceeded the configured output cap.

    Signals that the requested instance is too large for desk-scale
    computation, not a mathematical failure.
    """


class InvalidIndexSetError(ValueError):
    """An index set is not valid for the ambient composition."""


class RankMismatchError(ValueError):
    """Operands were built for different ranks."""


class AdmissibilityError(ValueError):
    """A configuration fails an admissibility precondition."""
