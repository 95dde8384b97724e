"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Dimension or shape mismatch between exact-arithmetic objects."""


class DomainError(ValueError):
    """Input violates an operation's contract (e.g. non-dominant weight)."""


class UnsupportedCaseError(Exception):
    """The requested case is outside the implemented theory.

    The message names the missing result or machinery so callers know
    what would be required to handle the input.
    """
