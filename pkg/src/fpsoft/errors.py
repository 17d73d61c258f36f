"""Exception hierarchy shared by every fpsoft module."""


class FPSoftError(ValueError):
    """Base class for all library errors."""


class ValidationError(FPSoftError):
    """Raised when a value or structure violates its construction invariants."""


class MismatchError(FPSoftError):
    """Raised when operands live over different universes or FP-soft sets."""


class EmptySupportError(FPSoftError):
    """Raised when a fuzzification is requested over a set with no positive grades."""


class NotEquivalenceError(FPSoftError):
    """Raised when an equivalence class is requested from a non-equivalence relation."""
