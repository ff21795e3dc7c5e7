"""Exception hierarchy shared by every module."""


class HessenbergError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(HessenbergError, ValueError):
    """Two objects that must share a window size do not."""


class InvalidInput(HessenbergError, ValueError):
    """Malformed permutation, Hessenberg function, corner, matrix or root."""


class BudgetExceeded(HessenbergError):
    """An enumeration would exceed its desk-scale ceiling."""


class NotMinimal(HessenbergError, ValueError):
    """A Hessenberg function is not minimal in its E_1n-equivalence class."""


class HypothesisViolation(HessenbergError, ValueError):
    """A theorem hypothesis (e.g. nilpotency of X) does not hold."""


class NoSolution(HessenbergError):
    """The requested object does not exist (e.g. wrong root length)."""
