"""Exception types shared across the package."""


class ChipfireError(Exception):
    """Base class for errors raised by this package."""


class ValidationError(ChipfireError, ValueError):
    """Malformed input: bad graph data, out-of-range vertices, wrong lengths."""


class BudgetExceededError(ChipfireError, RuntimeError):
    """A computation was refused or abandoned because it exceeds a size or
    time budget.  When a search can still bracket the answer, the bounds are
    attached as ``lower`` and ``upper`` (either may be None)."""

    def __init__(self, message, lower=None, upper=None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
