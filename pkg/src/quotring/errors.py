"""Exception hierarchy shared by every module of the package."""


class QuotringError(Exception):
    """Base class for all errors raised by quotring."""


class ZeroIdealError(QuotringError, ValueError):
    pass


class NotCoprimeError(QuotringError, ValueError):
    pass


class SingularMatrixError(QuotringError, ValueError):
    pass


class BoundTooSmallError(QuotringError, ValueError):
    pass


class InvalidRingError(QuotringError, ValueError):
    """Structure constants do not describe a commutative unital ring."""


class NotIntegralError(QuotringError, ValueError):
    """A module or element that must be integral is not."""


class RankDeficientError(QuotringError, ValueError):
    """The module does not have full rank."""


class SamplingBudgetExhausted(QuotringError, RuntimeError):
    """A Las Vegas loop hit its trial cap without success."""
