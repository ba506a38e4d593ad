"""Error taxonomy shared by all modules.

Every failure is raised before any output buffer is mutated.
"""


class FastDstError(ValueError):
    """Base class for all fastdst errors."""


class SizeError(FastDstError):
    """A buffer length violates an operation's size contract."""


class PlanError(FastDstError):
    """A plan does not match the requested kind, size, or constants."""


class NumericError(FastDstError):
    """Non-finite data (NaN or infinity) was detected in an input."""


class SignalFormatError(FastDstError):
    """A signal file could not be parsed."""
