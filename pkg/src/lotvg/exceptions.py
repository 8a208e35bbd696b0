"""Exception hierarchy shared by every module."""


class VisibilityGraphError(Exception):
    """Base class for all errors raised by lotvg."""


class SelfLoopError(VisibilityGraphError, ValueError):
    pass


class UnknownNodeError(VisibilityGraphError, KeyError):
    pass


class EmptyInputError(VisibilityGraphError, ValueError):
    pass


class OrderingError(VisibilityGraphError, ValueError):
    pass


class IndexRangeError(VisibilityGraphError, IndexError):
    pass


class InvalidChoiceError(VisibilityGraphError, ValueError):
    pass


class WarmupIncompleteError(VisibilityGraphError, RuntimeError):
    """The window has not reached (or is no longer at) full capacity."""


class StreamGapError(VisibilityGraphError, ValueError):
    """A sample arrived whose index is not exactly latest + 1."""


class DomainError(VisibilityGraphError, ValueError):
    """A NaN or infinite value was offered to the engine."""


class SeriesParseError(VisibilityGraphError, ValueError):
    """A series file could not be parsed; message carries the line number."""


class ConfigError(VisibilityGraphError, ValueError):
    pass
