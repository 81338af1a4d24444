"""Exception hierarchy shared by every module.

The CLI maps :class:`ValidationError` to exit code 2 and
:class:`ResourceLimitError` to exit code 3.
"""


class TopoError(Exception):
    """Base class for all errors raised by topopar."""


class ValidationError(TopoError, ValueError):
    """Invalid input: bad parameters, out-of-range ids, forbidden structure."""


class ParseError(ValidationError):
    """Malformed edge-list or bracket text."""

    def __init__(self, message, *, line=None, offset=None):
        where = ""
        if line is not None:
            where = f"line {line}: "
        elif offset is not None:
            where = f"offset {offset}: "
        super().__init__(where + message)
        self.line = line
        self.offset = offset


class DisconnectedGraphError(ValidationError):
    """A metric that needs a connected graph met an unreachable vertex."""

    def __init__(self, source, unreachable):
        super().__init__(f"graph is disconnected: vertex {unreachable} "
                         f"is unreachable from {source}")
        self.source = source
        self.unreachable = unreachable


class UnsupportedModeError(ValidationError):
    """Operation requested on a projection built in the wrong mode."""


class InfeasibleError(ValidationError):
    """A directive that no topology can satisfy (admissible distance < 1)."""

    def __init__(self, message, distance=None):
        super().__init__(message)
        self.distance = distance


class ResourceLimitError(TopoError):
    """A configurable size cap was exceeded."""

    def __init__(self, message, cap):
        super().__init__(f"{message} (cap={cap})")
        self.cap = cap
