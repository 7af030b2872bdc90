"""Exception types shared across the package."""


class AntistrongError(Exception):
    """Base class for all package-specific errors."""


class InvalidInput(AntistrongError):
    """Malformed graph data, out-of-range ids, or bad parameters."""


class TooFewVertices(AntistrongError):
    """Operation needs at least 3 vertices (antistrongness is undefined below)."""


class NotAntistrong(AntistrongError):
    """A witness was requested for a digraph that is not antistrong."""


class Disconnected(AntistrongError):
    """Operation requires a connected (di)graph."""


class NotAPartition(AntistrongError):
    """Vertex sets do not form a partition of the vertex set."""


class NoBase(AntistrongError):
    """Matroid rank falls short of the requested span.

    Carries the best independent set found and, when available, a
    deficiency set witnessing the shortfall.
    """

    def __init__(self, message, best=None, deficiency=None):
        super().__init__(message)
        self.best = best
        self.deficiency = deficiency


class SizeLimit(AntistrongError):
    """Exact search exceeded its node budget or hard input-size cap."""


class SchemaMismatch(AntistrongError):
    """Certificate JSON does not match the expected schema or input hash."""


class ParseError(InvalidInput):
    """Instance or CNF file could not be parsed; carries a line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class OpenProblem(AntistrongError):
    """The requested task is an open problem; no algorithm is implemented."""
