"""
Exception hierarchy shared by the library and the command line front end.
"""


class TwcutError(Exception):
    """Base class for every error raised by twcut."""

    exit_code = 1


class GraphFormatError(TwcutError):
    """Input text (graph, pairs, class or target document) could not be parsed."""

    exit_code = 2


class PreconditionError(TwcutError):
    """An operation was called with arguments violating its contract."""

    exit_code = 3


class VertexRangeError(PreconditionError):
    """A vertex id does not exist in the host graph."""

    def __init__(self, vertex: int, n: int):
        super().__init__(f"Vertex {vertex} out of range (graph has {n} vertices, ids 0..{n - 1})")
        self.vertex = vertex
        self.n = n


class SeparatorBoundError(PreconditionError):
    """The minimum separator between the requested terminals exceeds the bound."""


class CanonicalSizeError(PreconditionError):
    """Graph too large to canonicalize; raise TWCUT_K_MAX if this is intended."""


class DecompositionError(PreconditionError):
    """A tree decomposition violates one of its defining conditions."""


class NonHereditaryClassError(PreconditionError):
    """A compiled class contains a member with a non-member induced subgraph."""


class OracleLimitError(PreconditionError):
    """Instance exceeds the brute-force oracle cap (TWCUT_ORACLE_MAX_VERTICES)."""


class OracleMismatchError(TwcutError):
    """Solver and brute-force oracle disagree."""

    exit_code = 4
