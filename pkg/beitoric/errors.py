"""Exception hierarchy for beitoric.

Every exception derives from a builtin so that callers catching ``ValueError``
or ``RuntimeError`` keep working.
"""

from typing import Optional


class BeitoricError(Exception):
    """Base mixin for all package errors."""


class GraphFormatError(BeitoricError, ValueError):
    """Edge-list input that does not follow the ``graph <n>`` format."""

    kind = "GraphFormat"

    def __init__(self, detail: str, line: Optional[int] = None, column: Optional[int] = None):
        self.detail = detail
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" at line {line}"
            if column is not None:
                where += f", column {column}"
        super().__init__(f"{self.kind}{where}: {detail}")


class MalformedHeaderError(GraphFormatError):
    kind = "MalformedHeader"


class MalformedEdgeError(GraphFormatError):
    kind = "MalformedEdge"


class VertexOutOfRangeError(GraphFormatError):
    kind = "VertexOutOfRange"


class SelfLoopError(GraphFormatError):
    kind = "SelfLoop"


class DuplicateEdgeError(GraphFormatError):
    kind = "DuplicateEdge"


class GraphError(BeitoricError, ValueError):
    """A graph that does not satisfy an operation's precondition."""


class VertexCountMismatchError(GraphError):
    pass


class NotACycleError(GraphError):
    pass


class OddCycleError(GraphError):
    pass


class NonBipartiteError(GraphError):
    pass


class NotLocallyCompleteError(GraphError):
    pass


class NonHomogeneousError(BeitoricError, ValueError):
    """Saturation was asked for an ideal with an inhomogeneous generator."""


class ExactOverflowError(BeitoricError, OverflowError):
    """An exponent or matrix entry left the supported fixed-width range."""


class InternalInconsistencyError(BeitoricError, RuntimeError):
    """Two computations that must agree did not."""
