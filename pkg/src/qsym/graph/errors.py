"""Errors raised while building or reading graphs."""

from __future__ import annotations

from qsym.report import HandledError


class GraphError(ValueError):
    """Base class for graph errors."""


class DuplicateEdge(GraphError):  # noqa: N818
    """The same ``(s, r)`` pair appears twice; multiple edges are not supported."""


class VertexOutOfRange(GraphError):  # noqa: N818
    """An edge endpoint lies outside ``1..n``."""


class LoopsPresent(GraphError):  # noqa: N818
    """The operation needs a loopless graph."""


class TooLarge(GraphError):  # noqa: N818
    """The graph has more vertices than brute-force enumeration is allowed to handle."""


class ParseError(GraphError, HandledError):
    """An input file (graph, representation or certificate) could not be read."""


__all__ = (
    "DuplicateEdge",
    "GraphError",
    "LoopsPresent",
    "ParseError",
    "TooLarge",
    "VertexOutOfRange",
)
