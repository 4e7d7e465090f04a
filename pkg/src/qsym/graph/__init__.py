"""Finite directed graphs without multiple edges."""

from __future__ import annotations

from .core import (
    Edge,
    Graph,
    LoopsMode,
    add_loops,
    adjacency,
    build_graph,
    complement,
    dump_graph,
    graph_from_json,
    graph_hash,
    load_graph,
    loops_mode,
    undirected,
)
from .corpus import complete_graph, corpus, cycle_graph, empty_graph, loop_graph, table_graph
from .errors import DuplicateEdge, GraphError, LoopsPresent, ParseError, TooLarge, VertexOutOfRange

__all__ = (
    "DuplicateEdge",
    "Edge",
    "Graph",
    "GraphError",
    "LoopsMode",
    "LoopsPresent",
    "ParseError",
    "TooLarge",
    "VertexOutOfRange",
    "add_loops",
    "adjacency",
    "build_graph",
    "complement",
    "complete_graph",
    "corpus",
    "cycle_graph",
    "dump_graph",
    "empty_graph",
    "graph_from_json",
    "graph_hash",
    "load_graph",
    "loop_graph",
    "loops_mode",
    "table_graph",
    "undirected",
)
