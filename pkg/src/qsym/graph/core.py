"""Finite directed graphs without multiple edges."""

from __future__ import annotations

import hashlib
import json
from enum import Enum
from pathlib import Path
from typing import TYPE_CHECKING, Any, Iterable, Iterator, Sequence, Tuple

from sympy import zeros

from .errors import DuplicateEdge, GraphError, LoopsPresent, ParseError, VertexOutOfRange

if TYPE_CHECKING:
    from sympy import Matrix

Edge = Tuple[int, int]


class LoopsMode(Enum):
    """Which category the complement is taken in."""

    WITH_LOOPS = "with_loops"
    WITHOUT_LOOPS = "without_loops"


class Graph:
    """
    A graph on the vertices ``1..n``; edge ``e_j`` is ``edges[j - 1]`` with source ``s`` and range ``r``.

    Undirected graphs are the symmetric ones: every ``(s, r)`` comes with ``(r, s)``.
    """

    __slots__ = ("_edge_set", "_hash", "edges", "n")

    def __init__(self, n: int, edges: Sequence[Edge]) -> None:
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(edges)
        self._edge_set = frozenset(self.edges)
        self._hash: str | None = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, source: int, target: int) -> bool:
        return (source, target) in self._edge_set

    def edge(self, index: int) -> Edge:
        """:return: the edge ``e_index`` (1-based)"""
        return self.edges[index - 1]

    def indexed_edges(self) -> Iterator[tuple[int, Edge]]:
        return enumerate(self.edges, start=1)

    def has_loops(self) -> bool:
        return any(s == r for s, r in self.edges)

    def is_undirected(self) -> bool:
        return all((r, s) in self._edge_set for s, r in self.edges)

    def emitting(self, vertex: int) -> list[int]:
        """:return: indices of the edges with source ``vertex``"""
        return [j for j, (s, _) in self.indexed_edges() if s == vertex]

    def receiving(self, vertex: int) -> list[int]:
        """:return: indices of the edges with range ``vertex``"""
        return [j for j, (_, r) in self.indexed_edges() if r == vertex]

    def sources(self) -> list[int]:
        """:return: the vertices emitting at least one edge"""
        return sorted({s for s, _ in self.edges})

    def ranges(self) -> list[int]:
        """:return: the vertices receiving at least one edge"""
        return sorted({r for _, r in self.edges})

    def sinks(self) -> list[int]:
        """:return: the vertices emitting no edge"""
        emitting = {s for s, _ in self.edges}
        return [v for v in self.vertices if v not in emitting]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def same_edges(self, other: Graph) -> bool:
        """:return: equality up to edge order"""
        return self.n == other.n and self._edge_set == other._edge_set

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, edges={list(self.edges)!r})"

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "edges": [[s, r] for s, r in self.edges]}

    @property
    def hash(self) -> str:
        """:return: the first 16 hex digits of the sha256 of the canonical graph JSON"""
        if self._hash is None:
            body = json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
            self._hash = hashlib.sha256(body.encode("utf-8")).hexdigest()[:16]
        return self._hash


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """
    Build a validated graph.

    :param n: vertex count, the vertices are ``1..n``
    :param edges: ``(source, range)`` pairs, their order fixes the edge indices
    :return: the graph
    """
    if n < 1:
        msg = f"a graph needs at least one vertex, got {n}"
        raise VertexOutOfRange(msg)
    seen: set[Edge] = set()
    checked: list[Edge] = []
    for raw in edges:
        source, target = (int(v) for v in raw)
        for vertex in (source, target):
            if not 1 <= vertex <= n:
                msg = f"vertex {vertex} of edge ({source}, {target}) is outside 1..{n}"
                raise VertexOutOfRange(msg)
        if (source, target) in seen:
            msg = f"edge ({source}, {target}) given twice"
            raise DuplicateEdge(msg)
        seen.add((source, target))
        checked.append((source, target))
    return Graph(n, checked)


def undirected(n: int, pairs: Iterable[Edge]) -> Graph:
    """:return: the symmetric graph with both directions of each pair, ``(s, r)`` before ``(r, s)``"""
    edges: list[Edge] = []
    for s, r in pairs:
        edges.append((s, r))
        if s != r:
            edges.append((r, s))
    return build_graph(n, edges)


def adjacency(graph: Graph) -> Matrix:
    """:return: the binary ``n x n`` adjacency matrix, entry ``(i, j)`` (0-based) is 1 iff ``(i+1, j+1)`` is an edge"""
    matrix = zeros(graph.n, graph.n)
    for s, r in graph.edges:
        matrix[s - 1, r - 1] = 1
    return matrix


def loops_mode(graph: Graph, mode: LoopsMode | str | None = None) -> LoopsMode:
    """:return: the requested category, by default ``with_loops`` exactly when the graph has a loop"""
    if mode is None:
        return LoopsMode.WITH_LOOPS if graph.has_loops() else LoopsMode.WITHOUT_LOOPS
    return LoopsMode(mode)


def complement(graph: Graph, mode: LoopsMode | str | None = None) -> Graph:
    """
    Complement a graph.

    :param graph: the graph
    :param mode: ``with_loops`` complements in ``V x V``, ``without_loops`` also leaves out the diagonal; when not
        given the category follows the graph, see :func:`loops_mode`
    :return: the complement, edges listed row by row
    """
    mode = loops_mode(graph, mode)
    if mode is LoopsMode.WITHOUT_LOOPS and graph.has_loops():
        msg = "the loopless complement needs a graph without loops"
        raise LoopsPresent(msg)
    edges = [
        (i, j)
        for i in graph.vertices
        for j in graph.vertices
        if not graph.has_edge(i, j) and (mode is LoopsMode.WITH_LOOPS or i != j)
    ]
    return Graph(graph.n, edges)


def add_loops(graph: Graph) -> Graph:
    """:return: the graph with the loops ``(1, 1) .. (n, n)`` appended"""
    if graph.has_loops():
        msg = "the graph already has loops"
        raise LoopsPresent(msg)
    return Graph(graph.n, [*graph.edges, *((v, v) for v in graph.vertices)])


def load_graph(path: Path) -> Graph:
    """
    Read a graph file ``{"n": int, "edges": [[s, r], ...]}``.

    :param path: the file to read
    :return: the validated graph
    """
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, ValueError) as exception:
        msg = f"cannot read graph file {path}: {exception}"
        raise ParseError(msg) from exception
    return graph_from_json(raw, source=str(path))


def graph_from_json(raw: Any, source: str = "<json>") -> Graph:
    if not isinstance(raw, dict) or not isinstance(raw.get("n"), int) or not isinstance(raw.get("edges"), list):
        msg = f"{source}: expected an object with an integer 'n' and a list 'edges'"
        raise ParseError(msg)
    edges = raw["edges"]
    pair = 2
    if not all(isinstance(e, list) and len(e) == pair and all(isinstance(v, int) for v in e) for e in edges):
        msg = f"{source}: every edge must be a pair of integers"
        raise ParseError(msg)
    try:
        return build_graph(raw["n"], edges)
    except GraphError as exception:
        msg = f"{source}: {exception}"
        raise ParseError(msg) from exception


def graph_hash(graph: Graph) -> str:
    return graph.hash


def dump_graph(graph: Graph, path: Path) -> None:
    Path(path).write_text(json.dumps(graph.to_json(), indent=2) + "\n", encoding="utf-8")


__all__ = (
    "Edge",
    "Graph",
    "LoopsMode",
    "add_loops",
    "adjacency",
    "build_graph",
    "complement",
    "dump_graph",
    "graph_from_json",
    "graph_hash",
    "load_graph",
    "loops_mode",
    "undirected",
)
