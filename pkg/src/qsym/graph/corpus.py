"""Named graphs and the fixed test corpus."""

from __future__ import annotations

import random
from itertools import combinations, permutations, product

from .core import Edge, Graph, build_graph, undirected

#: vertex labels of the four-vertex table: 1 top left, 2 top right, 3 bottom left, 4 bottom right
TABLE_PAIRS: dict[int, tuple[Edge, ...]] = {
    1: (),
    2: ((1, 2),),
    3: ((1, 2), (1, 3)),
    4: ((1, 2), (3, 4)),
    5: ((1, 2), (1, 3), (2, 3)),
    6: ((1, 2), (1, 3), (2, 4)),
}
CORPUS_SIZE = 50
CORPUS_SEED = 20


def table_graph(row: int) -> Graph:
    """:return: the undirected four-vertex graph of a table row (1..6) as a symmetric directed graph"""
    if row not in TABLE_PAIRS:
        msg = f"table rows are 1..{len(TABLE_PAIRS)}, got {row}"
        raise ValueError(msg)
    return undirected(4, TABLE_PAIRS[row])


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def complete_graph(n: int, loops: bool = False) -> Graph:  # noqa: FBT001, FBT002
    return build_graph(n, [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if loops or i != j])


def cycle_graph(n: int) -> Graph:
    """:return: the directed cycle ``1 -> 2 -> ... -> n -> 1`` (a single loop when ``n`` is 1)"""
    return build_graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def loop_graph() -> Graph:
    """:return: one vertex carrying one loop"""
    return build_graph(1, [(1, 1)])


def _all_small() -> list[Graph]:
    graphs = [empty_graph(1)]
    pairs = list(permutations(range(1, 3), 2))
    for mask in product((False, True), repeat=len(pairs)):
        graphs.append(build_graph(2, [p for p, keep in zip(pairs, mask) if keep]))
    return graphs


def corpus() -> list[Graph]:
    """
    The deterministic corpus of loopless graphs used by the corpus-wide checks.

    Every graph on at most two vertices and the six table graphs, topped up with a seeded sample of three and four
    vertex graphs (undirected and directed, each with at least one edge).

    :return: the graphs, always the same list in the same order
    """
    graphs = [*_all_small(), *(table_graph(row) for row in TABLE_PAIRS)]
    seen = {frozenset(g.edges) | {(0, g.n)} for g in graphs}
    rng = random.Random(CORPUS_SEED)  # noqa: S311
    while len(graphs) < CORPUS_SIZE:
        n = rng.choice((3, 4))
        if rng.random() < 0.5:  # noqa: PLR2004
            pairs = [p for p in combinations(range(1, n + 1), 2) if rng.random() < 0.5]  # noqa: PLR2004
            candidate = undirected(n, pairs)
        else:
            pairs = [p for p in permutations(range(1, n + 1), 2) if rng.random() < 0.35]  # noqa: PLR2004
            candidate = build_graph(n, pairs)
        key = frozenset(candidate.edges) | {(0, n)}
        if candidate.m and key not in seen:
            seen.add(key)
            graphs.append(candidate)
    return graphs


__all__ = (
    "CORPUS_SIZE",
    "TABLE_PAIRS",
    "complete_graph",
    "corpus",
    "cycle_graph",
    "empty_graph",
    "loop_graph",
    "table_graph",
)
