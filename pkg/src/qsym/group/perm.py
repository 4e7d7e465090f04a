"""Classical graph automorphisms: the permutations commuting with the adjacency matrix."""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Sequence

from sympy import zeros
from sympy.combinatorics import Permutation

from qsym.graph import TooLarge, adjacency
from qsym.util.cpu import resolve_jobs

from .catalog import identify

if TYPE_CHECKING:
    from sympy import Matrix

    from qsym.graph import Graph

LOGGER = logging.getLogger(__name__)
DEFAULT_MAX_VERTICES = 10


def from_images(images: Sequence[int]) -> Permutation:
    """:return: the permutation ``i -> images[i - 1]`` on ``1..n``"""
    return Permutation([i - 1 for i in images])


def images(sigma: Permutation) -> tuple[int, ...]:
    """:return: the 1-based image array of a permutation"""
    return tuple(i + 1 for i in sigma.array_form)


def cycle_notation(sigma: Permutation) -> str:
    """:return: 1-based cycle notation without fixed points, ``()`` for the identity"""
    cycles = [c for c in sigma.cyclic_form if len(c) > 1]
    return "".join(f"({' '.join(str(i + 1) for i in c)})" for c in cycles) or "()"


def permutation_matrix(sigma: Permutation) -> Matrix:
    """:return: ``P`` with ``P[i, sigma(i)] = 1`` (0-based)"""
    size = sigma.size
    matrix = zeros(size, size)
    for at, image in enumerate(sigma.array_form):
        matrix[at, image] = 1
    return matrix


def commutes_with_adjacency(sigma: Permutation, graph: Graph) -> bool:
    """:return: whether the permutation matrix commutes with the adjacency matrix"""
    p, eps = permutation_matrix(sigma), adjacency(graph)
    return bool(p * eps == eps * p)


def preserves_edges(sigma: Permutation, graph: Graph) -> bool:
    """:return: ``(sigma(i), sigma(j))`` is an edge iff ``(i, j)`` is, for all vertex pairs"""
    image = images(sigma)
    return all(
        graph.has_edge(image[i - 1], image[j - 1]) == graph.has_edge(i, j)
        for i in graph.vertices
        for j in graph.vertices
    )


@dataclass(frozen=True)
class PermGroup:
    """All elements of a finite permutation group, with the invariants used to name it."""

    degree: int
    elements: tuple[Permutation, ...]
    order_counts: Counter[int] = field(compare=False)
    is_abelian: bool = field(compare=False)

    @classmethod
    def of(cls, degree: int, elements: Iterable[Permutation]) -> PermGroup:
        members = tuple(sorted(elements, key=lambda p: p.array_form))
        counts = Counter(p.order() for p in members)
        abelian = all(a * b == b * a for at, a in enumerate(members) for b in members[at + 1 :])
        return cls(degree, members, counts, abelian)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def label(self) -> str:
        return identify(self.order, self.is_abelian, self.order_counts)

    def __contains__(self, sigma: object) -> bool:
        return sigma in set(self.elements)

    def is_closed(self) -> bool:
        """:return: identity, products and inverses of members are members"""
        members = set(self.elements)
        if Permutation(list(range(self.degree))) not in members:
            return False
        return all(a * b in members for a in members for b in members) and all(~a in members for a in members)

    def cycles(self) -> list[str]:
        return [cycle_notation(p) for p in self.elements]

    def to_json(self) -> dict[str, object]:
        return {"order": self.order, "label": self.label, "elements": self.cycles()}


def _block(graph: Graph, first: int) -> list[tuple[int, ...]]:
    """:return: the automorphism image arrays with ``sigma(1) = first``"""
    n, found = graph.n, []
    image: list[int] = [first]
    used = {first}

    def consistent(vertex: int, target: int) -> bool:
        for other in range(1, vertex):
            mapped = image[other - 1]
            if graph.has_edge(vertex, other) != graph.has_edge(target, mapped):
                return False
            if graph.has_edge(other, vertex) != graph.has_edge(mapped, target):
                return False
        return graph.has_edge(vertex, vertex) == graph.has_edge(target, target)

    def extend(vertex: int) -> None:
        if vertex > n:
            found.append(tuple(image))
            return
        for target in range(1, n + 1):
            if target not in used and consistent(vertex, target):
                image.append(target)
                used.add(target)
                extend(vertex + 1)
                used.discard(target)
                image.pop()

    if consistent(1, first):
        extend(2)
    return found


def automorphisms(graph: Graph, max_vertices: int = DEFAULT_MAX_VERTICES, jobs: int | None = 1) -> PermGroup:
    """
    Enumerate the automorphism group of a graph.

    The search runs over all permutations, pruned as soon as a partial assignment maps an edge onto a non-edge or back;
    blocks with a fixed image of vertex 1 run in parallel and are merged in block order.

    :param graph: the graph
    :param max_vertices: refuse larger graphs
    :param jobs: worker threads, ``None`` for one per CPU
    :return: the group of all ``sigma`` with ``P_sigma eps = eps P_sigma``
    """
    if graph.n > max_vertices:
        msg = f"{graph.n} vertices exceed the enumeration limit of {max_vertices}"
        raise TooLarge(msg)
    firsts = list(graph.vertices)
    workers = min(resolve_jobs(jobs), len(firsts))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="qsym-aut") as executor:
            blocks = list(executor.map(lambda first: _block(graph, first), firsts))
    else:
        blocks = [_block(graph, first) for first in firsts]
    group = PermGroup.of(graph.n, (from_images(img) for block in blocks for img in block))
    LOGGER.debug("graph %s has %d automorphisms (%s)", graph.hash, group.order, group.label)
    return group


__all__ = (
    "DEFAULT_MAX_VERTICES",
    "PermGroup",
    "automorphisms",
    "commutes_with_adjacency",
    "cycle_notation",
    "from_images",
    "images",
    "permutation_matrix",
    "preserves_edges",
)
