"""Magic unitaries and the quantum automorphism presentations of a graph."""

from __future__ import annotations

from typing import TYPE_CHECKING, Iterator

from qsym.algebra import GenAlphabet, NCPoly, Presentation

if TYPE_CHECKING:
    from qsym.algebra import RelationSpec
    from qsym.graph import Graph


def u(i: int, j: int, n: int) -> str:
    """:return: the symbol of the magic unitary entry ``(i, j)``, 1-based"""
    return f"u{i}{j}" if n < 10 else f"u{i}_{j}"  # noqa: PLR2004


def magic_alphabet(n: int) -> GenAlphabet:
    """:return: the self-adjoint symbols ``u_ij`` declared row by row"""
    return GenAlphabet.self_adjoint(u(i, j, n) for i in range(1, n + 1) for j in range(1, n + 1))


def entry(i: int, j: int, n: int) -> NCPoly:
    return NCPoly.word(u(i, j, n))


def magic_matrix(n: int) -> list[list[NCPoly]]:
    return [[entry(i, j, n) for j in range(1, n + 1)] for i in range(1, n + 1)]


def qa1(n: int) -> Iterator[NCPoly]:
    """Projections and orthogonality within each row and each column."""
    span = range(1, n + 1)
    for i in span:
        for j in span:
            x = entry(i, j, n)
            yield x * x - x
    for i in span:
        for j in span:
            for k in span:
                if j != k:
                    yield entry(i, j, n) * entry(i, k, n)
    for i in span:
        for j in span:
            for k in span:
                if j != k:
                    yield entry(j, i, n) * entry(k, i, n)


def qa2(n: int) -> Iterator[NCPoly]:
    """Every row and every column sums to the unit."""
    span = range(1, n + 1)
    for i in span:
        yield sum((entry(i, k, n) for k in span), NCPoly.zero()) - 1
        yield sum((entry(k, i, n) for k in span), NCPoly.zero()) - 1


def qa3(graph: Graph) -> Iterator[NCPoly]:
    n = graph.n
    for s, r in graph.edges:
        for i in graph.vertices:
            for k in graph.vertices:
                if not graph.has_edge(i, k):
                    yield entry(s, i, n) * entry(r, k, n)
                    yield entry(r, k, n) * entry(s, i, n)


def qa4(graph: Graph) -> Iterator[NCPoly]:
    n = graph.n
    for s, r in graph.edges:
        for i in graph.vertices:
            for k in graph.vertices:
                if not graph.has_edge(i, k):
                    yield entry(i, s, n) * entry(k, r, n)
                    yield entry(k, r, n) * entry(i, s, n)


def qa5(graph: Graph) -> Iterator[NCPoly]:
    n = graph.n
    for sj, rj in graph.edges:
        for sl, rl in graph.edges:
            a, b = entry(sj, sl, n), entry(rj, rl, n)
            yield a * b - b * a


def qa6(graph: Graph) -> Iterator[NCPoly]:
    """For every edge ``e_j`` the two sums over all edges ``e_l``, each minus the unit."""
    n = graph.n
    for sj, rj in graph.edges:
        yield sum((entry(sl, sj, n) * entry(rl, rj, n) for sl, rl in graph.edges), NCPoly.zero()) - 1
        yield sum((entry(sj, sl, n) * entry(rj, rl, n) for sl, rl in graph.edges), NCPoly.zero()) - 1


def qa7(graph: Graph) -> Iterator[NCPoly]:
    """Entries of ``u eps - eps u``."""
    n = graph.n
    for i in graph.vertices:
        for j in graph.vertices:
            left = sum((entry(i, k, n) for k in graph.vertices if graph.has_edge(k, j)), NCPoly.zero())
            right = sum((entry(k, j, n) for k in graph.vertices if graph.has_edge(i, k)), NCPoly.zero())
            yield left - right


def _labelled(label: str, polys: Iterator[NCPoly]) -> list[RelationSpec]:
    return [(label, p) for p in polys]


def snplus_presentation(n: int) -> Presentation:
    """:return: the quantum symmetric group on ``n`` points: a magic unitary and nothing else"""
    return Presentation(f"S{n}+", magic_alphabet(n), [*_labelled("QA1", qa1(n)), *_labelled("QA2", qa2(n))])


def banica_presentation(graph: Graph) -> Presentation:
    """:return: the magic unitary commuting with the adjacency matrix"""
    n = graph.n
    relations = [*_labelled("QA1", qa1(n)), *_labelled("QA2", qa2(n)), *_labelled("QA7", qa7(graph))]
    return Presentation(f"QBan[{graph.hash}]", magic_alphabet(n), relations)


def banica_presentation_qa14(graph: Graph) -> Presentation:
    """:return: the same algebra as :func:`banica_presentation` written with the edge relations QA3 and QA4"""
    n = graph.n
    relations = [
        *_labelled("QA1", qa1(n)),
        *_labelled("QA2", qa2(n)),
        *_labelled("QA3", qa3(graph)),
        *_labelled("QA4", qa4(graph)),
    ]
    return Presentation(f"QBan14[{graph.hash}]", magic_alphabet(n), relations)


def bichon_presentation(graph: Graph) -> Presentation:
    """:return: Banica's algebra in edge form with the edge-wise commutations QA5 added"""
    return banica_presentation_qa14(graph).extended(f"QBic[{graph.hash}]", _labelled("QA5", qa5(graph)))


__all__ = (
    "banica_presentation",
    "banica_presentation_qa14",
    "bichon_presentation",
    "entry",
    "magic_alphabet",
    "magic_matrix",
    "qa1",
    "qa2",
    "qa3",
    "qa4",
    "qa5",
    "qa6",
    "qa7",
    "snplus_presentation",
    "u",
)
