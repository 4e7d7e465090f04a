"""Instance checks of the lemmas on quantum automorphisms of graphs."""

from __future__ import annotations

from typing import TYPE_CHECKING

from qsym.algebra import DEFAULT_RULE_CAP, NCPoly, commutator, commutators
from qsym.graph import LoopsMode, LoopsPresent, add_loops, complement, complete_graph, loops_mode
from qsym.quantum import banica_presentation, banica_presentation_qa14, bichon_presentation, entry, qa5, qa6, qa7

from .errors import NoEdges, NoSourcelessVertex
from .report import DEFAULT_LEMMA_BOUND, LemmaReport, prove_parts

if TYPE_CHECKING:
    from qsym.algebra import SymbolOrder
    from qsym.graph import Graph


def _need_edges(graph: Graph) -> None:
    if not graph.m:
        msg = f"graph {graph.hash} has no edges"
        raise NoEdges(msg)


def _need_loopless(graph: Graph) -> None:
    if graph.has_loops():
        msg = f"graph {graph.hash} has loops"
        raise LoopsPresent(msg)


def prove_qa6_implied(
    graph: Graph,
    bound: int = DEFAULT_LEMMA_BOUND,
    order: SymbolOrder = "declaration",
    rule_cap: int = DEFAULT_RULE_CAP,
) -> LemmaReport:
    """
    For every edge both QA6 sums minus the unit vanish modulo QA1-QA4.

    :raises NoEdges: for a graph without edges
    """
    _need_edges(graph)
    parts = [(banica_presentation_qa14(graph), list(qa6(graph)))]
    return prove_parts("qa6-implied", graph, parts, bound, order, rule_cap)


def sourceless_zeros(graph: Graph) -> list[NCPoly]:
    """:return: ``u_{q s(e)}`` and ``u_{s(e) q}`` for every vertex ``q`` emitting nothing and every edge ``e``"""
    n, targets = graph.n, []
    for q in graph.sinks():
        for source, _ in graph.edges:
            targets.extend((entry(q, source, n), entry(source, q, n)))
    return targets


def prove_eqzero(
    graph: Graph,
    bound: int = DEFAULT_LEMMA_BOUND,
    order: SymbolOrder = "declaration",
    rule_cap: int = DEFAULT_RULE_CAP,
) -> LemmaReport:
    """
    Entries pairing a vertex that emits nothing with the source of an edge vanish modulo QA1-QA4.

    :raises NoSourcelessVertex: if every vertex emits an edge
    :raises NoEdges: for a graph without edges
    """
    _need_edges(graph)
    if not graph.sinks():
        msg = f"every vertex of graph {graph.hash} emits an edge"
        raise NoSourcelessVertex(msg)
    parts = [(banica_presentation_qa14(graph), sourceless_zeros(graph))]
    return prove_parts("eqzero", graph, parts, bound, order, rule_cap)


def prove_banica_complement_invariance(  # noqa: PLR0913
    graph: Graph,
    mode: LoopsMode | str | None = None,
    bound: int = DEFAULT_LEMMA_BOUND,
    order: SymbolOrder = "declaration",
    rule_cap: int = DEFAULT_RULE_CAP,
) -> LemmaReport:
    """
    Banica's algebra of a graph and of its complement agree: each QA7 set vanishes modulo the other presentation.

    A graph with loops is complemented with loops unless the loopless category is asked for.

    :raises LoopsPresent: in the loopless mode on a graph with loops
    """
    category = loops_mode(graph, mode)
    other = complement(graph, category)
    parts = [
        (banica_presentation(graph), list(qa7(other))),
        (banica_presentation(other), list(qa7(graph))),
    ]
    return prove_parts(f"complement-invariance[{category.value}]", graph, parts, bound, order, rule_cap)


def loop_commutators(graph: Graph) -> list[NCPoly]:
    """:return: the QA5 commutators of ``graph`` for the pairs of edges where at least one is a loop"""
    n, result = graph.n, []
    for sj, rj in graph.edges:
        for sl, rl in graph.edges:
            if sj == rj or sl == rl:
                result.append(commutator(entry(sj, sl, n), entry(rj, rl, n)))
    return result


def prove_loops_invariance(
    graph: Graph,
    bound: int = DEFAULT_LEMMA_BOUND,
    order: SymbolOrder = "declaration",
    rule_cap: int = DEFAULT_RULE_CAP,
) -> LemmaReport:
    """
    Adding a loop at every vertex changes neither Banica's nor Bichon's algebra.

    The QA7 relations of both graphs vanish modulo the other presentation, and the QA5 relations involving a loop
    vanish modulo Bichon's presentation of the loopless graph.

    :raises LoopsPresent: if the graph already has loops
    """
    _need_loopless(graph)
    looped = add_loops(graph)
    parts = [
        (banica_presentation(graph), list(qa7(looped))),
        (banica_presentation(looped), list(qa7(graph))),
        (bichon_presentation(graph), loop_commutators(looped)),
    ]
    return prove_parts("loops-invariance", graph, parts, bound, order, rule_cap)


def prove_lemma_same_instance(
    graph: Graph,
    bound: int = DEFAULT_LEMMA_BOUND,
    order: SymbolOrder = "declaration",
    rule_cap: int = DEFAULT_RULE_CAP,
) -> LemmaReport:
    """
    All generators commute once the QA5 relations of the loopless complement join Bichon's presentation.

    :raises LoopsPresent: if the graph has loops
    """
    _need_loopless(graph)
    other = complement(graph, LoopsMode.WITHOUT_LOOPS)
    name = f"QBic[{graph.hash}]+QA5[{other.hash}]"
    joined = bichon_presentation(graph).extended(name, [("QA5c", p) for p in qa5(other)])
    return prove_parts("same-instance", graph, [(joined, commutators(joined))], bound, order, rule_cap)


def prove_bichon_contains_banica(
    graph: Graph,
    bound: int = DEFAULT_LEMMA_BOUND,
    order: SymbolOrder = "declaration",
    rule_cap: int = DEFAULT_RULE_CAP,
) -> LemmaReport:
    """Every QA7 relation vanishes modulo QA1-QA5."""
    parts = [(bichon_presentation(graph), list(qa7(graph)))]
    return prove_parts("bichon-contains-banica", graph, parts, bound, order, rule_cap)


def prove_complete_graph_commutative(
    n: int,
    bound: int = DEFAULT_LEMMA_BOUND,
    order: SymbolOrder = "declaration",
    rule_cap: int = DEFAULT_RULE_CAP,
) -> LemmaReport:
    """Bichon's algebra of the complete loopless graph on ``n`` vertices is commutative."""
    graph = complete_graph(n)
    presentation = bichon_presentation(graph)
    parts = [(presentation, commutators(presentation))]
    return prove_parts("complete-commutative", graph, parts, bound, order, rule_cap)


__all__ = (
    "loop_commutators",
    "prove_banica_complement_invariance",
    "prove_bichon_contains_banica",
    "prove_complete_graph_commutative",
    "prove_eqzero",
    "prove_lemma_same_instance",
    "prove_loops_invariance",
    "prove_qa6_implied",
    "sourceless_zeros",
)
