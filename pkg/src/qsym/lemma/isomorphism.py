"""Banica's algebra of two disjoint edges is the hyperoctahedral algebra on two points."""

from __future__ import annotations

from typing import TYPE_CHECKING

from qsym.algebra import DEFAULT_RULE_CAP, substitute
from qsym.graph import table_graph
from qsym.quantum import banica_presentation, h2plus_presentation, qa5, u_in_v, v_in_u

from .report import LemmaReport, prove_parts

if TYPE_CHECKING:
    from qsym.algebra import SymbolOrder

#: the table row whose graph consists of two disjoint edges
DISJOINT_EDGES_ROW = 4
DEFAULT_ISOMORPHISM_BOUND = 8


def verify_h2plus_isomorphism(
    bound: int = DEFAULT_ISOMORPHISM_BOUND,
    order: SymbolOrder = "declaration",
    rule_cap: int = DEFAULT_RULE_CAP,
) -> LemmaReport:
    """
    Check both substitutions between the two presentations and the commutations that follow.

    The ``v``-expressions in ``u`` satisfy every hyperoctahedral relation modulo Banica's presentation, the
    ``u``-expressions in ``v`` satisfy every Banica relation modulo the hyperoctahedral one, and the QA5 commutators of
    the graph vanish modulo Banica's presentation, so Bichon's and Banica's algebra of the graph agree.

    :param bound: largest completion bound
    :param order: symbol order of the monomial order
    :param rule_cap: rule cap of the completion
    :return: the report over the three parts
    """
    graph = table_graph(DISJOINT_EDGES_ROW)
    banica, h2plus = banica_presentation(graph), h2plus_presentation()
    to_u, to_v = v_in_u(), u_in_v()
    parts = [
        (banica, [substitute(relation, to_u) for relation in h2plus.relations]),
        (h2plus, [substitute(relation, to_v) for relation in banica.relations]),
        (banica, list(qa5(graph))),
    ]
    return prove_parts("h2plus-isomorphism", graph, parts, bound, order, rule_cap)


__all__ = (
    "DEFAULT_ISOMORPHISM_BOUND",
    "DISJOINT_EDGES_ROW",
    "verify_h2plus_isomorphism",
)
