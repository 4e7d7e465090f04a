"""The graph *-algebra: vertex projections and edge partial isometries."""

from __future__ import annotations

from typing import TYPE_CHECKING

from qsym.algebra import GenAlphabet, NCPoly, Presentation

if TYPE_CHECKING:
    from qsym.algebra import RelationSpec
    from qsym.graph import Graph

IMPOSED = {"UNIT": "sum_v p_v = 1", "RANGES": "s_e* s_f = 0 for distinct edges with a common source"}


def p(vertex: int) -> str:
    return f"p{vertex}"


def s(index: int) -> str:
    return f"s{index}"


def s_star(index: int) -> str:
    return f"s{index}*"


def cstar_alphabet(graph: Graph) -> GenAlphabet:
    """:return: ``p_1..p_n`` (self-adjoint), then ``s_j`` and its adjoint ``s_j*`` for every edge"""
    symbols = [p(v) for v in graph.vertices]
    pairs: dict[str, str] = {}
    for j, _ in graph.indexed_edges():
        symbols.extend((s(j), s_star(j)))
        pairs[s(j)] = s_star(j)
    return GenAlphabet(symbols, pairs)


def graph_cstar_presentation(
    graph: Graph,
    companions: bool = True,  # noqa: FBT001, FBT002
    unit: bool = True,  # noqa: FBT001, FBT002
) -> Presentation:
    """
    Present the graph *-algebra.

    The defining relations are orthogonal projections ``p_v``, ``s_e* s_e = p_r(e)`` and the Cuntz-Krieger sums
    ``sum_{s(e)=v} s_e s_e* = p_v`` for every emitting vertex. The companions are the facts every graph C*-algebra
    satisfies that an algebraic quotient cannot see: the unit ``sum_v p_v = 1``, ``p_s(e) s_e = s_e = s_e p_r(e)`` and
    orthogonal ranges ``s_e* s_f = 0`` for distinct edges with a common source. The unit and the orthogonal ranges are
    imposed as relations, not derived from the others; :func:`imposed_notes` names them on every report that uses them.

    :param graph: the graph
    :param companions: include the companion relations
    :param unit: include the unit among the companions
    :return: the presentation
    """
    alphabet = cstar_alphabet(graph)
    proj = {v: NCPoly.word(p(v)) for v in graph.vertices}
    iso = {j: NCPoly.word(s(j)) for j, _ in graph.indexed_edges()}
    adj = {j: NCPoly.word(s_star(j)) for j, _ in graph.indexed_edges()}
    relations: list[RelationSpec] = []
    for v in graph.vertices:
        relations.append(("P", proj[v] * proj[v] - proj[v]))
    for v in graph.vertices:
        for w in graph.vertices:
            if v != w:
                relations.append(("P-orthogonal", proj[v] * proj[w]))
    for j, (_, target) in graph.indexed_edges():
        relations.append(("CK1", adj[j] * iso[j] - proj[target]))
    for v in graph.vertices:
        emitted = graph.emitting(v)
        if emitted:
            relations.append(("CK2", sum((iso[j] * adj[j] for j in emitted), NCPoly.zero()) - proj[v]))
    if companions:
        if unit:
            relations.append(("UNIT", sum(proj.values(), NCPoly.zero()) - 1))
        for j, (source, target) in graph.indexed_edges():
            relations.append(("SR", proj[source] * iso[j] - iso[j]))
            relations.append(("SR", iso[j] * proj[target] - iso[j]))
        for v in graph.vertices:
            for e in graph.emitting(v):
                for f in graph.emitting(v):
                    if e != f:
                        relations.append(("RANGES", adj[e] * iso[f]))
    suffix = "" if companions and unit else ("-nounit" if companions else "-bare")
    name = f"C*{suffix}[{graph.hash}]"
    return Presentation(name, alphabet, relations)


def imposed_notes(presentation: Presentation) -> tuple[str, ...]:
    """:return: one note per companion family the presentation imposes as relations instead of deriving it"""
    return tuple(
        f"{presentation.name} imposes {label} ({meaning}) as a relation, it is not derived from P, CK1 and CK2"
        for label, meaning in IMPOSED.items()
        if presentation.labelled(label)
    )


__all__ = (
    "IMPOSED",
    "cstar_alphabet",
    "graph_cstar_presentation",
    "imposed_notes",
    "p",
    "s",
    "s_star",
)
