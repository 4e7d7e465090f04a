"""Replay of the maximality argument: a quantum group acting by the same formulas satisfies Banica's relations."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, NamedTuple, Sequence

from qsym.algebra import (
    DEFAULT_RULE_CAP,
    Inconclusive,
    NCPoly,
    Presentation,
    TensorPoly,
    complete,
    prove_members,
    tensor_normalize,
)
from qsym.check import INCONCLUSIVE, PROVED, CheckReport, Evidence, timed
from qsym.quantum import (
    banica_presentation_qa14,
    entry,
    graph_cstar_presentation,
    imposed_notes,
    magic_alphabet,
    p,
    qa1,
    qa2,
    qa3,
    qa4,
    s,
)

from .action import action_image, action_legs
from .verify import DEFAULT_THEOREM_BOUND

if TYPE_CHECKING:
    from qsym.algebra import RelationSpec, SymbolOrder
    from qsym.graph import Graph

    from .action import Side

LOGGER = logging.getLogger(__name__)
POSITIVITY = "POS"
INDEPENDENCE = "coefficients are compared on normal words of the graph algebra, taken as linearly independent"


class ActionAxioms(NamedTuple):
    """Relations on free ``u_ij`` forced by one action being a unital *-homomorphism given by the formulas."""

    side: Side
    presentation: Presentation

    @property
    def relations(self) -> Sequence[NCPoly]:
        return self.presentation.relations


def _axioms(graph: Graph, side: Side) -> list[tuple[str, TensorPoly]]:
    legs = action_legs(graph)
    zero = TensorPoly.zero(legs)
    projection = {v: action_image(graph, p(v), side) for v in graph.vertices}
    isometry = {j: action_image(graph, s(j), side) for j, _ in graph.indexed_edges()}
    axioms = [(f"A-projection{i}", projection[i] * projection[i] - projection[i]) for i in graph.vertices]
    axioms.extend(
        (f"A-orthogonal{i},{k}", projection[i] * projection[k])
        for i in graph.vertices
        for k in graph.vertices
        if i != k
    )
    axioms.append(("A-unit", sum(projection.values(), zero) - TensorPoly.one(legs)))
    axioms.extend(
        (f"A-isometry{j}", isometry[j].star() * isometry[j] - projection[r]) for j, (_, r) in graph.indexed_edges()
    )
    for v in graph.sources():
        emitted = sum((isometry[j] * isometry[j].star() for j in graph.emitting(v)), zero)
        axioms.append((f"A-sum{v}", emitted - projection[v]))
    return axioms


def derive_action_constraints(
    graph: Graph,
    side: Side = "left",
    bound: int = DEFAULT_THEOREM_BOUND,
    order: SymbolOrder = "declaration",
    rule_cap: int = DEFAULT_RULE_CAP,
) -> ActionAxioms:
    """
    Extract the relations an acting quantum group must satisfy.

    The images are built from free symbols ``u_ij``. Every axiom is multiplied from the left with ``1 ⊗ p_v`` for each
    vertex, only the graph algebra leg is reduced (in the algebra without the unit relation, so the vertex projections
    stay normal words) and the coefficient of each normal word becomes a relation.

    :param graph: the graph
    :param side: ``left`` for the action, ``right`` for the transposed one
    :param bound: completion bound of the graph algebra
    :param order: symbol order of the monomial order
    :param rule_cap: rule cap of the completion
    :return: the emitted relations as a star-closed presentation over the magic unitary alphabet
    """
    legs = action_legs(graph)
    algebra = graph_cstar_presentation(graph, unit=False)
    system = complete(algebra, max(bound, algebra.max_degree), order, rule_cap)
    relations: list[RelationSpec] = []
    for label, axiom in _axioms(graph, side):
        for v in graph.vertices:
            cut = TensorPoly.on_leg(legs, 1, NCPoly.word(p(v))) * axiom
            reduced, _ = tensor_normalize(cut, (None, system))
            relations.extend((label, coefficient) for coefficient in reduced.split(1).values())
    presentation = Presentation(f"A[{side}][{graph.hash}]", magic_alphabet(graph.n), relations)
    LOGGER.debug("%s: %d constraints from %s action", graph.hash, len(presentation), side)
    return ActionAxioms(side, presentation)


def _proved(  # noqa: PLR0913
    name: str,
    graph: Graph,
    presentation: Presentation,
    targets: Sequence[NCPoly],
    bound: int,
    order: SymbolOrder,
    rule_cap: int,
    notes: tuple[str, ...] = (),
) -> CheckReport:
    with timed() as watch:
        result = prove_members(presentation, targets, bound, order, rule_cap)
    if isinstance(result, Inconclusive):
        detail = f"{result.target} reduces to {result.residue} modulo {presentation.name}"
        return CheckReport(name, graph.hash, INCONCLUSIVE, result.bound, watch.seconds, (), detail, notes)
    evidence = tuple(Evidence(presentation, certificate) for certificate in result.certificates)
    LOGGER.info("%s on %s: %s at bound %d", name, graph.hash, PROVED, result.bound)
    return CheckReport(name, graph.hash, PROVED, result.bound, watch.seconds, evidence, "", notes)


def positivity_groups(graph: Graph, side: Side) -> list[tuple[str, list[NCPoly]]]:
    """
    The elements whose starred squares sum to zero by the isometry constraints.

    For edge ``e_j`` and vertex ``k`` these are ``u_{s(j)i} u_{r(j)k}`` (left) or ``u_{i s(j)} u_{k r(j)}`` (right)
    over the vertices ``i`` with no edge ``(i, k)``.

    :param graph: the graph
    :param side: ``left`` yields the QA3 elements, ``right`` the QA4 ones
    :return: one labelled group per edge and vertex, empty groups left out
    """
    n = graph.n
    groups: list[tuple[str, list[NCPoly]]] = []
    for j, (sj, rj) in graph.indexed_edges():
        for k in graph.vertices:
            missing = [i for i in graph.vertices if not graph.has_edge(i, k)]
            if side == "left":
                elements = [entry(sj, i, n) * entry(rj, k, n) for i in missing]
            else:
                elements = [entry(i, sj, n) * entry(k, rj, n) for i in missing]
            if elements:
                groups.append((f"e{j},k={k}", elements))
    return groups


def apply_positivity(  # noqa: PLR0913
    name: str,
    graph: Graph,
    presentation: Presentation,
    groups: Sequence[tuple[str, Sequence[NCPoly]]],
    bound: int,
    order: SymbolOrder = "declaration",
    rule_cap: int = DEFAULT_RULE_CAP,
) -> tuple[Presentation, tuple[Evidence, ...], tuple[str, ...], CheckReport | None]:
    """
    Use the positivity rule: a vanishing sum of ``w* w`` terms forces every ``w`` to vanish.

    Each sum is first proved zero modulo the presentation; only then its elements are adopted as relations. Every
    adoption is logged as a warning since it is not an algebraic consequence of the relations.

    :return: the extended presentation, the certificates of the sums, one note per adoption and an inconclusive report
        when some sum could not be proved
    """
    alphabet = presentation.alphabet
    sums = [sum((w.star(alphabet) * w for w in elements), NCPoly.zero()) for _, elements in groups]
    with timed() as watch:
        result = prove_members(presentation, sums, bound, order, rule_cap)
    if isinstance(result, Inconclusive):
        detail = f"positivity sum {result.target} reduces to {result.residue}"
        report = CheckReport(name, graph.hash, INCONCLUSIVE, result.bound, watch.seconds, (), detail)
        return presentation, (), (), report
    notes = []
    adopted: list[RelationSpec] = []
    for label, elements in groups:
        note = f"{POSITIVITY} {label}: " + ", ".join(f"{element} = 0" for element in elements)
        LOGGER.warning("%s on %s uses %s", name, graph.hash, note)
        notes.append(note)
        adopted.extend((POSITIVITY, element) for element in elements)
    evidence = tuple(Evidence(presentation, certificate) for certificate in result.certificates)
    return presentation.extended(f"{presentation.name}+{name}", adopted), evidence, tuple(notes), None


def _edge_phase(  # noqa: PLR0913
    name: str,
    graph: Graph,
    presentation: Presentation,
    side: Side,
    targets: Sequence[NCPoly],
    bound: int,
    order: SymbolOrder,
    rule_cap: int,
) -> tuple[CheckReport, Presentation]:
    with timed() as watch:
        groups = positivity_groups(graph, side)
        extended, sums, notes, failed = apply_positivity(name, graph, presentation, groups, bound, order, rule_cap)
        report = failed or _proved(name, graph, extended, targets, bound, order, rule_cap, notes)
    if report.ok:
        report = CheckReport(name, graph.hash, PROVED, report.bound, watch.seconds, sums + report.evidence, "", notes)
    return report, extended


def replay_maximality(  # noqa: PLR0913
    graph: Graph,
    bound: int = DEFAULT_THEOREM_BOUND,
    order: SymbolOrder = "declaration",
    rule_cap: int = DEFAULT_RULE_CAP,
    allow_pos: bool = False,  # noqa: FBT001, FBT002
) -> tuple[CheckReport, ...]:
    """
    Derive every relation of Banica's edge presentation from the constraints of both actions.

    The phases follow the argument: the magic unitary relations come straight from the projection and unit axioms, the
    edge relations QA3 (left action) and QA4 (right action) need the positivity rule on the isometry constraints, and a
    final phase proves every emitted constraint modulo Banica's presentation, so the two ideals agree.

    :param graph: the graph
    :param bound: largest completion bound
    :param order: symbol order of the monomial order
    :param rule_cap: rule cap of the completion
    :param allow_pos: permit the positivity rule, without it the edge phases stay inconclusive
    :return: the reports of the four phases
    """
    left = derive_action_constraints(graph, "left", bound, order, rule_cap)
    right = derive_action_constraints(graph, "right", bound, order, rule_cap)
    base = left.presentation.extended(f"A[{graph.hash}]", zip(right.presentation.labels, right.relations))
    notes = (INDEPENDENCE, *imposed_notes(graph_cstar_presentation(graph, unit=False)))
    magic = _proved("maximality.QA1-QA2", graph, base, [*qa1(graph.n), *qa2(graph.n)], bound, order, rule_cap, notes)
    if allow_pos:
        edge3, current = _edge_phase("maximality.QA3", graph, base, "left", list(qa3(graph)), bound, order, rule_cap)
        edge4, _ = _edge_phase("maximality.QA4", graph, current, "right", list(qa4(graph)), bound, order, rule_cap)
    else:
        detail = "needs the positivity rule, enable it with --allow-pos"
        edge3 = CheckReport("maximality.QA3", graph.hash, INCONCLUSIVE, 0, 0.0, (), detail)
        edge4 = CheckReport("maximality.QA4", graph.hash, INCONCLUSIVE, 0, 0.0, (), detail)
    constraints = [*left.relations, *right.relations]
    banica = banica_presentation_qa14(graph)
    converse = _proved("maximality.converse", graph, banica, constraints, bound, order, rule_cap)
    return magic, edge3, edge4, converse


__all__ = (
    "POSITIVITY",
    "ActionAxioms",
    "apply_positivity",
    "derive_action_constraints",
    "positivity_groups",
    "replay_maximality",
)
