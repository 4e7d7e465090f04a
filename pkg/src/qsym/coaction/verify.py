"""Mechanical checks that the formulas define a coaction: homomorphism relations, coassociativity and the span."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Sequence

from qsym.algebra import (
    DEFAULT_RULE_CAP,
    Inconclusive,
    NCPoly,
    Presentation,
    TensorPoly,
    bound_schedule,
    check_tensor_certificate,
    complete,
    monic_key,
    prove_members,
    tensor_normalize,
)
from qsym.check import FAILED, INCONCLUSIVE, PROVED, CheckReport, Evidence, TensorEvidence, combine, timed
from qsym.quantum import (
    banica_presentation_qa14,
    bichon_presentation,
    cstar_alphabet,
    entry,
    graph_cstar_presentation,
    imposed_notes,
    magic_alphabet,
    p,
    qa5,
    s,
    s_star,
)

from .action import action_image, action_legs, alpha_image, apply_on_leg, comultiply, image_of

if TYPE_CHECKING:
    from qsym.algebra import GenAlphabet, SymbolOrder
    from qsym.graph import Graph

    from .action import Side

LOGGER = logging.getLogger(__name__)
DEFAULT_THEOREM_BOUND = 8


def free_presentation(alphabet: GenAlphabet) -> Presentation:
    """:return: the free algebra on ``alphabet``, the replay presentation of an unreduced leg"""
    return Presentation("free", alphabet, [])


def prove_tensors(  # noqa: PLR0913
    name: str,
    graph: Graph,
    presentations: Sequence[Presentation | None],
    targets: Sequence[TensorPoly],
    bound: int,
    order: SymbolOrder = "declaration",
    rule_cap: int = DEFAULT_RULE_CAP,
) -> CheckReport:
    """
    Prove that every target tensor vanishes in the tensor product of the presented algebras.

    The legs are reduced from the last to the first, so coefficients in the quantum leg are collected per normal word of
    the graph algebra before they are reduced. Bounds deepen as in :func:`qsym.algebra.prove_members`, driven by the
    presentation of the largest degree.

    :param name: name of the check
    :param graph: the graph
    :param presentations: per-leg presentation, ``None`` leaves a leg free
    :param targets: tensors to prove zero
    :param bound: largest completion bound
    :param order: symbol order of the monomial order
    :param rule_cap: rule cap of the completion
    :return: ``PROVED`` with a replayed certificate per target, else ``INCONCLUSIVE`` naming the first open target
    """
    if not targets:
        return CheckReport(name, graph.hash, PROVED, 0, 0.0, (), "", ("vacuous: nothing to prove",))
    legs = targets[0].legs
    replay = tuple(free_presentation(leg) if pres is None else pres for pres, leg in zip(presentations, legs))
    bounded = [pres for pres in presentations if pres is not None]
    widest = max(bounded, key=lambda pres: pres.max_degree) if bounded else None
    sequence = tuple(reversed(range(len(legs))))
    found: dict[int, TensorEvidence] = {}
    used, failure = bound, ""
    with timed() as watch:
        for level in bound_schedule(widest, bound) if widest is not None else [bound]:
            systems = [
                None if pres is None else complete(pres, max(level, pres.max_degree), order, rule_cap)
                for pres in presentations
            ]
            failure = ""
            for at, target in enumerate(targets):
                if at in found:
                    continue
                residue, certificate = tensor_normalize(target, systems, sequence)
                if residue.is_zero() and check_tensor_certificate(replay, certificate):
                    found[at] = TensorEvidence(replay, certificate)
                elif not failure:
                    failure = f"{target} reduces to {residue}"
            used = level
            if not failure:
                break
    status = INCONCLUSIVE if failure else PROVED
    evidence = () if failure else tuple(found[at] for at in range(len(targets)))
    LOGGER.info("%s on %s: %s at bound %d", name, graph.hash, status, used)
    return CheckReport(name, graph.hash, status, used, watch.seconds, evidence, failure, _imposed(bounded))


def _imposed(presentations: Sequence[Presentation]) -> tuple[str, ...]:
    return tuple(dict.fromkeys(note for pres in presentations for note in imposed_notes(pres)))


def verify_hom_relations(
    graph: Graph,
    side: Side = "left",
    bound: int = DEFAULT_THEOREM_BOUND,
    order: SymbolOrder = "declaration",
    rule_cap: int = DEFAULT_RULE_CAP,
) -> CheckReport:
    """
    Check that the images of the generators satisfy the relations of the graph *-algebra.

    The images of the vertex projections are mutually orthogonal self-adjoint projections, every edge image ``s'`` is a
    partial isometry with ``s'* s' = p'`` of its range and the images of the edges leaving an emitting vertex sum up to
    the image of the vertex projection.

    :param graph: the graph
    :param side: ``left`` for the action, ``right`` for the transposed one
    :param bound: largest completion bound
    :param order: symbol order of the monomial order
    :param rule_cap: rule cap of the completion
    :return: the report over all relations
    """
    legs = action_legs(graph)
    zero = TensorPoly.zero(legs)
    projection = {v: action_image(graph, p(v), side) for v in graph.vertices}
    isometry = {j: action_image(graph, s(j), side) for j, _ in graph.indexed_edges()}
    targets = [
        projection[i] * projection[k] - (projection[i] if i == k else zero)
        for i in graph.vertices
        for k in graph.vertices
    ]
    targets.extend(projection[i].star() - projection[i] for i in graph.vertices)
    targets.extend(isometry[j].star() * isometry[j] - projection[r] for j, (_, r) in graph.indexed_edges())
    for v in graph.sources():
        emitted = sum((isometry[j] * isometry[j].star() for j in graph.emitting(v)), zero)
        targets.append(emitted - projection[v])
    presentations = (banica_presentation_qa14(graph), graph_cstar_presentation(graph))
    return prove_tensors(f"hom-relations[{side}]", graph, presentations, targets, bound, order, rule_cap)


def _generators(graph: Graph) -> list[str]:
    symbols = [p(v) for v in graph.vertices]
    for j, _ in graph.indexed_edges():
        symbols.extend((s(j), s_star(j)))
    return symbols


def verify_coassociativity(
    graph: Graph,
    bound: int = DEFAULT_THEOREM_BOUND,
    order: SymbolOrder = "declaration",
    rule_cap: int = DEFAULT_RULE_CAP,
) -> CheckReport:
    """
    Check ``(Δ ⊗ id) α = (id ⊗ α) α`` on every generator and ``α(1) = 1 ⊗ 1``.

    :param graph: the graph
    :param bound: largest completion bound
    :param order: symbol order of the monomial order
    :param rule_cap: rule cap of the completion
    :return: the merged report of both checks
    """
    quantum, algebra = banica_presentation_qa14(graph), graph_cstar_presentation(graph)
    magic, cstar = action_legs(graph)
    legs = (magic, magic, cstar)
    targets = []
    for symbol in _generators(graph):
        image = alpha_image(graph, symbol)
        first = apply_on_leg(image, 0, lambda poly: comultiply(poly, graph.n), legs)
        second = apply_on_leg(image, 1, lambda poly: image_of(graph, poly), legs)
        targets.append(first - second)
    triple = prove_tensors("coassociativity", graph, (quantum, quantum, algebra), targets, bound, order, rule_cap)
    unit = sum((NCPoly.word(p(v)) for v in graph.vertices), NCPoly.zero())
    unital = image_of(graph, unit) - TensorPoly.one((magic, cstar))
    single = prove_tensors("unital", graph, (quantum, algebra), [unital], bound, order, rule_cap)
    return combine("coassociativity", [triple, single])


def verify_span_identities(
    graph: Graph,
    bound: int = DEFAULT_THEOREM_BOUND,
    order: SymbolOrder = "declaration",
    rule_cap: int = DEFAULT_RULE_CAP,
) -> CheckReport:
    """
    Express ``1 ⊗ p_l``, ``1 ⊗ s_l`` and ``1 ⊗ s_l*`` through images of the action and check the expressions.

    The vertex identity sums ``α(p_i)(u_il ⊗ 1)`` over all vertices; the edge identity sums
    ``α(s_j)(u_{r(j)r(l)} u_{s(j)s(l)} ⊗ 1)`` over the edges leaving the emitting vertices and the adjoint identity
    sums ``α(s_j*)(u_{s(j)s(l)} u_{r(j)r(l)} ⊗ 1)`` over the edges entering the receiving vertices.

    :param graph: the graph
    :param bound: largest completion bound
    :param order: symbol order of the monomial order
    :param rule_cap: rule cap of the completion
    :return: the report over all identities
    """
    legs, n = action_legs(graph), graph.n
    zero = TensorPoly.zero(legs)

    def left(poly: NCPoly) -> TensorPoly:
        return TensorPoly.on_leg(legs, 0, poly)

    def right(symbol: str) -> TensorPoly:
        return TensorPoly.on_leg(legs, 1, NCPoly.word(symbol))

    targets = [
        sum((alpha_image(graph, p(i)) * left(entry(i, k, n)) for i in graph.vertices), zero) - right(p(k))
        for k in graph.vertices
    ]
    for k, (sk, rk) in graph.indexed_edges():
        total = zero
        for v in graph.sources():
            for j in graph.emitting(v):
                sj, rj = graph.edge(j)
                total = total + alpha_image(graph, s(j)) * left(entry(rj, rk, n) * entry(sj, sk, n))
        targets.append(total - right(s(k)))
    for k, (sk, rk) in graph.indexed_edges():
        total = zero
        for v in graph.ranges():
            for j in graph.receiving(v):
                sj, rj = graph.edge(j)
                total = total + alpha_image(graph, s_star(j)) * left(entry(sj, sk, n) * entry(rj, rk, n))
        targets.append(total - right(s_star(k)))
    presentations = (banica_presentation_qa14(graph), graph_cstar_presentation(graph))
    return prove_tensors("span-identities", graph, presentations, targets, bound, order, rule_cap)


def verify_span_closure(
    graph: Graph,
    bound: int = DEFAULT_THEOREM_BOUND,
    order: SymbolOrder = "declaration",
    rule_cap: int = DEFAULT_RULE_CAP,
) -> CheckReport:
    """
    Recompute the product rule of the span on ``x = p_{s(e_1)}`` and ``y = s_1``.

    First the exchange of ``u_{ia} ⊗ 1`` with ``1 ⊗ y`` is checked to hold identically in the tensor model, then the
    rearranged product ``sum_{i,j} α(p_i s_j)(w_j u_{ia} ⊗ 1)`` with ``w_j = u_{r(j)r(1)} u_{s(j)s(1)}`` is proved to
    equal ``1 ⊗ xy``.

    :param graph: the graph
    :param bound: largest completion bound
    :param order: symbol order of the monomial order
    :param rule_cap: rule cap of the completion
    :return: the report, vacuously proved for a graph without edges
    """
    if not graph.m:
        return prove_tensors("span-closure", graph, (), [], bound, order, rule_cap)
    legs, n = action_legs(graph), graph.n
    zero = TensorPoly.zero(legs)
    a, first_range = graph.edge(1)
    y = TensorPoly.on_leg(legs, 1, NCPoly.word(s(1)))
    targets = []
    for i in graph.vertices:
        exchange = TensorPoly.on_leg(legs, 0, entry(i, a, n))
        targets.append(exchange * y - y * exchange)
    product = zero
    for i in graph.vertices:
        for j, (sj, rj) in graph.indexed_edges():
            w = entry(rj, first_range, n) * entry(sj, a, n) * entry(i, a, n)
            product = product + image_of(graph, NCPoly.word(p(i), s(j))) * TensorPoly.on_leg(legs, 0, w)
    targets.append(product - TensorPoly.on_leg(legs, 1, NCPoly.word(p(a), s(1))))
    presentations = (banica_presentation_qa14(graph), graph_cstar_presentation(graph))
    return prove_tensors("span-closure", graph, presentations, targets, bound, order, rule_cap)


def selfadjoint_quotient(graph: Graph) -> Presentation:
    """:return: the free algebra on the graph generators modulo ``s_j = s_j*``"""
    relations = [("SA", NCPoly.word(s(j)) - NCPoly.word(s_star(j))) for j, _ in graph.indexed_edges()]
    return Presentation(f"SA[{graph.hash}]", cstar_alphabet(graph), relations)


def verify_selfadjoint_quotient_qa5(
    graph: Graph,
    bound: int = DEFAULT_THEOREM_BOUND,
    order: SymbolOrder = "declaration",
    rule_cap: int = DEFAULT_RULE_CAP,
) -> CheckReport:
    """
    Recover the edge commutations QA5 from the action on self-adjoint edges.

    Equating ``α(s_j)`` with ``α(s_j*)`` in the quotient by ``s_j = s_j*`` and comparing coefficients of the edge
    words yields commutators of the magic unitary; the emitted set must equal the QA5 relations up to scalars and
    every emitted relation must vanish modulo Bichon's presentation.

    :param graph: the graph
    :param bound: largest completion bound
    :param order: symbol order of the monomial order
    :param rule_cap: rule cap of the completion
    :return: the report, vacuously proved for a graph without edges
    """
    name = "selfadjoint-qa5"
    if not graph.m:
        return CheckReport(name, graph.hash, PROVED, 0, 0.0, (), "", ("vacuous: the graph has no edges",))
    quotient = selfadjoint_quotient(graph)
    replay = (free_presentation(magic_alphabet(graph.n)), quotient)
    bichon = bichon_presentation(graph)
    with timed() as watch:
        system = complete(quotient, max(2, quotient.max_degree), order, rule_cap)
        emitted: list[NCPoly] = []
        evidence: list[Evidence | TensorEvidence] = []
        for j, _ in graph.indexed_edges():
            difference = alpha_image(graph, s(j)) - alpha_image(graph, s_star(j))
            residue, certificate = tensor_normalize(difference, (None, system))
            evidence.append(TensorEvidence(replay, certificate))
            emitted.extend(coefficient for coefficient in residue.split(1).values() if coefficient)
        expected = {monic_key(relation) for relation in qa5(graph) if relation}
        found = {monic_key(relation) for relation in emitted}
        result = prove_members(bichon, emitted, bound, order, rule_cap) if found == expected else None
    if result is None:
        detail = f"{len(found - expected)} emitted relations outside QA5, {len(expected - found)} QA5 relations missing"
        return CheckReport(name, graph.hash, FAILED, 0, watch.seconds, (), detail)
    if isinstance(result, Inconclusive):
        detail = f"{result.target} reduces to {result.residue} modulo {bichon.name}"
        return CheckReport(name, graph.hash, INCONCLUSIVE, result.bound, watch.seconds, (), detail)
    evidence.extend(Evidence(bichon, certificate) for certificate in result.certificates)
    notes = ("edge words s_j are taken as linearly independent in the self-adjoint quotient",)
    return CheckReport(name, graph.hash, PROVED, result.bound, watch.seconds, tuple(evidence), "", notes)


__all__ = (
    "DEFAULT_THEOREM_BOUND",
    "free_presentation",
    "prove_tensors",
    "selfadjoint_quotient",
    "verify_coassociativity",
    "verify_hom_relations",
    "verify_selfadjoint_quotient_qa5",
    "verify_span_closure",
    "verify_span_identities",
)
