"""Settle commutativity of a presented algebra by proof or by an exact matrix witness."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Sequence

from qsym.algebra import DEFAULT_RULE_CAP, NCPoly, Proved, prove_commutativity
from qsym.check import CERTIFIED, INCONCLUSIVE, PROVED, CheckReport, Evidence, timed
from qsym.witness import WitnessError, certify_noncommutative, noncommuting_pair, verify_representation

if TYPE_CHECKING:
    from qsym.algebra import Presentation, SymbolOrder
    from qsym.witness import MatrixRep

LOGGER = logging.getLogger(__name__)

COMMUTATIVE = "commutative"
NONCOMMUTATIVE = "noncommutative"
UNKNOWN = "unknown"
VERDICTS = {PROVED: COMMUTATIVE, CERTIFIED: NONCOMMUTATIVE, INCONCLUSIVE: UNKNOWN}


def find_witness(presentation: Presentation, candidates: Sequence[MatrixRep]) -> tuple[MatrixRep, str, str] | None:
    """:return: the first candidate representing the presentation with two non-commuting generators"""
    for rep in candidates:
        try:
            valid, failing = verify_representation(presentation, rep)
        except WitnessError as exception:
            LOGGER.warning("representation not usable for %s: %s", presentation.name, exception)
            continue
        if not valid:
            LOGGER.debug("representation violates relation %s of %s", failing, presentation.name)
            continue
        pair = noncommuting_pair(presentation, rep)
        if pair is not None and certify_noncommutative(presentation, rep, NCPoly.word(pair[0]), NCPoly.word(pair[1])):
            return rep, pair[0], pair[1]
    return None


def decide_commutativity(  # noqa: PLR0913
    name: str,
    presentation: Presentation,
    witnesses: Sequence[MatrixRep],
    bound: int,
    order: SymbolOrder = "declaration",
    rule_cap: int = DEFAULT_RULE_CAP,
    graph: str = "",
) -> CheckReport:
    """
    Decide whether a presented algebra is commutative.

    A verified witness with a nonzero commutator rules out any commutativity proof, so witnesses are tried before the
    completion runs; without one the commutators are proved with deepening bounds.

    :param name: name of the check
    :param presentation: the presentation
    :param witnesses: candidate representations, in order of preference
    :param bound: largest completion bound
    :param order: symbol order of the monomial order
    :param rule_cap: rule cap of the completion
    :param graph: hash of the graph the presentation belongs to
    :return: ``PROVED`` (commutative), ``CERTIFIED`` (noncommutative) or ``INCONCLUSIVE``
    """
    with timed() as watch:
        found = find_witness(presentation, witnesses)
        result = None if found else prove_commutativity(presentation, bound, order, rule_cap)
    if found:
        rep, a, b = found
        detail = f"{a} and {b} do not commute in a verified representation of dimension {rep.dim}"
        return CheckReport(name, graph, CERTIFIED, 0, watch.seconds, (), detail)
    if isinstance(result, Proved):
        evidence = tuple(Evidence(presentation, certificate) for certificate in result.certificates)
        return CheckReport(name, graph, PROVED, result.bound, watch.seconds, evidence)
    assert result is not None  # noqa: S101
    detail = f"commutator {result.target} reduces to {result.residue}"
    return CheckReport(name, graph, INCONCLUSIVE, result.bound, watch.seconds, (), detail)


__all__ = (
    "COMMUTATIVE",
    "NONCOMMUTATIVE",
    "UNKNOWN",
    "VERDICTS",
    "decide_commutativity",
    "find_witness",
)
