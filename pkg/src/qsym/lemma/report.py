"""Lemma reports and the runner proving groups of polynomials against presentations."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Sequence, Tuple

from qsym.algebra import DEFAULT_RULE_CAP, Inconclusive, prove_members
from qsym.check import INCONCLUSIVE, PROVED, CheckReport, Evidence, timed

if TYPE_CHECKING:
    from qsym.algebra import NCPoly, Presentation, SymbolOrder
    from qsym.graph import Graph

LOGGER = logging.getLogger(__name__)
DEFAULT_LEMMA_BOUND = 6

Part = Tuple["Presentation", Sequence["NCPoly"]]


class LemmaReport(CheckReport):
    """A lemma checked on one concrete graph; a proved report carries one certificate per target."""

    @property
    def lemma(self) -> str:
        return self.name


def prove_parts(  # noqa: PLR0913
    lemma: str,
    graph: Graph | None,
    parts: Sequence[Part],
    bound: int,
    order: SymbolOrder = "declaration",
    rule_cap: int = DEFAULT_RULE_CAP,
) -> LemmaReport:
    """
    Prove every target of every part modulo the part's presentation.

    :param lemma: identifier of the lemma
    :param graph: the graph the instance belongs to
    :param parts: pairs of presentation and targets
    :param bound: largest completion bound
    :param order: symbol order of the monomial order
    :param rule_cap: rule cap of the completion
    :return: the report, inconclusive at the first part that could not be settled
    """
    evidence: list[Evidence] = []
    used, detail, status = 0, "", PROVED
    with timed() as watch:
        for presentation, targets in parts:
            result = prove_members(presentation, targets, bound, order, rule_cap)
            used = max(used, result.bound)
            if isinstance(result, Inconclusive):
                status = INCONCLUSIVE
                detail = f"{result.target} reduces to {result.residue} modulo {presentation.name}"
                break
            evidence.extend(Evidence(presentation, certificate) for certificate in result.certificates)
    LOGGER.info("%s on %s: %s at bound %d", lemma, graph.hash if graph else "-", status, used)
    return LemmaReport(lemma, graph.hash if graph else "", status, used, watch.seconds, tuple(evidence), detail)


__all__ = (
    "DEFAULT_LEMMA_BOUND",
    "LemmaReport",
    "Part",
    "prove_parts",
)
