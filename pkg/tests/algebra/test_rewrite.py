from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import pytest

from qsym.algebra import DegreeTooSmall, NCPoly, ProofCertificate, complete

if TYPE_CHECKING:
    from qsym.algebra import Presentation


def test_commuting_pair_sorts_words(commuting_pair: Presentation) -> None:
    system = complete(commuting_pair, 4)
    normal, steps = system.normalize(NCPoly.word("b", "b", "a"))
    assert normal == NCPoly.word("a", "b", "b")
    assert len(steps) == 2
    assert system.saturated
    assert not system.truncated
    assert len(system) == 1
    assert system.is_normal(("a", "b"))
    assert not system.is_normal(("b", "a"))


def test_reverse_order_flips_the_rule(commuting_pair: Presentation) -> None:
    system = complete(commuting_pair, 4, "reverse")
    normal, _ = system.normalize(NCPoly.word("a", "b"))
    assert normal == NCPoly.word("b", "a")


def test_idempotent_collapses_powers(projection: Presentation) -> None:
    system = complete(projection, 4)
    assert system.normalize(NCPoly.word("a", "a", "a"))[0] == NCPoly.word("a")
    assert system.normalize(NCPoly.word("a", "b", "a"))[0] == NCPoly.word("a", "b", "a")
    assert system.saturated


def test_trace_expresses_through_relations(commuting_pair: Presentation) -> None:
    system = complete(commuting_pair, 4)
    poly = NCPoly.word("b", "a", "b") - NCPoly.word("b", "b", "a", coeff=3)
    normal, steps = system.normalize(poly)
    certificate = ProofCertificate.from_expression(poly - normal, system.express(steps))
    assert certificate.expand(commuting_pair) == poly - normal


def test_bound_below_relation_degree(projection: Presentation) -> None:
    with pytest.raises(DegreeTooSmall, match="below the relation degree 2"):
        complete(projection, 1)


def test_rule_cap_truncates(projection: Presentation, caplog: pytest.LogCaptureFixture) -> None:
    caplog.set_level(logging.WARNING)
    b, a = NCPoly.word("b"), NCPoly.word("a")
    presentation = projection.extended("capped", [("C", b * a - a * b)])
    system = complete(presentation, 4, rule_cap=1)
    assert system.truncated
    assert not system.saturated
    assert "rule cap 1" in caplog.text


def test_higher_bound_extends_cached_run(projection: Presentation) -> None:
    low = complete(projection, 2)
    high = complete(projection, 6)
    assert low.bound == 2
    assert high.bound == 6
    assert complete(projection, 4).bound == 4
