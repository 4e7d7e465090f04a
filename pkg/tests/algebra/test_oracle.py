from __future__ import annotations

from qsym.algebra import GenAlphabet, NCPoly, Presentation
from qsym.algebra.oracle import span_oracle


def test_member_within_degree(commuting_pair: Presentation) -> None:
    a, b = NCPoly.word("a"), NCPoly.word("b")
    assert span_oracle(commuting_pair, b * a * a - a * a * b, 3)


def test_member_needs_enough_degree(commuting_pair: Presentation) -> None:
    a, b = NCPoly.word("a"), NCPoly.word("b")
    assert not span_oracle(commuting_pair, b * a * a - a * a * b, 2)


def test_non_member(commuting_pair: Presentation) -> None:
    assert not span_oracle(commuting_pair, NCPoly.word("a", "b"), 3)


def test_free_algebra() -> None:
    free = Presentation("free", GenAlphabet.self_adjoint(("a",)), [])
    assert span_oracle(free, NCPoly.zero(), 2)
    assert not span_oracle(free, NCPoly.word("a"), 2)
