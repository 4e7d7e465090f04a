from __future__ import annotations

import pytest

from qsym.algebra import GenAlphabet, NCPoly, Presentation, UnknownSymbol, monic_key


def test_star_closure_appends_missing_adjoints() -> None:
    alphabet = GenAlphabet(("s", "t"), {"s": "t"})
    s = NCPoly.word("s")
    presentation = Presentation("iso", alphabet, [("idem", s * s - s)])
    assert len(presentation) == 2
    assert presentation.labels == ("idem", "idem*")
    assert presentation.relation(1) == NCPoly.word("t", "t") - NCPoly.word("t")
    assert presentation.star_of(0) == (1, 1)
    assert presentation.star_of(1) == (0, 1)
    assert presentation.submitted == 1


def test_self_adjoint_up_to_sign(commuting_pair: Presentation) -> None:
    assert len(commuting_pair) == 1
    assert commuting_pair.star_of(0) == (0, -1)


def test_drops_zero_and_scalar_duplicates() -> None:
    a, b = NCPoly.word("a"), NCPoly.word("b")
    alphabet = GenAlphabet.self_adjoint(("a", "b"))
    presentation = Presentation("dup", alphabet, [a - b, 2 * a - 2 * b, a - a])
    assert len(presentation) == 1
    assert presentation.submitted == 3
    assert monic_key(a - b) == monic_key(3 * b - 3 * a)


def test_unknown_symbol() -> None:
    with pytest.raises(UnknownSymbol):
        Presentation("bad", GenAlphabet.self_adjoint(("a",)), [NCPoly.word("c")])


def test_max_degree(projection: Presentation) -> None:
    assert projection.max_degree == 2
    assert Presentation("free", GenAlphabet.self_adjoint(("a",)), []).max_degree == 0


def test_extended_keeps_relations(projection: Presentation) -> None:
    b = NCPoly.word("b")
    extended = projection.extended("more", [("Q", b * b - b)])
    assert extended.name == "more"
    assert extended.relations[: len(projection)] == projection.relations
    assert extended.labelled("Q") == [b * b - b]
    assert extended.fingerprint != projection.fingerprint


def test_fingerprint_ignores_name(projection: Presentation) -> None:
    renamed = Presentation("other", projection.alphabet, zip(projection.labels, projection.relations))
    assert renamed.fingerprint == projection.fingerprint
    assert len(projection.fingerprint) == 16


def test_json_keeps_fingerprint() -> None:
    alphabet = GenAlphabet(("p", "s", "s*"), {"s": "s*"})
    p, s, t = NCPoly.word("p"), NCPoly.word("s"), NCPoly.word("s*")
    presentation = Presentation("cstar", alphabet, [("P", p * p - p), ("CK1", t * s - p), ("SR", p * s - s)])
    loaded = Presentation.from_json(presentation.to_json())
    assert loaded.fingerprint == presentation.fingerprint
    assert loaded.labels == presentation.labels
    assert loaded.name == "cstar"


def test_reordered(projection: Presentation) -> None:
    reordered = projection.reordered(("b", "a"))
    assert reordered.alphabet.symbols == ("b", "a")
    assert reordered.relations == projection.relations
