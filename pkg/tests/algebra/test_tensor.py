from __future__ import annotations

from dataclasses import replace

import pytest

from qsym.algebra import (
    AlphabetMismatch,
    GenAlphabet,
    NCPoly,
    Presentation,
    TensorCertificate,
    TensorPoly,
    check_tensor_certificate,
    complete,
    tensor_normalize,
)

LEFT = GenAlphabet.self_adjoint(("a", "b"))
RIGHT = GenAlphabet(("c", "d"), {"c": "d"})
LEGS = (LEFT, RIGHT)


def test_legs_commute() -> None:
    x = TensorPoly.on_leg(LEGS, 0, NCPoly.word("a"))
    y = TensorPoly.on_leg(LEGS, 1, NCPoly.word("c"))
    assert x * y == y * x
    assert x * y == TensorPoly.of(LEGS, NCPoly.word("a"), NCPoly.word("c"))


def test_products_inside_a_leg_do_not_commute() -> None:
    a = TensorPoly.on_leg(LEGS, 0, NCPoly.word("a"))
    b = TensorPoly.on_leg(LEGS, 0, NCPoly.word("b"))
    assert a * b != b * a
    assert (a * b - a * b).is_zero()


def test_factor_count_must_match() -> None:
    with pytest.raises(AlphabetMismatch, match="1 factors for 2 legs"):
        TensorPoly.of(LEGS, NCPoly.word("a"))


def test_legs_must_match() -> None:
    other = TensorPoly.one((LEFT,))
    with pytest.raises(AlphabetMismatch):
        TensorPoly.one(LEGS) + other


def test_star_per_leg() -> None:
    tensor = TensorPoly.of(LEGS, NCPoly.word("a", "b"), NCPoly.word("c"))
    assert tensor.star() == TensorPoly.of(LEGS, NCPoly.word("b", "a"), NCPoly.word("d"))


def test_split_groups_by_leg() -> None:
    tensor = TensorPoly.of(LEGS, NCPoly.word("a") + NCPoly.word("b", coeff=2), NCPoly.word("c"))
    assert tensor.split(1) == {("c",): NCPoly.word("a") + NCPoly.word("b", coeff=2)}
    assert tensor.split(0) == {("a",): NCPoly.word("c"), ("b",): NCPoly.word("c", coeff=2)}


def test_str() -> None:
    tensor = TensorPoly.of(LEGS, NCPoly.word("a", coeff=2), NCPoly.one())
    assert str(tensor) == "2·(a ⊗ 1)"
    assert str(TensorPoly.zero(LEGS)) == "0"


@pytest.fixture
def reduced(commuting_pair: Presentation) -> tuple[TensorPoly, TensorCertificate]:
    legs = (commuting_pair.alphabet, RIGHT)
    tensor = TensorPoly.of(legs, NCPoly.word("b", "a"), NCPoly.word("c")) - TensorPoly.of(
        legs, NCPoly.word("a", "b"), NCPoly.word("c")
    )
    return tensor_normalize(tensor, (complete(commuting_pair, 4), None))


def test_normalize_to_zero(commuting_pair: Presentation, reduced: tuple[TensorPoly, TensorCertificate]) -> None:
    residue, certificate = reduced
    assert residue.is_zero()
    assert certificate.presentations == (commuting_pair.fingerprint, "")
    assert check_tensor_certificate((commuting_pair, None), certificate)


def test_mutated_term_fails(commuting_pair: Presentation, reduced: tuple[TensorPoly, TensorCertificate]) -> None:
    _, certificate = reduced
    first = certificate.terms[0]
    mutated = replace(certificate, terms=(first._replace(coeff=-first.coeff), *certificate.terms[1:]))
    assert not check_tensor_certificate((commuting_pair, None), mutated)


def test_relations_on_free_leg_fail(
    commuting_pair: Presentation,
    reduced: tuple[TensorPoly, TensorCertificate],
) -> None:
    _, certificate = reduced
    moved = replace(certificate, terms=tuple(term._replace(leg=1) for term in certificate.terms))
    assert not check_tensor_certificate((commuting_pair, None), moved)


def test_json(commuting_pair: Presentation, reduced: tuple[TensorPoly, TensorCertificate]) -> None:
    _, certificate = reduced
    loaded = TensorCertificate.from_json((commuting_pair.alphabet, RIGHT), certificate.to_json())
    assert loaded == certificate
    assert check_tensor_certificate((commuting_pair, None), loaded)


def test_normalize_needs_a_system_per_leg(commuting_pair: Presentation) -> None:
    tensor = TensorPoly.one((commuting_pair.alphabet, RIGHT))
    with pytest.raises(AlphabetMismatch, match="1 rewrite systems for 2 legs"):
        tensor_normalize(tensor, (complete(commuting_pair, 4),))


def test_normalize_checks_leg_alphabet(commuting_pair: Presentation) -> None:
    with pytest.raises(AlphabetMismatch, match="does not match its leg"):
        tensor_normalize(TensorPoly.one(LEGS[::-1]), (complete(commuting_pair, 4), None))
