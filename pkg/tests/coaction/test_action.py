from __future__ import annotations

import pytest

from qsym.algebra import NCPoly, TensorPoly
from qsym.coaction import (
    SIDES,
    UnknownGenerator,
    action_image,
    action_legs,
    alpha_image,
    apply_on_leg,
    beta_image,
    comultiply,
    image_of,
)
from qsym.graph import build_graph, undirected
from qsym.quantum import magic_alphabet

EDGE = build_graph(2, [(1, 2)])


def word(*symbols: str) -> NCPoly:
    return NCPoly.word(*symbols)


def test_sides() -> None:
    assert SIDES == ("left", "right")


def test_vertex_images() -> None:
    legs = action_legs(EDGE)
    assert alpha_image(EDGE, "p1") == TensorPoly.of(legs, word("u11"), word("p1")) + TensorPoly.of(
        legs, word("u12"), word("p2")
    )
    assert beta_image(EDGE, "p1") == TensorPoly.of(legs, word("u11"), word("p1")) + TensorPoly.of(
        legs, word("u21"), word("p2")
    )


def test_edge_image_and_adjoint() -> None:
    legs = action_legs(EDGE)
    assert alpha_image(EDGE, "s1") == TensorPoly.of(legs, word("u11", "u22"), word("s1"))
    assert alpha_image(EDGE, "s1*") == TensorPoly.of(legs, word("u22", "u11"), word("s1*"))


def test_right_action_transposes_indices() -> None:
    graph = undirected(2, [(1, 2)])
    legs = action_legs(graph)
    left = alpha_image(graph, "s1")
    right = beta_image(graph, "s1")
    assert left == TensorPoly.of(legs, word("u11", "u22"), word("s1")) + TensorPoly.of(
        legs, word("u12", "u21"), word("s2")
    )
    assert right == TensorPoly.of(legs, word("u11", "u22"), word("s1")) + TensorPoly.of(
        legs, word("u21", "u12"), word("s2")
    )
    assert action_image(graph, "s1", "right") == right


@pytest.mark.parametrize("symbol", ["q", "p3", "s2", "u11"])
def test_unknown_generator(symbol: str) -> None:
    with pytest.raises(UnknownGenerator, match="is not a generator"):
        alpha_image(EDGE, symbol)


def test_image_is_multiplicative() -> None:
    product = image_of(EDGE, word("p1", "s1") - 2)
    legs = action_legs(EDGE)
    assert product == alpha_image(EDGE, "p1") * alpha_image(EDGE, "s1") - TensorPoly.one(legs).scaled(2)
    assert image_of(EDGE, NCPoly.one()) == TensorPoly.one(legs)


def test_comultiply() -> None:
    alphabet = magic_alphabet(2)
    legs = (alphabet, alphabet)
    assert comultiply(word("u12"), 2) == TensorPoly.of(legs, word("u11"), word("u12")) + TensorPoly.of(
        legs, word("u12"), word("u22")
    )
    assert comultiply(NCPoly.one(), 2) == TensorPoly.one(legs)


def test_apply_on_leg() -> None:
    magic, cstar = action_legs(EDGE)
    three = (magic, magic, cstar)
    tensor = TensorPoly.of((magic, cstar), word("u11"), word("p1"))
    mapped = apply_on_leg(tensor, 0, lambda poly: comultiply(poly, 2), three)
    assert mapped == TensorPoly.of(three, word("u11"), word("u11"), word("p1")) + TensorPoly.of(
        three, word("u12"), word("u21"), word("p1")
    )
