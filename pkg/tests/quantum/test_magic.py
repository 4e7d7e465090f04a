from __future__ import annotations

import pytest

from qsym.algebra import NCPoly, prove_commutativity
from qsym.graph import empty_graph, table_graph, undirected
from qsym.quantum import (
    banica_presentation,
    banica_presentation_qa14,
    bichon_presentation,
    magic_alphabet,
    qa1,
    qa2,
    qa3,
    qa5,
    qa7,
    snplus_presentation,
    u,
)


@pytest.mark.parametrize(("i", "j", "n", "symbol"), [(1, 2, 4, "u12"), (3, 3, 9, "u33"), (1, 10, 10, "u1_10")])
def test_symbol(i: int, j: int, n: int, symbol: str) -> None:
    assert u(i, j, n) == symbol


def test_magic_alphabet_is_self_adjoint_row_by_row() -> None:
    alphabet = magic_alphabet(2)
    assert alphabet.symbols == ("u11", "u12", "u21", "u22")
    assert all(alphabet.is_self_adjoint(symbol) for symbol in alphabet.symbols)


def test_relation_counts() -> None:
    assert len(list(qa1(2))) == 12
    assert len(list(qa2(2))) == 4
    assert len(list(qa7(empty_graph(3)))) == 9


def test_qa7_vanishes_on_edgeless_graph() -> None:
    assert all(poly.is_zero() for poly in qa7(empty_graph(2)))
    assert len(banica_presentation(empty_graph(2))) == len(snplus_presentation(2))


def test_qa3_pairs_both_orders() -> None:
    graph = undirected(2, [(1, 2)])
    polys = list(qa3(graph))
    assert len(polys) == 8
    assert NCPoly.word("u11", "u21") in polys
    assert NCPoly.word("u21", "u11") in polys


def test_names_and_labels() -> None:
    graph = table_graph(2)
    assert banica_presentation(graph).name == f"QBan[{graph.hash}]"
    assert banica_presentation_qa14(graph).name == f"QBan14[{graph.hash}]"
    bichon = bichon_presentation(graph)
    assert bichon.name == f"QBic[{graph.hash}]"
    assert bichon.labelled("QA5")
    assert not banica_presentation_qa14(graph).labelled("QA5")


def test_qa5_commutes_edge_entries() -> None:
    graph = undirected(2, [(1, 2)])
    a, b = NCPoly.word("u12"), NCPoly.word("u21")
    assert a * b - b * a in list(qa5(graph))


def test_snplus_two_is_commutative() -> None:
    presentation = snplus_presentation(2)
    assert len(presentation) == 16
    assert prove_commutativity(presentation, 4)
