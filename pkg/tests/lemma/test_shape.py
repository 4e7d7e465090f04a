from __future__ import annotations

import pytest

from qsym.algebra import NCPoly, check_certificate
from qsym.graph import empty_graph, table_graph
from qsym.lemma import derive_matrix_shape


def test_two_point_magic_unitary() -> None:
    shape = derive_matrix_shape(empty_graph(2))
    u11 = NCPoly.word("u11")
    assert shape.entry(1, 1) == u11
    assert shape.entry(1, 2) == 1 - u11
    assert shape.entry(2, 1) == 1 - u11
    assert shape.entry(2, 2) == u11
    assert [identity.symbol for identity in shape.identities] == ["u12", "u21", "u22"]
    assert shape.zeros == []


def test_identities_replay() -> None:
    shape = derive_matrix_shape(empty_graph(2))
    for identity in shape.identities:
        target = NCPoly.word(identity.symbol) - identity.rhs
        assert check_certificate(shape.presentation, target, identity.certificate)
        assert str(identity).startswith(f"{identity.symbol} = ")


def test_render_has_one_line_per_row() -> None:
    lines = derive_matrix_shape(empty_graph(2)).render()
    assert len(lines) == 2
    assert all(line.count(" | ") == 1 for line in lines)
    assert len({len(line) for line in lines}) == 1


@pytest.mark.integration
def test_path_graph_has_vanishing_entries() -> None:
    shape = derive_matrix_shape(table_graph(3))
    assert shape.zeros
    assert all(shape.entry(i, j).is_zero() for i, j in shape.zeros)
