from __future__ import annotations

import logging

import pytest

from qsym.algebra import NCPoly
from qsym.check import INCONCLUSIVE
from qsym.coaction import derive_action_constraints, positivity_groups, replay_maximality
from qsym.coaction.maximality import POSITIVITY
from qsym.graph import build_graph, empty_graph, table_graph


def products(*pairs: tuple[str, str]) -> list[NCPoly]:
    return [NCPoly.word(*pair) for pair in pairs]


def test_positivity_groups() -> None:
    graph = build_graph(2, [(1, 2)])
    assert positivity_groups(graph, "left") == [
        ("e1,k=1", products(("u11", "u21"), ("u12", "u21"))),
        ("e1,k=2", products(("u12", "u22"))),
    ]
    assert positivity_groups(graph, "right") == [
        ("e1,k=1", products(("u11", "u12"), ("u21", "u12"))),
        ("e1,k=2", products(("u21", "u22"))),
    ]
    assert positivity_groups(empty_graph(2), "left") == []


def test_constraints_of_one_vertex() -> None:
    graph = empty_graph(1)
    axioms = derive_action_constraints(graph)
    assert axioms.side == "left"
    assert axioms.presentation.name == f"A[left][{graph.hash}]"
    u11 = NCPoly.word("u11")
    assert u11 * u11 - u11 in axioms.relations
    assert u11 - 1 in axioms.relations


def test_edge_phases_need_positivity() -> None:
    magic, edge3, edge4, converse = replay_maximality(empty_graph(1))
    assert magic.ok
    assert converse.ok
    for report in (edge3, edge4):
        assert report.status == INCONCLUSIVE
        assert report.detail == "needs the positivity rule, enable it with --allow-pos"
    assert [r.name for r in (magic, edge3, edge4)] == ["maximality.QA1-QA2", "maximality.QA3", "maximality.QA4"]


def test_positivity_without_edges_adopts_nothing() -> None:
    reports = replay_maximality(empty_graph(1), allow_pos=True)
    assert all(report.ok for report in reports)
    assert not any(report.notes for report in reports[1:3])


@pytest.mark.integration
def test_single_edge_with_positivity(caplog: pytest.LogCaptureFixture) -> None:
    caplog.set_level(logging.WARNING)
    reports = replay_maximality(build_graph(2, [(1, 2)]), allow_pos=True)
    assert all(report.ok for report in reports), [report.detail for report in reports]
    assert any(note.startswith(POSITIVITY) for note in reports[1].notes)
    assert f"uses {POSITIVITY}" in caplog.text


@pytest.mark.integration
def test_table_row_with_positivity() -> None:
    assert all(report.ok for report in replay_maximality(table_graph(2), allow_pos=True))
