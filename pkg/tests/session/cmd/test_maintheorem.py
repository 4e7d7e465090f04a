from __future__ import annotations

from typing import TYPE_CHECKING, Callable

import pytest

from qsym.graph import empty_graph, table_graph
from qsym.run import setup_state
from qsym.session.cmd.maintheorem import theorem_tasks

if TYPE_CHECKING:
    from pathlib import Path

    from qsym.graph import Graph
    from qsym.pytest import QsymRunner

CHECKS = [
    "hom-relations[left]",
    "hom-relations[right]",
    "coassociativity",
    "span-identities",
    "span-closure",
    "selfadjoint-qa5",
]


@pytest.mark.parametrize(("flags", "extra"), [((), []), (("--allow-pos",), ["maximality"])])
def test_theorem_tasks(graph_file: Callable[[Graph], Path], flags: tuple[str, ...], extra: list[str]) -> None:
    graph = empty_graph(1)
    state = setup_state(["maintheorem", str(graph_file(graph)), *flags])
    assert [task.name for task in theorem_tasks(state, graph)] == [*CHECKS, *extra]


def test_maintheorem_single_vertex(qsym_run: QsymRunner, graph_file: Callable[[Graph], Path]) -> None:
    outcome = qsym_run("main", str(graph_file(empty_graph(1))))
    outcome.assert_success()
    names = [line.split(":")[0].strip() for line in outcome.out.splitlines()[:-1]]
    assert names == CHECKS


def test_maintheorem_single_vertex_with_positivity(qsym_run: QsymRunner, graph_file: Callable[[Graph], Path]) -> None:
    outcome = qsym_run("maintheorem", str(graph_file(empty_graph(1))), "--allow-pos", "-j", "2")
    outcome.assert_success()
    for name in ("maximality.QA1-QA2", "maximality.QA3", "maximality.QA4", "maximality.converse"):
        assert f"  {name}: PROVED" in outcome.out


@pytest.mark.integration
@pytest.mark.parametrize("row", [2, 4])
def test_maintheorem_table_graph(qsym_run: QsymRunner, graph_file: Callable[[Graph], Path], row: int) -> None:
    outcome = qsym_run("maintheorem", str(graph_file(table_graph(row))))
    outcome.assert_success()
    assert "congratulations :)" in outcome.out
