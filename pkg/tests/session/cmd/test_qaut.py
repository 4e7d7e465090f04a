from __future__ import annotations

import json
from typing import TYPE_CHECKING, Callable

import pytest

from qsym.graph import empty_graph, table_graph

if TYPE_CHECKING:
    from pathlib import Path

    from qsym.graph import Graph
    from qsym.pytest import QsymRunner


def test_qaut_single_vertex_is_commutative(qsym_run: QsymRunner, graph_file: Callable[[Graph], Path]) -> None:
    graph = empty_graph(1)
    outcome = qsym_run("qaut", str(graph_file(graph)))
    outcome.assert_success()
    lines = outcome.out.splitlines()
    assert lines[0] == f"{graph.hash} banica: Proved-commutative"
    assert lines[1].startswith("  qaut[banica]: PROVED (")


@pytest.mark.parametrize("definition", ["banica", "bichon"])
def test_qaut_block_witness(
    qsym_run: QsymRunner,
    graph_file: Callable[[Graph], Path],
    definition: str,
    tmp_path: Path,
) -> None:
    graph = table_graph(1)
    out = tmp_path / "out"
    outcome = qsym_run("qaut", str(graph_file(graph)), "--definition", definition, "-o", str(out))
    outcome.assert_success()
    assert outcome.out.splitlines()[0] == f"{graph.hash} {definition}: Certified-noncommutative"
    journal = json.loads((out / "qaut.json").read_text())
    assert journal["verdict"] == "Certified-noncommutative"
    assert journal["checks"][0]["status"] == "CERTIFIED"
    assert journal["checks"][0]["certificates"] == []


def test_qaut_bad_rep_file(qsym_run: QsymRunner, graph_file: Callable[[Graph], Path], tmp_path: Path) -> None:
    outcome = qsym_run("qaut", str(graph_file(empty_graph(2))), "--rep", str(tmp_path / "missing.json"))
    outcome.assert_failed(-2)
    assert "cannot read representation file" in outcome.out


def test_qaut_unknown_definition(qsym_run: QsymRunner, graph_file: Callable[[Graph], Path]) -> None:
    outcome = qsym_run("qaut", str(graph_file(empty_graph(2))), "--definition", "other")
    outcome.assert_failed(2)


@pytest.mark.integration
def test_qaut_then_replay(qsym_run: QsymRunner, graph_file: Callable[[Graph], Path], tmp_path: Path) -> None:
    out = tmp_path / "out"
    first = qsym_run("qaut", str(graph_file(empty_graph(2))), "-o", str(out))
    first.assert_success()
    assert "Proved-commutative" in first.out

    second = qsym_run("replay", str(out))
    second.assert_success()
    assert second.out.count(": PROVED") == 6
