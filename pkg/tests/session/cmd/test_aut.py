from __future__ import annotations

import json
from typing import TYPE_CHECKING, Callable

from qsym.graph import empty_graph, table_graph

if TYPE_CHECKING:
    from pathlib import Path

    from qsym.graph import Graph
    from qsym.pytest import QsymRunner


def test_aut_of_two_disjoint_edges(qsym_run: QsymRunner, graph_file: Callable[[Graph], Path]) -> None:
    outcome = qsym_run("aut", str(graph_file(table_graph(4))))
    outcome.assert_success()
    lines = outcome.out.splitlines()
    assert lines[0] == "order 8, D4"
    assert len(lines) == 1 + 8
    assert lines[1] == "  ()"


def test_aut_journal(qsym_run: QsymRunner, graph_file: Callable[[Graph], Path], tmp_path: Path) -> None:
    graph = table_graph(5)
    out = tmp_path / "out"
    outcome = qsym_run("aut", str(graph_file(graph)), "-o", str(out))
    outcome.assert_success()
    journal = json.loads((out / "aut.json").read_text())
    assert journal["command"] == "aut"
    assert journal["graph"] == graph.hash
    assert journal["aut"]["order"] == 6
    assert journal["aut"]["label"] == "S3"


def test_aut_too_large(qsym_run: QsymRunner, graph_file: Callable[[Graph], Path]) -> None:
    outcome = qsym_run("aut", str(graph_file(empty_graph(3))), "--max-vertices", "2")
    outcome.assert_failed(-2)
    assert "HandledError| 3 vertices exceed the enumeration limit of 2" in outcome.out
