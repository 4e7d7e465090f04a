from __future__ import annotations

import time
from typing import TYPE_CHECKING

import pytest

from qsym.check import CERTIFIED, FAILED, INCONCLUSIVE, PROVED, CheckReport
from qsym.graph import empty_graph
from qsym.run import setup_state
from qsym.session.cmd.common import EXIT_FAILED, EXIT_OK, EXIT_UNKNOWN, Task, exit_code, report, run_tasks

if TYPE_CHECKING:
    from pathlib import Path
    from typing import Callable

    from qsym.graph import Graph


def check(name: str, status: str, detail: str = "", notes: tuple[str, ...] = ()) -> CheckReport:
    return CheckReport(name, "g", status, 4, 0.5, (), detail, notes)


@pytest.mark.parametrize(
    ("statuses", "code"),
    [
        ((), EXIT_OK),
        ((PROVED, CERTIFIED), EXIT_OK),
        ((PROVED, INCONCLUSIVE), EXIT_UNKNOWN),
        ((INCONCLUSIVE, FAILED), EXIT_FAILED),
    ],
)
def test_exit_code(statuses: tuple[str, ...], code: int) -> None:
    assert exit_code([check(str(at), status) for at, status in enumerate(statuses)]) == code


def test_report_lines(capsys: pytest.CaptureFixture[str]) -> None:
    reports = [check("a", PROVED, "hidden"), check("b", INCONCLUSIVE, "x reduces to y", ("looked at x",))]
    code = report(time.monotonic(), reports, False, 2, timings=False)  # noqa: FBT003
    assert code == EXIT_UNKNOWN
    expected = ["  a: PROVED", "  b: INCONCLUSIVE - x reduces to y", "  evaluation failed :("]
    assert capsys.readouterr().out.splitlines() == expected


def test_report_notes_and_timings(capsys: pytest.CaptureFixture[str]) -> None:
    code = report(time.monotonic(), [check("a", PROVED, notes=("flagged",))], False, 3)  # noqa: FBT003
    assert code == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "  a: PROVED (0.50 seconds)"
    assert lines[1] == "    note: flagged"
    assert lines[2].startswith("  congratulations :) (")


def test_report_quiet(capsys: pytest.CaptureFixture[str]) -> None:
    assert report(time.monotonic(), [check("a", FAILED)], True, 0) == EXIT_FAILED  # noqa: FBT003
    assert capsys.readouterr().out == ""


@pytest.mark.parametrize("jobs", ["1", "3"])
def test_run_tasks_keeps_order(jobs: str, graph_file: Callable[[Graph], Path]) -> None:
    state = setup_state(["aut", str(graph_file(empty_graph(1))), "-j", jobs])
    tasks = [
        Task("one", lambda: check("one", PROVED), ()),
        Task("pair", lambda a, b: [check(a, PROVED), check(b, FAILED)], ("two", "three")),
        Task("four", check, ("four", INCONCLUSIVE)),
    ]
    reports = run_tasks(state, tasks)
    assert [r.name for r in reports] == ["one", "two", "three", "four"]
