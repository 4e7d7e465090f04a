"""Functionality shared by the commands: running checks, printing the outcome and persisting the journal."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import TYPE_CHECKING, Any, Callable, NamedTuple, Sequence, Union

from colorama import Fore

from qsym.check import CERTIFIED, FAILED, PROVED, CheckReport
from qsym.graph import load_graph
from qsym.journal import write_journal
from qsym.plugin.manager import MANAGER

if TYPE_CHECKING:
    from argparse import ArgumentParser

    from qsym.graph import Graph
    from qsym.session.state import State

LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_UNKNOWN = 3

Outcome = Union[CheckReport, Sequence[CheckReport]]


class Task(NamedTuple):
    """A check to run: ``call(*args)`` returns one report or several."""

    name: str
    call: Callable[..., Outcome]
    args: tuple[Any, ...]


def add_graph_argument(parser: ArgumentParser) -> None:
    parser.add_argument("graph", metavar="graph", type=Path, help="graph JSON file")


def load_state_graph(state: State) -> Graph:
    """:return: the graph named on the command line"""
    return load_graph(state.conf.graphs[0])


def run_tasks(state: State, tasks: Sequence[Task]) -> list[CheckReport]:
    """
    Run independent checks on a thread pool sized by ``--jobs``.

    :param state: the run state
    :param tasks: the checks
    :return: the reports in the order the tasks were given, a task with several reports contributes them in order
    """
    handler = state.log_handler

    def _run(task: Task) -> Outcome:
        with handler.with_context(task.name):
            LOGGER.info("start")
            return task.call(*task.args)

    workers = max(min(state.conf.jobs, len(tasks)), 1)
    if workers == 1:
        outcomes = [_run(task) for task in tasks]
    else:
        with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="qsym-check") as executor:
            futures = [executor.submit(_run, task) for task in tasks]
            outcomes = [future.result() for future in futures]
    reports: list[CheckReport] = []
    for outcome in outcomes:
        if isinstance(outcome, CheckReport):
            reports.append(outcome)
        else:
            reports.extend(outcome)
    return reports


def _get_outcome_message(check: CheckReport) -> tuple[str, str]:
    if check.status in {PROVED, CERTIFIED}:
        return check.status, Fore.GREEN
    if check.status == FAILED:
        return check.status, Fore.RED
    return check.status, Fore.YELLOW


def exit_code(reports: Sequence[CheckReport]) -> int:
    """:return: ``0`` when every check succeeded, ``1`` when one failed, else ``3`` for an unsettled check"""
    if any(check.status == FAILED for check in reports):
        return EXIT_FAILED
    if all(check.ok for check in reports):
        return EXIT_OK
    return EXIT_UNKNOWN


def report(  # noqa: PLR0913
    start: float,
    reports: Sequence[CheckReport],
    is_colored: bool,  # noqa: FBT001
    verbosity: int,
    timings: bool = True,  # noqa: FBT001, FBT002
) -> int:
    """
    Print one line per check and the overall verdict.

    :param start: monotonic time the command started
    :param reports: the finished checks
    :param is_colored: color the lines
    :param verbosity: nothing is printed at zero
    :param timings: show durations, off for output that must not change between runs
    :return: the exit code
    """

    def _print(color_: str, message: str) -> None:
        if verbosity:
            print(f"{color_ if is_colored else ''}{message}{Fore.RESET if is_colored else ''}")  # noqa: T201

    for check in reports:
        msg, color = _get_outcome_message(check)
        where = f" ({check.seconds:.2f} seconds)" if timings else ""
        detail = f" - {check.detail}" if check.detail and not check.ok else ""
        _print(color, f"  {check.name}: {msg}{where}{detail}")
        if verbosity >= 3:  # noqa: PLR2004
            for note in check.notes:
                _print("", f"    note: {note}")

    duration = f" ({time.monotonic() - start:.2f} seconds)" if timings else ""
    code = exit_code(reports)
    if code == EXIT_OK:
        _print(Fore.GREEN, f"  congratulations :){duration}")
    else:
        _print(Fore.RED, f"  evaluation failed :({duration}")
    return code


def finish(state: State, reports: Sequence[CheckReport], timings: bool = True) -> int:  # noqa: FBT001, FBT002
    """
    Hand the reports to the plugins, persist the journal and print the outcome.

    :param state: the run state
    :param reports: the finished checks
    :param timings: show durations
    :return: the exit code
    """
    for check in reports:
        state.journal.add_report(check)
        MANAGER.qsym_on_report(check)
    write_journal(state.conf.out, state.journal)
    options = state.conf.options
    return report(options.start, reports, options.is_colored, options.verbosity, timings)


__all__ = (
    "EXIT_FAILED",
    "EXIT_OK",
    "EXIT_UNKNOWN",
    "Task",
    "add_graph_argument",
    "exit_code",
    "finish",
    "load_state_graph",
    "report",
    "run_tasks",
)
