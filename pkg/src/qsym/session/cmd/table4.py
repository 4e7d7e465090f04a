"""Reproduce the classification table of the undirected graphs on four vertices."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import TYPE_CHECKING, List, Sequence

from qsym.lemma import COLUMNS, EXPECTED, table_row
from qsym.plugin import impl

from .common import finish

if TYPE_CHECKING:
    from qsym.check import CheckReport
    from qsym.config.cli.parser import QsymParser
    from qsym.lemma import TableRow
    from qsym.session.state import State

ROWS = tuple(sorted(EXPECTED))
CELL = 34


@impl
def qsym_add_option(parser: QsymParser) -> None:
    our = parser.add_command("table4", ["table"], "reproduce the table of the graphs on four vertices", table4)
    our.add_argument(
        "--rows",
        dest="rows",
        metavar="row",
        nargs="+",
        type=int,
        choices=ROWS,
        of_type=List[int],
        default=list(ROWS),
        help="only compute these rows",
    )


def render(rows: Sequence[TableRow]) -> list[str]:
    """
    Lay the computed rows next to the published ones.

    :param rows: the computed rows
    :return: a header, one line per row and the overall verdict; a cell that differs names the published value
    """
    lines = ["row " + "".join(column.ljust(CELL) for column in COLUMNS) + "result"]
    for row in rows:
        expected = row.expected
        published = [f"{expected.aut} ({expected.order})", *expected[2:]]
        cells = [
            computed if computed == wanted else f"{computed} != {wanted}"
            for computed, wanted in zip(row.cells(), published)
        ]
        verdict = "PASS" if row.matches else "FAIL"
        lines.append(f"{row.row:<4}" + "".join(cell.ljust(CELL) for cell in cells) + verdict)
    lines.append(f"overall: {'PASS' if all(row.matches for row in rows) else 'FAIL'}")
    return lines


def table4(state: State) -> int:
    conf = state.conf
    with ThreadPoolExecutor(max_workers=conf.jobs, thread_name_prefix="qsym-table") as executor:
        rows = [
            table_row(row, conf.degree_bound, conf.symbol_order, conf.rule_cap, conf.degree_bound, executor)
            for row in sorted(set(conf.options.rows))
        ]
    for line in render(rows):
        print(line)  # noqa: T201
    state.journal["table"] = [
        {"row": row.row, "graph": row.graph.hash, "cells": row.cells(), "match": row.matches} for row in rows
    ]
    reports: list[CheckReport] = []
    for row in rows:
        reports.extend(row.checks)
        reports.append(row.report())
    return finish(state, reports, timings=False)
