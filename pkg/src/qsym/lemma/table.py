"""Regenerate the classification table of the undirected graphs on four vertices."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, NamedTuple

from qsym.algebra import DEFAULT_RULE_CAP
from qsym.check import FAILED, PROVED, CheckReport
from qsym.graph import LoopsMode, complement, table_graph
from qsym.group import automorphisms
from qsym.quantum import banica_presentation, bichon_presentation
from qsym.witness import builtin_block_witness

from .decide import COMMUTATIVE, NONCOMMUTATIVE, VERDICTS, decide_commutativity
from .isomorphism import DISJOINT_EDGES_ROW, verify_h2plus_isomorphism

if TYPE_CHECKING:
    from concurrent.futures import Executor

    from qsym.algebra import SymbolOrder
    from qsym.graph import Graph
    from qsym.witness import MatrixRep

LOGGER = logging.getLogger(__name__)


class Expected(NamedTuple):
    """A published row: the automorphism group and whether each quantum column is commutative."""

    aut: str
    order: int
    complement_bichon: str
    bichon: str
    banica: str


EXPECTED: dict[int, Expected] = {
    1: Expected("S4", 24, COMMUTATIVE, NONCOMMUTATIVE, NONCOMMUTATIVE),
    2: Expected("Z2×Z2", 4, COMMUTATIVE, NONCOMMUTATIVE, NONCOMMUTATIVE),
    3: Expected("Z2", 2, COMMUTATIVE, COMMUTATIVE, COMMUTATIVE),
    4: Expected("D4", 8, COMMUTATIVE, NONCOMMUTATIVE, NONCOMMUTATIVE),
    5: Expected("S3", 6, COMMUTATIVE, COMMUTATIVE, COMMUTATIVE),
    6: Expected("Z2", 2, COMMUTATIVE, COMMUTATIVE, COMMUTATIVE),
}
COLUMNS = ("Aut", "QBic(c)", "QBic", "QBan")


class TableRow(NamedTuple):
    row: int
    graph: Graph
    aut: str
    order: int
    checks: tuple[CheckReport, ...]  #: QBic of the complement, QBic, QBan, then the isomorphism check of row 4

    @property
    def verdicts(self) -> tuple[str, str, str]:
        complement_bichon, bichon, banica = (VERDICTS[check.status] for check in self.checks[:3])
        return complement_bichon, bichon, banica

    @property
    def expected(self) -> Expected:
        return EXPECTED[self.row]

    @property
    def computed(self) -> Expected:
        return Expected(self.aut, self.order, *self.verdicts)

    @property
    def matches(self) -> bool:
        return self.computed == self.expected and all(check.ok for check in self.checks[3:])

    def report(self) -> CheckReport:
        """:return: the comparison of the row against the published one"""
        status = PROVED if self.matches else FAILED
        seconds = sum(check.seconds for check in self.checks)
        detail = "" if self.matches else f"computed {tuple(self.computed)}, expected {tuple(self.expected)}"
        return CheckReport(f"row{self.row}", self.graph.hash, status, 0, seconds, (), detail)

    def cells(self) -> list[str]:
        head = [f"{self.aut} ({self.order})"]
        return head + list(self.verdicts)


def _witnesses(graph: Graph) -> list[MatrixRep]:
    block = builtin_block_witness(graph)
    return [] if block is None else [block]


def table_row(  # noqa: PLR0913
    row: int,
    bound: int = 8,
    order: SymbolOrder = "declaration",
    rule_cap: int = DEFAULT_RULE_CAP,
    isomorphism_bound: int = 8,
    executor: Executor | None = None,
) -> TableRow:
    """
    Compute one row of the table.

    :param row: table row, 1..6
    :param bound: largest completion bound of the commutativity checks
    :param order: symbol order of the monomial order
    :param rule_cap: rule cap of the completion
    :param isomorphism_bound: completion bound of the hyperoctahedral isomorphism check of row 4
    :param executor: runs the column checks concurrently when given
    :return: the computed row
    """
    graph = table_graph(row)
    other = complement(graph, LoopsMode.WITHOUT_LOOPS)
    group = automorphisms(graph)
    columns = [
        (f"row{row}.QBic(c)", bichon_presentation(other), _witnesses(other), other),
        (f"row{row}.QBic", bichon_presentation(graph), _witnesses(graph), graph),
        (f"row{row}.QBan", banica_presentation(graph), _witnesses(graph), graph),
    ]
    tasks = [(name, p, w, bound, order, rule_cap, g.hash) for name, p, w, g in columns]
    if executor is None:
        checks = [decide_commutativity(*task) for task in tasks]
    else:
        futures = [executor.submit(decide_commutativity, *task) for task in tasks]
        checks = [future.result() for future in futures]
    if row == DISJOINT_EDGES_ROW:
        checks.append(verify_h2plus_isomorphism(isomorphism_bound, order, rule_cap))
    LOGGER.info("row %d: %s", row, ", ".join(VERDICTS.get(check.status, check.status) for check in checks[:3]))
    return TableRow(row, graph, group.label, group.order, tuple(checks))


__all__ = (
    "COLUMNS",
    "EXPECTED",
    "Expected",
    "TableRow",
    "table_row",
)
