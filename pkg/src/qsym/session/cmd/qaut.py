"""Decide whether the quantum automorphism group of a graph is commutative."""

from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING, Callable, Optional

from qsym.check import CERTIFIED, INCONCLUSIVE, PROVED
from qsym.lemma import decide_commutativity
from qsym.plugin import impl
from qsym.quantum import banica_presentation, bichon_presentation
from qsym.witness import builtin_block_witness, load_rep

from .common import add_graph_argument, finish, load_state_graph

if TYPE_CHECKING:
    from qsym.algebra import Presentation
    from qsym.config.cli.parser import QsymParser
    from qsym.graph import Graph
    from qsym.session.state import State
    from qsym.witness import MatrixRep

DEFINITIONS: dict[str, Callable[[Graph], Presentation]] = {
    "banica": banica_presentation,
    "bichon": bichon_presentation,
}
LABELS = {PROVED: "Proved-commutative", CERTIFIED: "Certified-noncommutative", INCONCLUSIVE: "Unknown"}


@impl
def qsym_add_option(parser: QsymParser) -> None:
    our = parser.add_command("qaut", [], "decide commutativity of the quantum automorphism group of a graph", qaut)
    add_graph_argument(our)
    our.add_argument(
        "--definition",
        dest="definition",
        choices=list(DEFINITIONS),
        default="banica",
        help="the quantum automorphism group: Banica's (QA1-QA4) or Bichon's (QA1-QA5)",
    )
    our.add_argument(
        "--rep",
        dest="rep",
        metavar="file",
        type=Path,
        of_type=Optional[Path],  # type: ignore[arg-type]
        default=None,
        help="representation file tried as a noncommutativity witness before the built-in one",
    )


def qaut(state: State) -> int:
    """
    Print the verdict for the chosen definition.

    The candidate witnesses are verified before the completion runs. A verified witness with a nonzero commutator
    excludes a commutativity proof at every bound, so the verdict is the one proof-then-witness would give.
    """
    graph = load_state_graph(state)
    options, conf = state.conf.options, state.conf
    presentation = DEFINITIONS[options.definition](graph)
    witnesses: list[MatrixRep] = [] if options.rep is None else [load_rep(options.rep)]
    block = builtin_block_witness(graph)
    if block is not None:
        witnesses.append(block)
    check = decide_commutativity(
        f"qaut[{options.definition}]",
        presentation,
        witnesses,
        conf.degree_bound,
        conf.symbol_order,
        conf.rule_cap,
        graph.hash,
    )
    print(f"{graph.hash} {options.definition}: {LABELS[check.status]}")  # noqa: T201
    state.journal["graph"] = graph.hash
    state.journal["verdict"] = LABELS[check.status]
    return finish(state, [check])
