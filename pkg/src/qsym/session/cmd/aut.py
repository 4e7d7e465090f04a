"""Print the automorphism group of a graph."""

from __future__ import annotations

from typing import TYPE_CHECKING

from qsym.graph import TooLarge
from qsym.group import automorphisms
from qsym.journal import write_journal
from qsym.plugin import impl
from qsym.report import HandledError

from .common import add_graph_argument, load_state_graph

if TYPE_CHECKING:
    from qsym.config.cli.parser import QsymParser
    from qsym.session.state import State


@impl
def qsym_add_option(parser: QsymParser) -> None:
    our = parser.add_command("aut", [], "print the automorphism group of a graph", aut)
    add_graph_argument(our)


def aut(state: State) -> int:
    graph = load_state_graph(state)
    try:
        group = automorphisms(graph, state.conf.max_vertices, state.conf.jobs)
    except TooLarge as exception:
        raise HandledError(str(exception)) from exception
    print(f"order {group.order}, {group.label}")  # noqa: T201
    for element in group.cycles():
        print(f"  {element}")  # noqa: T201
    state.journal["graph"] = graph.hash
    state.journal["aut"] = group.to_json()
    write_journal(state.conf.out, state.journal)
    return 0
