"""Check that Banica's quantum automorphism group acts on the graph *-algebra."""

from __future__ import annotations

from typing import TYPE_CHECKING

from qsym.coaction import (
    replay_maximality,
    verify_coassociativity,
    verify_hom_relations,
    verify_selfadjoint_quotient_qa5,
    verify_span_closure,
    verify_span_identities,
)
from qsym.plugin import impl

from .common import Task, add_graph_argument, finish, load_state_graph, run_tasks

if TYPE_CHECKING:
    from qsym.config.cli.parser import QsymParser
    from qsym.graph import Graph
    from qsym.session.state import State


@impl
def qsym_add_option(parser: QsymParser) -> None:
    our = parser.add_command(
        "maintheorem",
        ["main"],
        "check the action of the quantum automorphism group on the graph *-algebra",
        maintheorem,
    )
    add_graph_argument(our)


def theorem_tasks(state: State, graph: Graph) -> list[Task]:
    """:return: the checks of the action, the maximality replay only when the positivity rule is allowed"""
    conf = state.conf
    engine = conf.degree_bound, conf.symbol_order, conf.rule_cap
    tasks = [
        Task("hom-relations[left]", verify_hom_relations, (graph, "left", *engine)),
        Task("hom-relations[right]", verify_hom_relations, (graph, "right", *engine)),
        Task("coassociativity", verify_coassociativity, (graph, *engine)),
        Task("span-identities", verify_span_identities, (graph, *engine)),
        Task("span-closure", verify_span_closure, (graph, *engine)),
        Task("selfadjoint-qa5", verify_selfadjoint_quotient_qa5, (graph, *engine)),
    ]
    if conf.allow_pos:
        tasks.append(Task("maximality", replay_maximality, (graph, *engine, True)))
    return tasks


def maintheorem(state: State) -> int:
    graph = load_state_graph(state)
    state.journal["graph"] = graph.hash
    reports = run_tasks(state, theorem_tasks(state, graph))
    return finish(state, reports)
