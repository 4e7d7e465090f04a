"""Run every lemma check that applies to a graph."""

from __future__ import annotations

from typing import TYPE_CHECKING

from qsym.check import FAILED, PROVED, CheckReport, Evidence, timed
from qsym.graph import LoopsMode, complement
from qsym.group import automorphisms
from qsym.lemma import (
    derive_matrix_shape,
    prove_banica_complement_invariance,
    prove_bichon_contains_banica,
    prove_eqzero,
    prove_lemma_same_instance,
    prove_loops_invariance,
    prove_qa6_implied,
)
from qsym.plugin import impl

from .common import Task, add_graph_argument, finish, load_state_graph, run_tasks

if TYPE_CHECKING:
    from qsym.algebra import SymbolOrder
    from qsym.config.cli.parser import QsymParser
    from qsym.graph import Graph
    from qsym.session.state import State


@impl
def qsym_add_option(parser: QsymParser) -> None:
    our = parser.add_command("lemmas", [], "check the graph lemmas on one graph", lemmas)
    add_graph_argument(our)


def same_automorphisms(graph: Graph, max_vertices: int) -> CheckReport:
    """:return: whether the graph and its loopless complement have the same automorphisms"""
    with timed() as watch:
        ours = automorphisms(graph, max_vertices)
        theirs = automorphisms(complement(graph, LoopsMode.WITHOUT_LOOPS), max_vertices)
    same = ours.elements == theirs.elements
    detail = "" if same else f"{ours.label} ({ours.order}) against {theirs.label} ({theirs.order})"
    return CheckReport("aut-complement", graph.hash, PROVED if same else FAILED, 0, watch.seconds, (), detail)


def matrix_shape(graph: Graph, bound: int, order: SymbolOrder, rule_cap: int) -> CheckReport:
    """:return: the rewritten entries of the magic unitary, one certificate per rewrite and the rows as notes"""
    with timed() as watch:
        shape = derive_matrix_shape(graph, bound, order, rule_cap)
    evidence = tuple(Evidence(shape.presentation, identity.certificate) for identity in shape.identities)
    notes = tuple(f"row {at}: {line}" for at, line in enumerate(shape.render(), start=1))
    return CheckReport("matrix-shape", graph.hash, PROVED, shape.bound, watch.seconds, evidence, "", notes)


def lemma_tasks(state: State, graph: Graph) -> list[Task]:
    """:return: the lemma checks whose hypotheses the graph meets"""
    conf = state.conf
    engine = conf.lemma_bound, conf.symbol_order, conf.rule_cap
    tasks = []
    if graph.m:
        tasks.append(Task("qa6-implied", prove_qa6_implied, (graph, *engine)))
        if graph.sinks():
            tasks.append(Task("eqzero", prove_eqzero, (graph, *engine)))
    tasks.append(
        Task("complement-invariance", prove_banica_complement_invariance, (graph, LoopsMode.WITH_LOOPS, *engine))
    )
    if not graph.has_loops():
        tasks.extend(
            (
                Task(
                    "complement-invariance",
                    prove_banica_complement_invariance,
                    (graph, LoopsMode.WITHOUT_LOOPS, *engine),
                ),
                Task("loops-invariance", prove_loops_invariance, (graph, *engine)),
                Task("same-instance", prove_lemma_same_instance, (graph, *engine)),
                Task("aut-complement", same_automorphisms, (graph, conf.max_vertices)),
            )
        )
    tasks.extend(
        (
            Task("bichon-contains-banica", prove_bichon_contains_banica, (graph, *engine)),
            Task("matrix-shape", matrix_shape, (graph, *engine)),
        )
    )
    return tasks


def lemmas(state: State) -> int:
    graph = load_state_graph(state)
    state.journal["graph"] = graph.hash
    reports = run_tasks(state, lemma_tasks(state, graph))
    return finish(state, reports)
