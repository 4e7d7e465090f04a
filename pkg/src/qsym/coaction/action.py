"""The left and right action of Banica's quantum automorphism group on the graph *-algebra, and the comultiplication."""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import TYPE_CHECKING, Callable, Literal, Sequence

from cachetools import LRUCache, cached

from qsym.algebra import NCPoly, TensorPoly
from qsym.quantum import cstar_alphabet, entry, magic_alphabet, p, s, s_star, u

from .errors import UnknownGenerator

if TYPE_CHECKING:
    from qsym.algebra import GenAlphabet
    from qsym.algebra.tensor import Key
    from qsym.graph import Graph

Side = Literal["left", "right"]
SIDES: tuple[Side, ...] = ("left", "right")


def action_legs(graph: Graph) -> tuple[GenAlphabet, GenAlphabet]:
    """:return: the magic unitary alphabet and the graph *-algebra alphabet"""
    return magic_alphabet(graph.n), cstar_alphabet(graph)


@cached(LRUCache(maxsize=256), lock=threading.Lock())
def _generators(graph: Graph) -> dict[str, tuple[str, int]]:
    result = {p(v): ("p", v) for v in graph.vertices}
    for j, _ in graph.indexed_edges():
        result[s(j)] = ("s", j)
        result[s_star(j)] = ("s*", j)
    return result


def vertex_coefficient(graph: Graph, i: int, k: int, side: Side = "left") -> NCPoly:
    """:return: the coefficient of ``p_k`` in the image of ``p_i``"""
    return entry(i, k, graph.n) if side == "left" else entry(k, i, graph.n)


def edge_coefficient(graph: Graph, j: int, k: int, side: Side = "left") -> NCPoly:
    """:return: the coefficient of ``s_k`` in the image of ``s_j``"""
    (sj, rj), (sk, rk), n = graph.edge(j), graph.edge(k), graph.n
    if side == "left":
        return entry(sj, sk, n) * entry(rj, rk, n)
    return entry(sk, sj, n) * entry(rk, rj, n)


def action_image(graph: Graph, symbol: str, side: Side = "left") -> TensorPoly:
    """
    Image of a generator of the graph *-algebra.

    The left action sends ``p_i`` to ``sum_k u_ik ⊗ p_k`` and ``s_j`` to ``sum_k u_{s(j)s(k)} u_{r(j)r(k)} ⊗ s_k``;
    the right action transposes the indices of the magic unitary. Adjoints map to the adjoint of the image.

    :param graph: the graph
    :param symbol: ``p_v``, ``s_j`` or ``s_j*``
    :param side: ``left`` or ``right``
    :return: a two-leg tensor, magic unitary leg first
    :raises UnknownGenerator: if the symbol is not a generator
    """
    legs = action_legs(graph)
    kind, index = _generators(graph).get(symbol, ("", 0))
    if kind == "p":
        terms = (
            TensorPoly.of(legs, vertex_coefficient(graph, index, k, side), NCPoly.word(p(k))) for k in graph.vertices
        )
    elif kind == "s":
        terms = (
            TensorPoly.of(legs, edge_coefficient(graph, index, k, side), NCPoly.word(s(k)))
            for k, _ in graph.indexed_edges()
        )
    elif kind == "s*":
        return action_image(graph, s(index), side).star()
    else:
        msg = f"{symbol} is not a generator of the *-algebra of graph {graph.hash}"
        raise UnknownGenerator(msg)
    return sum(terms, TensorPoly.zero(legs))


def alpha_image(graph: Graph, symbol: str) -> TensorPoly:
    """:return: the image of a generator under the left action"""
    return action_image(graph, symbol, "left")


def beta_image(graph: Graph, symbol: str) -> TensorPoly:
    """:return: the image of a generator under the right action, indices of the magic unitary transposed"""
    return action_image(graph, symbol, "right")


def image_of(graph: Graph, poly: NCPoly, side: Side = "left") -> TensorPoly:
    """:return: the image of a polynomial of the graph *-algebra, the action extended multiplicatively"""
    legs = action_legs(graph)
    result = TensorPoly.zero(legs)
    for word, coeff in poly.items():
        term = TensorPoly.one(legs)
        for symbol in word:
            term = term * action_image(graph, symbol, side)
        result = result + term.scaled(coeff)
    return result


def comultiply(poly: NCPoly, n: int) -> TensorPoly:
    """:return: ``Δ(poly)`` for ``Δ(u_ij) = sum_k u_ik ⊗ u_kj`` extended multiplicatively"""
    alphabet = magic_alphabet(n)
    legs = (alphabet, alphabet)
    index = {u(i, j, n): (i, j) for i in range(1, n + 1) for j in range(1, n + 1)}
    result = TensorPoly.zero(legs)
    for word, coeff in poly.items():
        term = TensorPoly.one(legs)
        for symbol in word:
            i, j = index[symbol]
            term = term * sum(
                (TensorPoly.of(legs, entry(i, k, n), entry(k, j, n)) for k in range(1, n + 1)),
                TensorPoly.zero(legs),
            )
        result = result + term.scaled(coeff)
    return result


def apply_on_leg(
    tensor: TensorPoly,
    at: int,
    mapping: Callable[[NCPoly], TensorPoly],
    legs: Sequence[GenAlphabet],
) -> TensorPoly:
    """
    Replace one leg by the legs of its image under a linear map.

    :param tensor: the tensor
    :param at: the leg to map
    :param mapping: linear map from polynomials of that leg to tensors
    :param legs: the legs of the result
    :return: the mapped tensor
    """
    terms: dict[Key, Fraction] = {}
    for key, coeff in tensor.items():
        for inner, value in mapping(NCPoly.word(*key[at])).items():
            mapped = (*key[:at], *inner, *key[at + 1 :])
            terms[mapped] = terms.get(mapped, Fraction(0)) + value * coeff
    return TensorPoly(legs, terms)


__all__ = (
    "SIDES",
    "Side",
    "action_image",
    "action_legs",
    "alpha_image",
    "apply_on_leg",
    "beta_image",
    "comultiply",
    "edge_coefficient",
    "image_of",
    "vertex_coefficient",
)
