"""Built-in witnesses: two non-commuting rational projections and the block magic unitaries made from them."""

from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING

import sympy as sp

from qsym.algebra import NCPoly
from qsym.graph import adjacency
from qsym.quantum.hyperoctahedral import v, view_mapping, z2freedual_magic_view

from .rep import MatrixRep, to_matrix

if TYPE_CHECKING:
    from qsym.graph import Graph

#: the projection onto the first coordinate axis
P = to_matrix([[1, 0], [0, 0]])
#: the rank one projection onto ``(3/5, 4/5)``
Q = to_matrix([[Fraction(9, 25), Fraction(12, 25)], [Fraction(12, 25), Fraction(16, 25)]])
BLOCK_SIZE = 4


def two_projection_rep() -> MatrixRep:
    """:return: ``p`` and ``q`` as the canonical non-commuting projection pair"""
    return MatrixRep(2, {"p": P, "q": Q})


def _substituted(matrix: list[list[NCPoly]]) -> dict[str, sp.Matrix]:
    pq = two_projection_rep()
    return {symbol: pq.evaluate(poly) for symbol, poly in view_mapping(matrix).items()}


def snplus_block_witness() -> MatrixRep:
    """:return: the 4 x 4 block magic unitary over ``M_2`` built from ``p`` and ``q``"""
    return MatrixRep(2, _substituted(z2freedual_magic_view()))


def block_commutes(graph: Graph) -> bool:
    """:return: whether the block magic unitary in ``p`` and ``q`` commutes with the adjacency matrix, symbolically"""
    if graph.n != BLOCK_SIZE:
        return False
    block, eps = z2freedual_magic_view(), adjacency(graph)
    span = range(BLOCK_SIZE)
    for i in span:
        for j in span:
            left = sum((block[i][k] for k in span if eps[k, j]), NCPoly.zero())
            right = sum((block[k][j] for k in span if eps[i, k]), NCPoly.zero())
            if left != right:
                return False
    return True


def builtin_block_witness(graph: Graph) -> MatrixRep | None:
    """
    :return: the block magic unitary when it is a representation of Banica's algebra of ``graph``, otherwise ``None``
    """
    return snplus_block_witness() if block_commutes(graph) else None


def h2plus_witness() -> MatrixRep:
    """:return: ``v_11 = 2p - 1``, ``v_22 = 2q - 1`` and vanishing off-diagonal entries"""
    one, zero = sp.eye(2), sp.zeros(2, 2)
    return MatrixRep(2, {v(1, 1): 2 * P - one, v(1, 2): zero, v(2, 1): zero, v(2, 2): 2 * Q - one})


__all__ = (
    "BLOCK_SIZE",
    "P",
    "Q",
    "block_commutes",
    "builtin_block_witness",
    "h2plus_witness",
    "snplus_block_witness",
    "two_projection_rep",
)
