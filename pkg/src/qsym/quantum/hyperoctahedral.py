"""The hyperoctahedral quantum group on two points and the dual of Z2 * Z2."""

from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING

from qsym.algebra import GenAlphabet, NCPoly, Presentation

from .magic import u

if TYPE_CHECKING:
    from qsym.algebra import RelationSpec

SPAN = (1, 2)


def v(i: int, j: int) -> str:
    return f"v{i}{j}"


def _v(i: int, j: int) -> NCPoly:
    return NCPoly.word(v(i, j))


def h2plus_presentation() -> Presentation:
    """
    Self-adjoint ``v_ij`` (``i, j = 1, 2``) forming an orthogonal matrix whose rows and columns have pairwise vanishing
    products: ``v_ij v_ik = 0 = v_ji v_ki`` for ``j != k`` and ``sum_k v_ik v_jk = delta_ij = sum_k v_ki v_kj``.
    """
    alphabet = GenAlphabet.self_adjoint(v(i, j) for i in SPAN for j in SPAN)
    relations: list[RelationSpec] = []
    for i in SPAN:
        for j in SPAN:
            for k in SPAN:
                if j != k:
                    relations.append(("H-row", _v(i, j) * _v(i, k)))
                    relations.append(("H-column", _v(j, i) * _v(k, i)))
    for i in SPAN:
        for j in SPAN:
            delta = 1 if i == j else 0
            relations.append(("H-orthogonal", sum((_v(i, k) * _v(j, k) for k in SPAN), NCPoly.zero()) - delta))
            relations.append(("H-orthogonal", sum((_v(k, i) * _v(k, j) for k in SPAN), NCPoly.zero()) - delta))
    return Presentation("H2+", alphabet, relations)


def z2freedual_presentation() -> Presentation:
    """:return: the universal unital algebra of two projections ``p`` and ``q``"""
    p, q = NCPoly.word("p"), NCPoly.word("q")
    return Presentation("C*(Z2*Z2)", GenAlphabet.self_adjoint(("p", "q")), [("P", p * p - p), ("P", q * q - q)])


def z2freedual_magic_view() -> list[list[NCPoly]]:
    """:return: the 4 x 4 magic unitary ``blockdiag([[p, 1-p], [1-p, p]], [[q, 1-q], [1-q, q]])``"""
    zero, one = NCPoly.zero(), NCPoly.one()
    p, q = NCPoly.word("p"), NCPoly.word("q")
    return [
        [p, one - p, zero, zero],
        [one - p, p, zero, zero],
        [zero, zero, q, one - q],
        [zero, zero, one - q, q],
    ]


def view_mapping(matrix: list[list[NCPoly]]) -> dict[str, NCPoly]:
    """:return: the substitution sending ``u_ij`` to ``matrix[i - 1][j - 1]``"""
    n = len(matrix)
    return {u(i, j, n): matrix[i - 1][j - 1] for i in range(1, n + 1) for j in range(1, n + 1)}


def v_in_u() -> dict[str, NCPoly]:
    """:return: ``v_11 = u_11 - u_12``, ``v_12 = u_13 - u_14``, ``v_21 = u_31 - u_32``, ``v_22 = u_33 - u_34``"""
    n = 4

    def diff(i: int, j: int, k: int) -> NCPoly:
        return NCPoly.word(u(i, j, n)) - NCPoly.word(u(i, k, n))

    return {v(1, 1): diff(1, 1, 2), v(1, 2): diff(1, 3, 4), v(2, 1): diff(3, 1, 2), v(2, 2): diff(3, 3, 4)}


def u_in_v() -> dict[str, NCPoly]:
    """:return: the inverse substitution, each ``u_ij`` as ``(v^2 + v) / 2`` or ``(v^2 - v) / 2`` of one ``v``"""
    half = Fraction(1, 2)
    n = 4
    plus_minus = {  # v_ab -> (entries equal to (v^2 + v)/2, entries equal to (v^2 - v)/2)
        (1, 1): (((1, 1), (2, 2)), ((1, 2), (2, 1))),
        (1, 2): (((1, 3), (2, 4)), ((1, 4), (2, 3))),
        (2, 1): (((3, 1), (4, 2)), ((4, 1), (3, 2))),
        (2, 2): (((3, 3), (4, 4)), ((3, 4), (4, 3))),
    }
    mapping: dict[str, NCPoly] = {}
    for (a, b), (plus, minus) in plus_minus.items():
        x = _v(a, b)
        for i, j in plus:
            mapping[u(i, j, n)] = (x * x + x) * half
        for i, j in minus:
            mapping[u(i, j, n)] = (x * x - x) * half
    return mapping


__all__ = (
    "h2plus_presentation",
    "u_in_v",
    "v",
    "v_in_u",
    "view_mapping",
    "z2freedual_magic_view",
    "z2freedual_presentation",
)
