"""Name small groups by order, commutativity and the multiset of element orders."""

from __future__ import annotations

from typing import TYPE_CHECKING, Mapping

if TYPE_CHECKING:
    from .perm import PermGroup

UNKNOWN = "unknown"

#: (order, abelian, element orders with multiplicity) -> label
CATALOG: dict[tuple[int, bool, frozenset[tuple[int, int]]], str] = {
    (1, True, frozenset({(1, 1)})): "trivial",
    (2, True, frozenset({(1, 1), (2, 1)})): "Z2",
    (3, True, frozenset({(1, 1), (3, 2)})): "Z3",
    (4, True, frozenset({(1, 1), (2, 1), (4, 2)})): "Z4",
    (4, True, frozenset({(1, 1), (2, 3)})): "Z2×Z2",
    (6, True, frozenset({(1, 1), (2, 1), (3, 2), (6, 2)})): "Z6",
    (6, False, frozenset({(1, 1), (2, 3), (3, 2)})): "S3",
    (8, True, frozenset({(1, 1), (2, 1), (4, 2), (8, 4)})): "Z8",
    (8, True, frozenset({(1, 1), (2, 3), (4, 4)})): "Z4×Z2",
    (8, True, frozenset({(1, 1), (2, 7)})): "Z2^3",
    (8, False, frozenset({(1, 1), (2, 5), (4, 2)})): "D4",
    (8, False, frozenset({(1, 1), (2, 1), (4, 6)})): "Q8",
    (12, False, frozenset({(1, 1), (2, 3), (3, 8)})): "A4",
    (24, False, frozenset({(1, 1), (2, 9), (3, 8), (4, 6)})): "S4",
}


def identify(order: int, abelian: bool, order_counts: Mapping[int, int]) -> str:  # noqa: FBT001
    """
    Look a group up in the catalog.

    :param order: the group order
    :param abelian: whether the group is commutative
    :param order_counts: element order -> number of elements of that order
    :return: the catalog label, ``unknown`` when no entry matches
    """
    key = order, abelian, frozenset((k, v) for k, v in order_counts.items() if v)
    return CATALOG.get(key, UNKNOWN)


def identify_group(group: PermGroup) -> str:
    return identify(group.order, group.is_abelian, group.order_counts)


__all__ = (
    "CATALOG",
    "UNKNOWN",
    "identify",
    "identify_group",
)
