"""Presented *-algebras: an alphabet plus a star-closed list of relations."""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import TYPE_CHECKING, Any, Iterable, Sequence, Tuple, Union

from .alphabet import GenAlphabet
from .poly import NCPoly

if TYPE_CHECKING:
    from .alphabet import Word

RelationSpec = Union[NCPoly, Tuple[str, NCPoly]]


def monic_key(poly: NCPoly) -> frozenset[tuple[Word, Fraction]]:
    """:return: the terms of ``poly`` divided by the coefficient of its largest word, equal for scalar multiples"""
    top = max(poly.words(), key=lambda w: (len(w), w))
    lead = poly.coefficient(top)
    return frozenset((w, c / lead) for w, c in poly.items())


class Presentation:
    """
    A presented *-algebra: each relation polynomial is zero in the quotient.

    The relation list is star-closed: for every relation ``r`` the starred polynomial ``r*`` is a scalar multiple of a
    listed relation, appended at construction when missing. Zero relations and scalar duplicates are dropped.
    """

    def __init__(self, name: str, alphabet: GenAlphabet, relations: Iterable[RelationSpec]) -> None:
        self.name = name
        self.alphabet = alphabet
        self._relations: list[NCPoly] = []
        self._labels: list[str] = []
        self._index: dict[frozenset[tuple[Word, Fraction]], int] = {}
        self.submitted = 0
        for spec in relations:
            label, poly = spec if isinstance(spec, tuple) else ("", spec)
            self.submitted += 1
            self._add(label, poly)
        at = 0
        while at < len(self._relations):  # star closure, appended relations are themselves checked
            self._add(self._labels[at], self._relations[at].star(alphabet), starred=True)
            at += 1
        self._star_of = tuple(self._find_star(i) for i in range(len(self._relations)))
        self._fingerprint: str | None = None

    def _add(self, label: str, poly: NCPoly, starred: bool = False) -> None:  # noqa: FBT001, FBT002
        for word in poly.words():
            self.alphabet.check_word(word)
        if poly.is_zero():
            return
        key = monic_key(poly)
        if key in self._index:
            return
        self._index[key] = len(self._relations)
        self._relations.append(poly)
        self._labels.append(f"{label}*" if starred and label and not label.endswith("*") else label)

    def _find_star(self, at: int) -> tuple[int, Fraction]:
        starred = self._relations[at].star(self.alphabet)
        target = self._index[monic_key(starred)]
        word = next(iter(starred.words()))
        return target, starred.coefficient(word) / self._relations[target].coefficient(word)

    @property
    def relations(self) -> Sequence[NCPoly]:
        return tuple(self._relations)

    @property
    def labels(self) -> Sequence[str]:
        return tuple(self._labels)

    def relation(self, at: int) -> NCPoly:
        return self._relations[at]

    def star_of(self, at: int) -> tuple[int, Fraction]:
        """:return: index ``j`` and factor ``c`` with ``relation(at)* = c * relation(j)``"""
        return self._star_of[at]

    def labelled(self, label: str) -> list[NCPoly]:
        return [r for r, lbl in zip(self._relations, self._labels) if lbl.rstrip("*") == label]

    @property
    def max_degree(self) -> int:
        return max((r.degree for r in self._relations), default=0)

    def __len__(self) -> int:
        return len(self._relations)

    def extended(self, name: str, relations: Iterable[RelationSpec]) -> Presentation:
        """:return: a presentation over the same alphabet with further relations appended"""
        return Presentation(name, self.alphabet, [*zip(self._labels, self._relations), *relations])

    def reordered(self, symbols: Sequence[str]) -> Presentation:
        return Presentation(self.name, self.alphabet.reordered(symbols), zip(self._labels, self._relations))

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "generators": self.alphabet.to_json(),
            "relations": [{"label": lbl, "poly": r.to_json()} for lbl, r in zip(self._labels, self._relations)],
        }

    @classmethod
    def from_json(cls, raw: dict[str, Any]) -> Presentation:
        alphabet = GenAlphabet.from_json(raw["generators"])
        relations = [(str(e.get("label", "")), NCPoly.from_json(e["poly"])) for e in raw["relations"]]
        return cls(str(raw.get("name", "")), alphabet, relations)

    @property
    def fingerprint(self) -> str:
        if self._fingerprint is None:
            body = json.dumps({k: v for k, v in self.to_json().items() if k != "name"}, sort_keys=True)
            self._fingerprint = hashlib.sha256(body.encode("utf-8")).hexdigest()[:16]
        return self._fingerprint

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r}, generators={len(self.alphabet)}, relations={len(self)})"


__all__ = (
    "Presentation",
    "RelationSpec",
    "monic_key",
)
