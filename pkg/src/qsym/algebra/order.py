"""Degree-lexicographic monomial order over a fixed symbol order."""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import TYPE_CHECKING, Literal, Sequence, Tuple

from cachetools import LRUCache

from .errors import AlgebraError

if TYPE_CHECKING:
    from .alphabet import GenAlphabet, Word
    from .poly import NCPoly

SymbolOrder = Literal["declaration", "reverse"]
Key = Tuple[int, Tuple[int, ...]]
KEY_CACHE_SIZE = 1 << 16


class DegLex:
    """Compare words first by length, then lexicographically by symbol rank."""

    def __init__(self, symbols: Sequence[str], cache_size: int = KEY_CACHE_SIZE) -> None:
        self._symbols = tuple(symbols)
        self._rank = {s: at for at, s in enumerate(self._symbols)}
        self._keys: LRUCache[Word, Key] = LRUCache(maxsize=cache_size)
        self._heap_keys: LRUCache[Word, Key] = LRUCache(maxsize=cache_size)
        self._lock = threading.Lock()

    @classmethod
    def of(cls, alphabet: GenAlphabet, order: SymbolOrder = "declaration") -> DegLex:
        if order == "declaration":
            return cls(alphabet.symbols)
        if order == "reverse":
            return cls(tuple(reversed(alphabet.symbols)))
        msg = f"unknown symbol order {order!r}"
        raise AlgebraError(msg)

    @property
    def symbols(self) -> tuple[str, ...]:
        return self._symbols

    def key(self, word: Word) -> Key:
        """:return: a sort key, larger words get larger keys"""
        with self._lock:
            result = self._keys.get(word)
            if result is None:
                result = self._keys[word] = (len(word), tuple(self._rank[s] for s in word))
        return result

    def heap_key(self, word: Word) -> Key:
        """:return: a sort key, larger words get smaller keys (for min-heaps)"""
        with self._lock:
            result = self._heap_keys.get(word)
            if result is None:
                result = self._heap_keys[word] = (-len(word), tuple(-self._rank[s] for s in word))
        return result

    def leading(self, poly: NCPoly) -> tuple[Word, Fraction]:
        word = max(poly.words(), key=self.key)
        return word, poly.coefficient(word)

    def descending(self, poly: NCPoly) -> list[Word]:
        return sorted(poly.words(), key=self.key, reverse=True)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DegLex) and self._symbols == other._symbols

    def __hash__(self) -> int:
        return hash(self._symbols)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({' < '.join(self._symbols)})"


__all__ = (
    "KEY_CACHE_SIZE",
    "DegLex",
    "SymbolOrder",
)
