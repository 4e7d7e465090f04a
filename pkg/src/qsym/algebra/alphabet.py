"""Generator alphabets with an involution on symbols."""

from __future__ import annotations

from typing import Any, Iterable, Iterator, Mapping, Sequence

from .errors import AlgebraError, UnknownSymbol

Word = tuple[str, ...]


class GenAlphabet:
    """
    An ordered set of generator symbols together with the involution ``*``.

    Every symbol is either self-adjoint or paired with a distinct adjoint symbol. The declaration order is the default
    symbol order of the monomial order.
    """

    def __init__(self, symbols: Iterable[str], adjoints: Mapping[str, str] | None = None) -> None:
        self._symbols: tuple[str, ...] = tuple(symbols)
        if len(set(self._symbols)) != len(self._symbols):
            msg = f"duplicate symbols in {self._symbols!r}"
            raise AlgebraError(msg)
        for symbol in self._symbols:
            if not symbol or any(c.isspace() for c in symbol):
                msg = f"invalid symbol {symbol!r}"
                raise AlgebraError(msg)
        self._star: dict[str, str] = {s: s for s in self._symbols}
        for key, value in (adjoints or {}).items():
            for symbol in (key, value):
                if symbol not in self._star:
                    raise UnknownSymbol(symbol)
            if key == value:
                msg = f"paired adjoint of {key!r} must be a distinct symbol"
                raise AlgebraError(msg)
            self._star[key], self._star[value] = value, key
        for symbol, partner in self._star.items():
            if self._star[partner] != symbol:
                msg = f"involution broken at {symbol!r}"
                raise AlgebraError(msg)
        self._rank = {s: at for at, s in enumerate(self._symbols)}

    @classmethod
    def self_adjoint(cls, symbols: Iterable[str]) -> GenAlphabet:
        return cls(symbols)

    @property
    def symbols(self) -> tuple[str, ...]:
        return self._symbols

    def star(self, symbol: str) -> str:
        try:
            return self._star[symbol]
        except KeyError:
            raise UnknownSymbol(symbol) from None

    def star_word(self, word: Word) -> Word:
        return tuple(self.star(s) for s in reversed(word))

    def is_self_adjoint(self, symbol: str) -> bool:
        return self.star(symbol) == symbol

    def rank(self, symbol: str) -> int:
        try:
            return self._rank[symbol]
        except KeyError:
            raise UnknownSymbol(symbol) from None

    def check_word(self, word: Word) -> None:
        for symbol in word:
            if symbol not in self._rank:
                raise UnknownSymbol(symbol)

    def reordered(self, order: Sequence[str]) -> GenAlphabet:
        """:return: the same alphabet declared in another symbol order"""
        if sorted(order) != sorted(self._symbols):
            msg = f"order {list(order)!r} is not a permutation of the alphabet"
            raise AlgebraError(msg)
        return GenAlphabet(order, self.pairs())

    def pairs(self) -> dict[str, str]:
        return {s: t for s, t in self._star.items() if s != t and self._rank[s] < self._rank[t]}

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._rank

    def __iter__(self) -> Iterator[str]:
        return iter(self._symbols)

    def __len__(self) -> int:
        return len(self._symbols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GenAlphabet):
            return NotImplemented
        return self._symbols == other._symbols and self._star == other._star

    def __hash__(self) -> int:
        return hash((self._symbols, tuple(sorted(self.pairs().items()))))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self._symbols)!r}, pairs={self.pairs()!r})"

    def to_json(self) -> list[dict[str, Any]]:
        return [{"symbol": s, "adjoint": self._star[s]} for s in self._symbols]

    @classmethod
    def from_json(cls, raw: list[dict[str, Any]]) -> GenAlphabet:
        symbols = [str(entry["symbol"]) for entry in raw]
        pairs = {str(e["symbol"]): str(e["adjoint"]) for e in raw if e["adjoint"] != e["symbol"]}
        return cls(symbols, pairs)


__all__ = (
    "GenAlphabet",
    "Word",
)
