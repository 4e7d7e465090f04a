"""Noncommutative polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING, Any, Iterable, Iterator, Mapping, Union

if TYPE_CHECKING:
    from .alphabet import GenAlphabet, Word

Scalar = Union[int, Fraction]


def parse_coeff(raw: str | int) -> Fraction:
    """:return: the exact coefficient written as ``p/q`` (or an integer)"""
    return Fraction(str(raw).strip())


def format_coeff(value: Fraction) -> str:
    return str(value)


def word_key(word: Word) -> str:
    return " ".join(word)


def parse_word(raw: str) -> Word:
    return tuple(raw.split())


class NCPoly:
    """
    An element of the free algebra: a finite map from words to nonzero rational coefficients.

    Values are immutable; arithmetic returns new instances. The empty word is the unit.
    """

    __slots__ = ("_hash", "_terms")

    def __init__(self, terms: Mapping[Word, Scalar] | Iterable[tuple[Word, Scalar]] | None = None) -> None:
        collected: dict[Word, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for word, coeff in items:
            key = tuple(word)
            value = collected.get(key, Fraction(0)) + Fraction(coeff)
            if value:
                collected[key] = value
            else:
                collected.pop(key, None)
        self._terms = collected
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[Word, Fraction]) -> NCPoly:
        """Wrap an already clean term dictionary without copying."""
        result = cls.__new__(cls)
        result._terms = terms
        result._hash = None
        return result

    @classmethod
    def zero(cls) -> NCPoly:
        return cls._raw({})

    @classmethod
    def one(cls) -> NCPoly:
        return cls.constant(1)

    @classmethod
    def constant(cls, value: Scalar) -> NCPoly:
        return cls({(): value})

    @classmethod
    def word(cls, *symbols: str, coeff: Scalar = 1) -> NCPoly:
        return cls({tuple(symbols): coeff})

    @property
    def terms(self) -> Mapping[Word, Fraction]:
        return self._terms

    def items(self) -> Iterator[tuple[Word, Fraction]]:
        return iter(self._terms.items())

    def words(self) -> Iterator[Word]:
        return iter(self._terms)

    def coefficient(self, word: Word) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    @property
    def degree(self) -> int:
        return max((len(w) for w in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def symbols(self) -> set[str]:
        return {s for w in self._terms for s in w}

    def star(self, alphabet: GenAlphabet) -> NCPoly:
        # coefficients are rational so conjugation is the identity
        return NCPoly._raw({alphabet.star_word(w): c for w, c in self._terms.items()})

    def scaled(self, factor: Scalar) -> NCPoly:
        factor = Fraction(factor)
        if not factor:
            return NCPoly.zero()
        return NCPoly._raw({w: c * factor for w, c in self._terms.items()})

    def sandwich(self, left: Word, right: Word, coeff: Scalar = 1) -> NCPoly:
        """:return: ``coeff * left * self * right``"""
        factor = Fraction(coeff)
        if not factor:
            return NCPoly.zero()
        return NCPoly._raw({left + w + right: c * factor for w, c in self._terms.items()})

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: object) -> NCPoly:
        other_poly = _coerce(other)
        if other_poly is None:
            return NotImplemented
        result = dict(self._terms)
        for word, coeff in other_poly._terms.items():
            value = result.get(word, 0) + coeff
            if value:
                result[word] = value
            else:
                result.pop(word, None)
        return NCPoly._raw(result)

    __radd__ = __add__

    def __neg__(self) -> NCPoly:
        return NCPoly._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: object) -> NCPoly:
        other_poly = _coerce(other)
        if other_poly is None:
            return NotImplemented
        return self + (-other_poly)

    def __rsub__(self, other: object) -> NCPoly:
        other_poly = _coerce(other)
        if other_poly is None:
            return NotImplemented
        return other_poly - self

    def __mul__(self, other: object) -> NCPoly:
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        result: dict[Word, Fraction] = {}
        for left, a in self._terms.items():
            for right, b in other._terms.items():
                word = left + right
                value = result.get(word, 0) + a * b
                if value:
                    result[word] = value
                else:
                    result.pop(word, None)
        return NCPoly._raw(result)

    def __rmul__(self, other: object) -> NCPoly:
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> NCPoly:
        result = NCPoly.one()
        for _ in range(exponent):
            result *= self
        return result

    def __eq__(self, other: object) -> bool:
        other_poly = _coerce(other)
        if other_poly is None:
            return NotImplemented
        return self._terms == other_poly._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"NCPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for word in sorted(self._terms, key=lambda w: (-len(w), w)):
            coeff = self._terms[word]
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            body = "*".join(word)
            if not body:
                text = str(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{magnitude}*{body}"
            parts.append(f"{sign} {text}")
        joined = " ".join(parts)
        return joined[2:] if joined.startswith("+ ") else f"-{joined[2:]}"

    def to_json(self) -> dict[str, str]:
        return {word_key(w): format_coeff(c) for w, c in sorted(self._terms.items(), key=lambda i: (len(i[0]), i[0]))}

    @classmethod
    def from_json(cls, raw: Mapping[str, Any]) -> NCPoly:
        return cls({parse_word(k): parse_coeff(v) for k, v in raw.items()})


def _coerce(value: object) -> NCPoly | None:
    if isinstance(value, NCPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return NCPoly.constant(value)
    return None


def commutator(a: NCPoly, b: NCPoly) -> NCPoly:
    return a * b - b * a


def generator(symbol: str) -> NCPoly:
    return NCPoly.word(symbol)


def substitute(poly: NCPoly, mapping: Mapping[str, NCPoly]) -> NCPoly:
    """
    Apply the algebra homomorphism of the free algebra given on generators.

    Symbols missing from ``mapping`` are kept as they are.

    :param poly: the polynomial to map
    :param mapping: image of each generator
    :return: the image polynomial
    """
    result = NCPoly.zero()
    for word, coeff in poly.items():
        image = NCPoly.constant(coeff)
        for symbol in word:
            image *= mapping[symbol] if symbol in mapping else NCPoly.word(symbol)
        result += image
    return result


__all__ = (
    "NCPoly",
    "Scalar",
    "commutator",
    "format_coeff",
    "generator",
    "parse_coeff",
    "parse_word",
    "substitute",
    "word_key",
)
