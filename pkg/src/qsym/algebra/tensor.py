"""Algebraic tensor products of presented *-algebras with leg-wise reduction."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Any, Iterator, Mapping, NamedTuple, Sequence

from .errors import AlphabetMismatch
from .poly import NCPoly, Scalar, format_coeff, parse_coeff, parse_word, word_key

if TYPE_CHECKING:
    from .alphabet import GenAlphabet, Word
    from .presentation import Presentation
    from .rewrite import RewriteSystem

Key = tuple["Word", ...]


class TensorPoly:
    """
    A finite sum of elementary tensors ``w_1 ⊗ ... ⊗ w_k`` with exact rational coefficients.

    Legs are independent word tuples, so elements of different legs commute by construction. Values are immutable.
    """

    __slots__ = ("_terms", "legs")

    def __init__(
        self,
        legs: Sequence[GenAlphabet],
        terms: Mapping[Key, Scalar] | None = None,
    ) -> None:
        self.legs = tuple(legs)
        collected: dict[Key, Fraction] = {}
        for key, coeff in (terms or {}).items():
            if len(key) != len(self.legs):
                msg = f"tensor of {len(key)} legs in a {len(self.legs)}-leg algebra"
                raise AlphabetMismatch(msg)
            value = collected.get(key, Fraction(0)) + Fraction(coeff)
            if value:
                collected[key] = value
            else:
                collected.pop(key, None)
        self._terms = collected

    @classmethod
    def _raw(cls, legs: tuple[GenAlphabet, ...], terms: dict[Key, Fraction]) -> TensorPoly:
        result = cls.__new__(cls)
        result.legs = legs
        result._terms = terms
        return result

    @classmethod
    def zero(cls, legs: Sequence[GenAlphabet]) -> TensorPoly:
        return cls(legs)

    @classmethod
    def one(cls, legs: Sequence[GenAlphabet]) -> TensorPoly:
        return cls(legs, {tuple(() for _ in legs): 1})

    @classmethod
    def of(cls, legs: Sequence[GenAlphabet], *factors: NCPoly) -> TensorPoly:
        """:return: the elementary tensor ``factors[0] ⊗ factors[1] ⊗ ...``"""
        if len(factors) != len(legs):
            msg = f"{len(factors)} factors for {len(legs)} legs"
            raise AlphabetMismatch(msg)
        terms: dict[Key, Fraction] = {(): Fraction(1)}
        for factor in factors:
            terms = {key + (w,): c * d for key, c in terms.items() for w, d in factor.items()}
        return cls(legs, terms)

    @classmethod
    def on_leg(cls, legs: Sequence[GenAlphabet], at: int, poly: NCPoly) -> TensorPoly:
        """:return: ``1 ⊗ ... ⊗ poly ⊗ ... ⊗ 1`` with ``poly`` on leg ``at``"""
        factors = [NCPoly.one()] * len(legs)
        factors[at] = poly
        return cls.of(legs, *factors)

    @property
    def terms(self) -> Mapping[Key, Fraction]:
        return self._terms

    def items(self) -> Iterator[tuple[Key, Fraction]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def _check(self, other: TensorPoly) -> None:
        if self.legs != other.legs:
            msg = "tensor legs differ"
            raise AlphabetMismatch(msg)

    def __add__(self, other: TensorPoly) -> TensorPoly:
        self._check(other)
        result = dict(self._terms)
        for key, coeff in other._terms.items():
            value = result.get(key, Fraction(0)) + coeff
            if value:
                result[key] = value
            else:
                result.pop(key, None)
        return TensorPoly._raw(self.legs, result)

    def __neg__(self) -> TensorPoly:
        return TensorPoly._raw(self.legs, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: TensorPoly) -> TensorPoly:
        return self + (-other)

    def __mul__(self, other: object) -> TensorPoly:
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        if not isinstance(other, TensorPoly):
            return NotImplemented
        self._check(other)
        result: dict[Key, Fraction] = {}
        for left, a in self._terms.items():
            for right, b in other._terms.items():
                key = tuple(x + y for x, y in zip(left, right))
                value = result.get(key, Fraction(0)) + a * b
                if value:
                    result[key] = value
                else:
                    result.pop(key, None)
        return TensorPoly._raw(self.legs, result)

    def __rmul__(self, other: object) -> TensorPoly:
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        return NotImplemented

    def scaled(self, factor: Scalar) -> TensorPoly:
        factor = Fraction(factor)
        if not factor:
            return TensorPoly.zero(self.legs)
        return TensorPoly._raw(self.legs, {k: c * factor for k, c in self._terms.items()})

    def star(self) -> TensorPoly:
        return TensorPoly._raw(
            self.legs,
            {tuple(leg.star_word(w) for leg, w in zip(self.legs, key)): c for key, c in self._terms.items()},
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self.legs == other.legs and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def split(self, at: int) -> dict[Word, NCPoly]:
        """
        Group a two-leg tensor by the words of one leg.

        :param at: the leg whose words become keys
        :return: for each word of leg ``at`` the polynomial on the other leg it multiplies
        """
        if len(self.legs) != 2:  # noqa: PLR2004
            msg = "only two-leg tensors split into coefficients"
            raise AlphabetMismatch(msg)
        other = 1 - at
        grouped: defaultdict[Word, dict[Word, Fraction]] = defaultdict(dict)
        for key, coeff in self._terms.items():
            grouped[key[at]][key[other]] = coeff
        return {word: NCPoly(terms) for word, terms in grouped.items()}

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for key, coeff in sorted(self._terms.items(), key=lambda i: [(len(w), w) for w in i[0]]):
            body = " ⊗ ".join("*".join(w) or "1" for w in key)
            parts.append(f"{format_coeff(coeff)}·({body})" if coeff != 1 else f"({body})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TensorPoly({self})"

    def to_json(self) -> list[dict[str, Any]]:
        return [
            {"legs": [word_key(w) for w in key], "coeff": format_coeff(coeff)}
            for key, coeff in sorted(self._terms.items(), key=lambda i: [(len(w), w) for w in i[0]])
        ]

    @classmethod
    def from_json(cls, legs: Sequence[GenAlphabet], raw: Sequence[Mapping[str, Any]]) -> TensorPoly:
        return cls(legs, {tuple(parse_word(w) for w in e["legs"]): parse_coeff(e["coeff"]) for e in raw})


class TensorTerm(NamedTuple):
    """``coeff`` times ``context`` with the slot ``leg`` replaced by ``left * relation[rel] * right``."""

    leg: int
    coeff: Fraction
    context: Key
    left: Word
    rel: int
    right: Word


@dataclass(frozen=True)
class TensorCertificate:
    """Witness that ``target - residue`` lies in the sum of the leg ideals."""

    target: TensorPoly
    residue: TensorPoly
    terms: tuple[TensorTerm, ...]
    presentations: tuple[str, ...] = field(default=(), compare=False)  #: per-leg fingerprints, "" for a free leg

    def __len__(self) -> int:
        return len(self.terms)

    def to_json(self) -> dict[str, Any]:
        return {
            "target": self.target.to_json(),
            "residue": self.residue.to_json(),
            "terms": [
                {
                    "leg": t.leg,
                    "coeff": format_coeff(t.coeff),
                    "context": [list(w) for w in t.context],
                    "left": list(t.left),
                    "rel": t.rel,
                    "right": list(t.right),
                }
                for t in self.terms
            ],
            "presentations": list(self.presentations),
        }

    @classmethod
    def from_json(cls, legs: Sequence[GenAlphabet], raw: Mapping[str, Any]) -> TensorCertificate:
        terms = tuple(
            TensorTerm(
                int(e["leg"]),
                parse_coeff(e["coeff"]),
                tuple(tuple(w) for w in e["context"]),
                tuple(e["left"]),
                int(e["rel"]),
                tuple(e["right"]),
            )
            for e in raw["terms"]
        )
        return cls(
            TensorPoly.from_json(legs, raw["target"]),
            TensorPoly.from_json(legs, raw["residue"]),
            terms,
            tuple(str(p) for p in raw.get("presentations", ())),
        )


def tensor_normalize(
    tensor: TensorPoly,
    systems: Sequence[RewriteSystem | None],
    sequence: Sequence[int] | None = None,
) -> tuple[TensorPoly, TensorCertificate]:
    """
    Reduce every leg of a tensor to normal form.

    Legs are reduced one after another; each leg is normalized separately for every context of the other legs, which
    leaves the already reduced legs untouched. A zero result proves the tensor vanishes in the product of the quotients.

    :param tensor: the tensor to reduce
    :param systems: per-leg rewrite system, ``None`` keeps a leg free
    :param sequence: order in which the legs are reduced, leg order by default
    :return: the reduced tensor and the certificate of ``tensor - reduced``
    """
    if len(systems) != len(tensor.legs):
        msg = f"{len(systems)} rewrite systems for {len(tensor.legs)} legs"
        raise AlphabetMismatch(msg)
    for system, leg in zip(systems, tensor.legs):
        if system is not None and system.presentation.alphabet != leg:
            msg = f"rewrite system {system.presentation.name} does not match its leg"
            raise AlphabetMismatch(msg)
    current = tensor
    terms: list[TensorTerm] = []
    for at in range(len(systems)) if sequence is None else sequence:
        system = systems[at]
        if system is None:
            continue
        groups: defaultdict[Key, dict[Word, Fraction]] = defaultdict(dict)
        for key, coeff in current.items():
            context = (*key[:at], (), *key[at + 1 :])
            groups[context][key[at]] = coeff
        reduced: dict[Key, Fraction] = {}
        for context, leg_terms in groups.items():
            normal, steps = system.normalize(NCPoly(leg_terms))
            for word, coeff in normal.items():
                reduced[(*context[:at], word, *context[at + 1 :])] = coeff
            for (left, rel, right), coeff in sorted(system.express(steps).items()):
                terms.append(TensorTerm(at, coeff, context, left, rel, right))
        current = TensorPoly(current.legs, reduced)
    prints = tuple(s.presentation.fingerprint if s is not None else "" for s in systems)
    return current, TensorCertificate(tensor, current, tuple(terms), prints)


def expand_tensor_certificate(presentations: Sequence[Presentation | None], cert: TensorCertificate) -> TensorPoly:
    """:return: the free tensor-algebra value of the certificate sum"""
    legs = cert.target.legs
    total: dict[Key, Fraction] = {}
    for term in cert.terms:
        presentation = presentations[term.leg]
        if presentation is None:
            msg = f"certificate uses relations on the free leg {term.leg}"
            raise AlphabetMismatch(msg)
        for word, coeff in presentation.relation(term.rel).items():
            context = list(term.context)
            context[term.leg] = term.left + word + term.right
            key = tuple(context)
            total[key] = total.get(key, Fraction(0)) + term.coeff * coeff
    return TensorPoly(legs, total)


def check_tensor_certificate(presentations: Sequence[Presentation | None], cert: TensorCertificate) -> bool:
    """
    Replay a tensor certificate in the free tensor algebra.

    :param presentations: per-leg presentations, ``None`` for free legs
    :param cert: the certificate
    :return: ``True`` iff ``target - residue`` equals the certificate sum exactly
    """
    if len(presentations) != len(cert.target.legs):
        return False
    for at, presentation in enumerate(presentations):
        expected = cert.presentations[at] if at < len(cert.presentations) else ""
        if presentation is not None and expected and presentation.fingerprint != expected:
            return False
    for term in cert.terms:
        presentation = presentations[term.leg]
        if presentation is None or not 0 <= term.rel < len(presentation):
            return False
    return expand_tensor_certificate(presentations, cert) == cert.target - cert.residue


__all__ = (
    "Key",
    "TensorCertificate",
    "TensorPoly",
    "TensorTerm",
    "check_tensor_certificate",
    "expand_tensor_certificate",
    "tensor_normalize",
)
