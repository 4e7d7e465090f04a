"""Ideal-membership certificates and their engine-independent replay."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Any, Mapping, NamedTuple

from .poly import NCPoly, format_coeff, parse_coeff

if TYPE_CHECKING:
    from .alphabet import Word
    from .presentation import Presentation

LOGGER = logging.getLogger(__name__)


class CertTerm(NamedTuple):
    """``coeff * left * relation[rel] * right``."""

    left: Word
    rel: int
    right: Word
    coeff: Fraction


@dataclass(frozen=True)
class ProofCertificate:
    """Witness that ``target`` lies in the two-sided ideal generated by the relations of a presentation."""

    target: NCPoly
    terms: tuple[CertTerm, ...]
    presentation: str = field(default="", compare=False)  #: fingerprint of the presentation the indices refer to

    @classmethod
    def from_expression(
        cls,
        target: NCPoly,
        expression: Mapping[tuple[Word, int, Word], Fraction],
        presentation: str = "",
    ) -> ProofCertificate:
        terms = tuple(CertTerm(left, rel, right, c) for (left, rel, right), c in sorted(expression.items()) if c)
        return cls(target, terms, presentation)

    def __len__(self) -> int:
        return len(self.terms)

    def starred(self, presentation: Presentation) -> ProofCertificate:
        """
        Translate a certificate for ``p`` into one for ``p*``.

        :param presentation: the star-closed presentation the indices refer to
        :return: the starred certificate
        """
        alphabet = presentation.alphabet
        acc: dict[tuple[Word, int, Word], Fraction] = {}
        for term in self.terms:
            image, factor = presentation.star_of(term.rel)
            key = alphabet.star_word(term.right), image, alphabet.star_word(term.left)
            acc[key] = acc.get(key, Fraction(0)) + term.coeff * factor
        return ProofCertificate.from_expression(self.target.star(alphabet), acc, self.presentation)

    def expand(self, presentation: Presentation) -> NCPoly:
        """:return: the free-algebra value of the certificate sum"""
        total: dict[Word, Fraction] = {}
        for term in self.terms:
            for word, coeff in presentation.relation(term.rel).items():
                key = term.left + word + term.right
                value = total.get(key, Fraction(0)) + term.coeff * coeff
                if value:
                    total[key] = value
                else:
                    total.pop(key, None)
        return NCPoly(total)

    def to_json(self) -> dict[str, Any]:
        return {
            "target": self.target.to_json(),
            "terms": [
                {"left": list(t.left), "rel": t.rel, "right": list(t.right), "coeff": format_coeff(t.coeff)}
                for t in self.terms
            ],
            "presentation": self.presentation,
        }

    @classmethod
    def from_json(cls, raw: Mapping[str, Any]) -> ProofCertificate:
        terms = tuple(
            CertTerm(tuple(e["left"]), int(e["rel"]), tuple(e["right"]), parse_coeff(e["coeff"])) for e in raw["terms"]
        )
        return cls(NCPoly.from_json(raw["target"]), terms, str(raw.get("presentation", "")))


def check_certificate(presentation: Presentation, poly: NCPoly, certificate: ProofCertificate) -> bool:
    """
    Replay a certificate in the free algebra, independently of any rewrite system.

    :param presentation: presentation whose relation indices the certificate uses
    :param poly: the polynomial claimed to be zero in the quotient
    :param certificate: the certificate to replay
    :return: ``True`` iff the certificate sum equals ``poly`` exactly
    """
    if certificate.presentation and certificate.presentation != presentation.fingerprint:
        LOGGER.debug("certificate refers to %s, not %s", certificate.presentation, presentation.fingerprint)
        return False
    if any(not 0 <= t.rel < len(presentation) for t in certificate.terms):
        return False
    try:
        for term in certificate.terms:
            presentation.alphabet.check_word(term.left)
            presentation.alphabet.check_word(term.right)
    except ValueError:
        return False
    return certificate.expand(presentation) == poly


__all__ = (
    "CertTerm",
    "ProofCertificate",
    "check_certificate",
)
