"""Sound zero-proofs: Proved with replayed certificates, otherwise Inconclusive."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING, Iterable, Sequence, Union

from .certificate import ProofCertificate, check_certificate
from .poly import NCPoly, commutator
from .rewrite import DEFAULT_RULE_CAP, complete

if TYPE_CHECKING:
    from .order import SymbolOrder
    from .presentation import Presentation
    from .rewrite import RewriteSystem

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class Proved:
    """Every target is zero in the quotient; one replayed certificate per target."""

    certificates: tuple[ProofCertificate, ...]
    bound: int

    status = "PROVED"

    @property
    def certificate(self) -> ProofCertificate:
        return self.certificates[0]

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class Inconclusive:
    """The engine could not reduce ``target`` to zero, ``residue`` is its normal form (never a nonmembership claim)."""

    target: NCPoly
    residue: NCPoly
    bound: int

    status = "INCONCLUSIVE"

    def __bool__(self) -> bool:
        return False


ProofResult = Union[Proved, Inconclusive]


def _certify(system: RewriteSystem, poly: NCPoly) -> ProofCertificate | None:
    normal, steps = system.normalize(poly)
    if normal:
        return None
    presentation = system.presentation
    certificate = ProofCertificate.from_expression(poly, system.express(steps), presentation.fingerprint)
    if check_certificate(presentation, poly, certificate):
        return certificate
    LOGGER.error("certificate for %s does not replay against %s", poly, presentation.name)  # pragma: no cover
    return None  # pragma: no cover


def prove_zero(system: RewriteSystem, poly: NCPoly) -> ProofResult:
    """
    Try to prove that a polynomial vanishes in the presented algebra.

    When ``poly`` does not normalize to zero its adjoint is tried as well; a proof for the adjoint is starred back.

    :param system: rewrite system of the presentation
    :param poly: the polynomial to prove zero
    :return: :class:`Proved` carrying a replay-verified certificate, or :class:`Inconclusive`
    """
    presentation = system.presentation
    for word in poly.words():
        presentation.alphabet.check_word(word)
    certificate = _certify(system, poly)
    if certificate is not None:
        return Proved((certificate,), system.bound)
    adjoint = poly.star(presentation.alphabet)
    if adjoint != poly:
        starred = _certify(system, adjoint)
        if starred is not None:
            certificate = starred.starred(presentation)
            if check_certificate(presentation, poly, certificate):
                return Proved((certificate,), system.bound)
    return Inconclusive(poly, system.normalize(poly)[0], system.bound)


def prove_all(system: RewriteSystem, polys: Iterable[NCPoly]) -> ProofResult:
    """:return: :class:`Proved` with one certificate per polynomial, else the first :class:`Inconclusive`"""
    certificates: list[ProofCertificate] = []
    for poly in polys:
        result = prove_zero(system, poly)
        if not isinstance(result, Proved):
            return result
        certificates.append(result.certificate)
    return Proved(tuple(certificates), system.bound)


def bound_schedule(presentation: Presentation, bound: int, start: int = 4) -> list[int]:
    """:return: the increasing degree bounds tried by deepening, ending at ``bound``"""
    low = max(presentation.max_degree, min(start, bound))
    return [*range(low, bound, 2), bound] if low <= bound else [bound]


def prove_members(  # noqa: PLR0913
    presentation: Presentation,
    polys: Sequence[NCPoly],
    bound: int,
    order: SymbolOrder = "declaration",
    rule_cap: int = DEFAULT_RULE_CAP,
    deepen: bool = True,  # noqa: FBT001, FBT002
) -> ProofResult:
    """
    Prove that all polynomials lie in the ideal of a presentation.

    With ``deepen`` the completion bound grows stepwise and only the polynomials still open are retried, so the result
    reports the smallest bound of the schedule that settled every target.

    :param presentation: the presentation
    :param polys: polynomials to prove zero
    :param bound: largest completion bound
    :param order: symbol order of the monomial order
    :param rule_cap: rule cap of the completion
    :param deepen: try lower bounds first
    :return: :class:`Proved` with certificates in input order, or the first open target as :class:`Inconclusive`
    """
    found: dict[int, ProofCertificate] = {}
    last: ProofResult = Proved((), bound)
    for level in bound_schedule(presentation, bound) if deepen else [bound]:
        system = complete(presentation, level, order, rule_cap)
        failed: list[Inconclusive] = []
        for at, poly in enumerate(polys):
            if at in found:
                continue
            result = prove_zero(system, poly)
            if isinstance(result, Proved):
                found[at] = result.certificate
            else:
                failed.append(result)
        if not failed:
            LOGGER.debug("%s: %d targets proved at bound %d", presentation.name, len(polys), level)
            return Proved(tuple(found[at] for at in range(len(polys))), level)
        last = failed[0]
    return last


def commutators(presentation: Presentation) -> list[NCPoly]:
    """:return: the commutator of every pair of distinct generators, in declaration order"""
    symbols = presentation.alphabet.symbols
    return [commutator(NCPoly.word(a), NCPoly.word(b)) for a, b in combinations(symbols, 2)]


def prove_commutativity(
    presentation: Presentation,
    bound: int,
    order: SymbolOrder = "declaration",
    rule_cap: int = DEFAULT_RULE_CAP,
) -> ProofResult:
    """
    Prove that the presented algebra is commutative.

    :param presentation: the presentation
    :param bound: largest completion bound, lower bounds are tried first
    :param order: symbol order of the monomial order
    :param rule_cap: rule cap of the completion
    :return: :class:`Proved` with a certificate per generator pair, or the first failing commutator
    """
    return prove_members(presentation, commutators(presentation), bound, order, rule_cap)


__all__ = (
    "Inconclusive",
    "ProofResult",
    "Proved",
    "bound_schedule",
    "commutators",
    "prove_all",
    "prove_commutativity",
    "prove_members",
    "prove_zero",
)
