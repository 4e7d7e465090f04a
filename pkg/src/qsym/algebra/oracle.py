"""Exhaustive membership in a degree-truncated span, decided by exact linear algebra."""

from __future__ import annotations

from itertools import product
from typing import TYPE_CHECKING

import sympy as sp

if TYPE_CHECKING:
    from .alphabet import Word
    from .poly import NCPoly
    from .presentation import Presentation


def _words(symbols: tuple[str, ...], up_to: int) -> list[Word]:
    return [w for length in range(up_to + 1) for w in product(symbols, repeat=length)]


def span_oracle(presentation: Presentation, poly: NCPoly, degree: int) -> bool:
    """
    Decide whether ``poly`` is a linear combination of products ``l * r * q`` of total degree at most ``degree``.

    This only sees the truncated span, so ``False`` does not refute membership in the full ideal; it serves as an
    independent check on small presentations.

    :param presentation: the presentation
    :param poly: the polynomial to test
    :param degree: bound on ``len(l) + deg(r) + len(q)``
    :return: ``True`` iff ``poly`` lies in the truncated span
    """
    symbols = presentation.alphabet.symbols
    generators: list[NCPoly] = []
    for relation in presentation.relations:
        room = degree - relation.degree
        if room < 0:
            continue
        words = _words(symbols, room)
        generators.extend(
            relation.sandwich(left, right) for left in words for right in words if len(left) + len(right) <= room
        )
    basis = sorted({w for g in (*generators, poly) for w in g.words()}, key=lambda w: (len(w), w))
    if not generators:
        return poly.is_zero()
    index = {w: at for at, w in enumerate(basis)}
    columns = sp.zeros(len(basis), len(generators))
    for col, gen in enumerate(generators):
        for word, coeff in gen.items():
            columns[index[word], col] = sp.Rational(coeff.numerator, coeff.denominator)
    target = sp.zeros(len(basis), 1)
    for word, coeff in poly.items():
        target[index[word], 0] = sp.Rational(coeff.numerator, coeff.denominator)
    return columns.rank() == columns.row_join(target).rank()


__all__ = ("span_oracle",)
