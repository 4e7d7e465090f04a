"""Errors raised by the free algebra and rewriting layer."""

from __future__ import annotations


class AlgebraError(ValueError):
    """Base class for algebra errors."""


class UnknownSymbol(AlgebraError):  # noqa: N818
    """A word uses a symbol the alphabet does not declare."""


class AlphabetMismatch(AlgebraError):  # noqa: N818
    """Two objects that must share an alphabet do not."""


class DegreeTooSmall(AlgebraError):  # noqa: N818
    """The completion bound is below the degree of some relation."""


__all__ = (
    "AlgebraError",
    "AlphabetMismatch",
    "DegreeTooSmall",
    "UnknownSymbol",
)
