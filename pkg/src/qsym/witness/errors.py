"""Errors raised by matrix representations."""

from __future__ import annotations


class WitnessError(ValueError):
    """Base class for representation errors."""


class MissingGenerator(WitnessError):  # noqa: N818
    """The representation assigns no matrix to a generator of the presentation."""


class DimensionMismatch(WitnessError):  # noqa: N818
    """A matrix is not square of the representation's dimension."""


class RepInvalid(WitnessError):  # noqa: N818
    """The representation violates a relation or the involution."""


__all__ = (
    "DimensionMismatch",
    "MissingGenerator",
    "RepInvalid",
    "WitnessError",
)
