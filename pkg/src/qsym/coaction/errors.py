"""Errors raised by the action formulas."""

from __future__ import annotations


class CoactionError(ValueError):
    """Base class for action errors."""


class UnknownGenerator(CoactionError):  # noqa: N818
    """The symbol is not a generator of the graph *-algebra."""


__all__ = (
    "CoactionError",
    "UnknownGenerator",
)
