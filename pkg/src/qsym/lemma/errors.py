"""Errors raised when a lemma does not apply to a graph."""

from __future__ import annotations


class LemmaError(ValueError):
    """The graph does not satisfy the hypothesis of a lemma."""


class NoSourcelessVertex(LemmaError):  # noqa: N818
    """Every vertex emits an edge."""


class NoEdges(LemmaError):  # noqa: N818
    """The graph has no edges."""


__all__ = (
    "LemmaError",
    "NoEdges",
    "NoSourcelessVertex",
)
