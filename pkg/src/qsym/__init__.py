"""Symbolic checks on quantum automorphism groups of finite graphs and their graph *-algebras."""

from __future__ import annotations

from .run import main
from .version import version as __version__

__all__ = (
    "__version__",
    "main",
)
