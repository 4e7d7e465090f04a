"""Classical automorphism groups of graphs and their names."""

from __future__ import annotations

from .catalog import CATALOG, UNKNOWN, identify, identify_group
from .perm import (
    DEFAULT_MAX_VERTICES,
    PermGroup,
    automorphisms,
    commutes_with_adjacency,
    cycle_notation,
    from_images,
    images,
    permutation_matrix,
    preserves_edges,
)

__all__ = (
    "CATALOG",
    "DEFAULT_MAX_VERTICES",
    "UNKNOWN",
    "PermGroup",
    "automorphisms",
    "commutes_with_adjacency",
    "cycle_notation",
    "from_images",
    "identify",
    "identify_group",
    "images",
    "permutation_matrix",
    "preserves_edges",
)
