"""Presented algebras of quantum automorphism groups and of graphs."""

from __future__ import annotations

from .cstar import IMPOSED, cstar_alphabet, graph_cstar_presentation, imposed_notes, p, s, s_star
from .hyperoctahedral import (
    h2plus_presentation,
    u_in_v,
    v,
    v_in_u,
    view_mapping,
    z2freedual_magic_view,
    z2freedual_presentation,
)
from .magic import (
    banica_presentation,
    banica_presentation_qa14,
    bichon_presentation,
    entry,
    magic_alphabet,
    magic_matrix,
    qa1,
    qa2,
    qa3,
    qa4,
    qa5,
    qa6,
    qa7,
    snplus_presentation,
    u,
)

__all__ = (
    "IMPOSED",
    "banica_presentation",
    "banica_presentation_qa14",
    "bichon_presentation",
    "cstar_alphabet",
    "entry",
    "graph_cstar_presentation",
    "h2plus_presentation",
    "imposed_notes",
    "magic_alphabet",
    "magic_matrix",
    "p",
    "qa1",
    "qa2",
    "qa3",
    "qa4",
    "qa5",
    "qa6",
    "qa7",
    "s",
    "s_star",
    "snplus_presentation",
    "u",
    "u_in_v",
    "v",
    "v_in_u",
    "view_mapping",
    "z2freedual_magic_view",
    "z2freedual_presentation",
)
