"""Exact matrix witnesses of noncommutativity."""

from __future__ import annotations

from .block import (
    P,
    Q,
    block_commutes,
    builtin_block_witness,
    h2plus_witness,
    snplus_block_witness,
    two_projection_rep,
)
from .errors import DimensionMismatch, MissingGenerator, RepInvalid, WitnessError
from .rep import (
    MatrixRep,
    certify_noncommutative,
    dump_rep,
    load_rep,
    noncommuting_pair,
    verify_representation,
)

__all__ = (
    "P",
    "Q",
    "DimensionMismatch",
    "MatrixRep",
    "MissingGenerator",
    "RepInvalid",
    "WitnessError",
    "block_commutes",
    "builtin_block_witness",
    "certify_noncommutative",
    "dump_rep",
    "h2plus_witness",
    "load_rep",
    "noncommuting_pair",
    "snplus_block_witness",
    "two_projection_rep",
    "verify_representation",
)
