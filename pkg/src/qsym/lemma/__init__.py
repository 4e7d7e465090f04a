"""Instance checks of the graph lemmas and the four-vertex classification table."""

from __future__ import annotations

from .decide import COMMUTATIVE, NONCOMMUTATIVE, UNKNOWN, VERDICTS, decide_commutativity, find_witness
from .errors import LemmaError, NoEdges, NoSourcelessVertex
from .graph_lemmas import (
    loop_commutators,
    prove_banica_complement_invariance,
    prove_bichon_contains_banica,
    prove_complete_graph_commutative,
    prove_eqzero,
    prove_lemma_same_instance,
    prove_loops_invariance,
    prove_qa6_implied,
    sourceless_zeros,
)
from .isomorphism import DEFAULT_ISOMORPHISM_BOUND, DISJOINT_EDGES_ROW, verify_h2plus_isomorphism
from .report import DEFAULT_LEMMA_BOUND, LemmaReport, prove_parts
from .shape import Identity, MatrixShape, derive_matrix_shape
from .table import COLUMNS, EXPECTED, Expected, TableRow, table_row

__all__ = (
    "COLUMNS",
    "COMMUTATIVE",
    "DEFAULT_ISOMORPHISM_BOUND",
    "DEFAULT_LEMMA_BOUND",
    "DISJOINT_EDGES_ROW",
    "EXPECTED",
    "NONCOMMUTATIVE",
    "UNKNOWN",
    "VERDICTS",
    "Expected",
    "Identity",
    "LemmaError",
    "LemmaReport",
    "MatrixShape",
    "NoEdges",
    "NoSourcelessVertex",
    "TableRow",
    "decide_commutativity",
    "derive_matrix_shape",
    "find_witness",
    "loop_commutators",
    "prove_banica_complement_invariance",
    "prove_bichon_contains_banica",
    "prove_complete_graph_commutative",
    "prove_eqzero",
    "prove_lemma_same_instance",
    "prove_loops_invariance",
    "prove_parts",
    "prove_qa6_implied",
    "sourceless_zeros",
    "table_row",
    "verify_h2plus_isomorphism",
)
