"""The action of Banica's quantum automorphism group on the graph *-algebra."""

from __future__ import annotations

from .action import (
    SIDES,
    Side,
    action_image,
    action_legs,
    alpha_image,
    apply_on_leg,
    beta_image,
    comultiply,
    image_of,
)
from .errors import CoactionError, UnknownGenerator
from .maximality import ActionAxioms, apply_positivity, derive_action_constraints, positivity_groups, replay_maximality
from .verify import (
    DEFAULT_THEOREM_BOUND,
    prove_tensors,
    verify_coassociativity,
    verify_hom_relations,
    verify_selfadjoint_quotient_qa5,
    verify_span_closure,
    verify_span_identities,
)

__all__ = (
    "DEFAULT_THEOREM_BOUND",
    "SIDES",
    "ActionAxioms",
    "CoactionError",
    "Side",
    "UnknownGenerator",
    "action_image",
    "action_legs",
    "alpha_image",
    "apply_on_leg",
    "apply_positivity",
    "beta_image",
    "comultiply",
    "derive_action_constraints",
    "image_of",
    "positivity_groups",
    "prove_tensors",
    "replay_maximality",
    "verify_coassociativity",
    "verify_hom_relations",
    "verify_selfadjoint_quotient_qa5",
    "verify_span_closure",
    "verify_span_identities",
)
