"""Free *-algebras over the rationals, truncated completion and certified zero-proofs."""

from __future__ import annotations

from .alphabet import GenAlphabet, Word
from .certificate import CertTerm, ProofCertificate, check_certificate
from .errors import AlgebraError, AlphabetMismatch, DegreeTooSmall, UnknownSymbol
from .order import DegLex, SymbolOrder
from .poly import NCPoly, commutator, generator, substitute
from .presentation import Presentation, RelationSpec, monic_key
from .prove import (
    Inconclusive,
    ProofResult,
    Proved,
    bound_schedule,
    commutators,
    prove_all,
    prove_commutativity,
    prove_members,
    prove_zero,
)
from .rewrite import DEFAULT_RULE_CAP, RewriteSystem, clear_cache, complete
from .tensor import TensorCertificate, TensorPoly, check_tensor_certificate, tensor_normalize


def normalize(system: RewriteSystem, poly: NCPoly) -> NCPoly:
    """:return: the normal form of ``poly`` (the trace is available through :meth:`RewriteSystem.normalize`)"""
    return system.normalize(poly)[0]


__all__ = (
    "DEFAULT_RULE_CAP",
    "AlgebraError",
    "AlphabetMismatch",
    "CertTerm",
    "DegLex",
    "DegreeTooSmall",
    "GenAlphabet",
    "Inconclusive",
    "NCPoly",
    "Presentation",
    "ProofCertificate",
    "ProofResult",
    "Proved",
    "RelationSpec",
    "RewriteSystem",
    "SymbolOrder",
    "TensorCertificate",
    "TensorPoly",
    "UnknownSymbol",
    "Word",
    "bound_schedule",
    "check_certificate",
    "check_tensor_certificate",
    "clear_cache",
    "commutator",
    "commutators",
    "complete",
    "generator",
    "monic_key",
    "normalize",
    "prove_all",
    "prove_commutativity",
    "prove_members",
    "prove_zero",
    "substitute",
    "tensor_normalize",
)
