"""Termes de preuve, preuves linéaires et vérification."""
from .checker import CheckReport, build_proof_term, check_linear_proof, check_proof_term, expand_fully
from .errors import CheckFailure, ExpansionMismatch, NoExpansion, format_id
from .linear import LinearProof, LinearProofItem, linearize, parse_id
from .proofterm import ProofNode, node

__all__ = [
    "CheckReport",
    "build_proof_term",
    "check_linear_proof",
    "check_proof_term",
    "expand_fully",
    "CheckFailure",
    "ExpansionMismatch",
    "NoExpansion",
    "format_id",
    "LinearProof",
    "LinearProofItem",
    "linearize",
    "parse_id",
    "ProofNode",
    "node",
]
