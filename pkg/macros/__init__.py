"""Macros de preuve : cadre commun, numéraux binaires et macros intégrées."""
from .base import (
    MacroError,
    MacroRegistry,
    MissingLemma,
    NormalizationMismatch,
    NotClosedArithmetic,
    ProofMacro,
    RegistryFrozen,
    TrustPolicy,
    UnknownMacro,
    get_registry,
)
from .numerals import dest_numeral, is_numeral, mk_numeral

__all__ = [
    "MacroError",
    "MacroRegistry",
    "MissingLemma",
    "NormalizationMismatch",
    "NotClosedArithmetic",
    "ProofMacro",
    "RegistryFrozen",
    "TrustPolicy",
    "UnknownMacro",
    "get_registry",
    "dest_numeral",
    "is_numeral",
    "mk_numeral",
]
