"""Noyau logique : types, termes, séquents, substitutions, filtrage et règles primitives."""
from .errors import (
    ConflictingAssignment,
    HolTypeError,
    InstantiationTypeMismatch,
    KernelError,
    LengthMismatch,
    MatchFailure,
    RuleMismatch,
    SignatureError,
    UnknownTheorem,
)
from .hol_type import (
    BoolType,
    HolType,
    NatType,
    TypeApplication,
    TypeInstantiation,
    TypeVariable,
    dest_fun,
    fun_type,
    is_fun,
)
from .matcher import first_order_match, first_order_match_list
from .rules import GAP_RULE, PRIMITIVE_RULES, ArgKind, TheoryEnv, apply_prim_rule, is_primitive
from .sequent import Sequent
from .signature import Signature, base_signature, match_type, type_of
from .subst import InstantiationPair, beta_norm, subst_norm, subst_term, subst_type
from .term import (
    Abs,
    App,
    Bound,
    Const,
    SchematicVar,
    Term,
    TermInstantiation,
    Var,
    infer_type,
    mk_abs,
    mk_eq,
    mk_forall,
    mk_implies,
)

__all__ = [
    "ConflictingAssignment",
    "HolTypeError",
    "InstantiationTypeMismatch",
    "KernelError",
    "LengthMismatch",
    "MatchFailure",
    "RuleMismatch",
    "SignatureError",
    "UnknownTheorem",
    "BoolType",
    "HolType",
    "NatType",
    "TypeApplication",
    "TypeInstantiation",
    "TypeVariable",
    "dest_fun",
    "fun_type",
    "is_fun",
    "first_order_match",
    "first_order_match_list",
    "GAP_RULE",
    "PRIMITIVE_RULES",
    "ArgKind",
    "TheoryEnv",
    "apply_prim_rule",
    "is_primitive",
    "Sequent",
    "Signature",
    "base_signature",
    "match_type",
    "type_of",
    "InstantiationPair",
    "beta_norm",
    "subst_norm",
    "subst_term",
    "subst_type",
    "Abs",
    "App",
    "Bound",
    "Const",
    "SchematicVar",
    "Term",
    "TermInstantiation",
    "Var",
    "infer_type",
    "mk_abs",
    "mk_eq",
    "mk_forall",
    "mk_implies",
]
