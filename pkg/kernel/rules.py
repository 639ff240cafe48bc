"""
Table fixe des règles de dérivation primitives.

Toute valeur Sequent observable hors du noyau provient de apply_prim_rule,
de l'évaluation d'une macro ou d'une consultation de la théorie ; seules les
règles assume et sorry construisent un séquent arbitraire, et sorry est
comptabilisée comme lacune par le vérificateur.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, Optional, Protocol, Sequence

from .errors import HolTypeError, InstantiationTypeMismatch, RuleMismatch, SignatureError
from .hol_type import BoolType, dest_fun, is_fun
from .sequent import Sequent
from .signature import Signature, type_of
from .subst import beta_norm, subst_term, subst_type
from .term import (
    Abs, App, Bound, Const, SchematicVar, Term, Var, dest_eq, dest_implies, infer_type,
    is_closed, is_eq, is_forall, is_implies, mk_abs, mk_eq, mk_forall, mk_implies,
    occurs_free, subst_bound,
)


class TheoryEnv(Protocol):
    """Environnement de théorie vu par le noyau (signature + table des théorèmes)."""
    signature: Signature

    def get_theorem(self, name: str, schematic: bool = False) -> Sequent:
        ...


class ArgKind(str, Enum):
    """Forme des arguments d'une règle ou d'une macro."""
    NONE = "none"
    TERM = "term"
    VARIABLE = "variable"
    TYPE_INST = "type_inst"
    TERM_INST = "term_inst"
    NAME = "name"
    NAME_INST = "name_inst"
    SEQUENT = "sequent"


@dataclass(frozen=True)
class RuleSpec:
    """Signature d'une règle primitive."""
    name: str
    arg_kind: ArgKind
    arity: int
    evaluate: Callable[[Any, Sequence[Sequent], Optional[TheoryEnv]], Sequent]


PRIMITIVE_RULES: Dict[str, RuleSpec] = {}

GAP_RULE = "sorry"


def _rule(name: str, arg_kind: ArgKind, arity: int):
    def register(fn):
        PRIMITIVE_RULES[name] = RuleSpec(name, arg_kind, arity, fn)
        return fn
    return register


def is_primitive(rule: str) -> bool:
    return rule in PRIMITIVE_RULES


def apply_prim_rule(
    rule: str,
    args: Any,
    prevs: Sequence[Sequent],
    thy: Optional[TheoryEnv] = None
) -> Sequent:
    """
    Applique une règle primitive.

    Args:
        rule: Nom de la règle
        args: Arguments propres à la règle (terme, variable, instanciation, nom, séquent)
        prevs: Séquents prémisses
        thy: Environnement (requis par la règle theorem, utilisé pour vérifier les types)

    Returns:
        Le séquent conclusion

    Raises:
        RuleMismatch: arité, forme ou condition de bord violée
        UnknownTheorem: théorème absent (règle theorem)
    """
    spec = PRIMITIVE_RULES.get(rule)
    if spec is None:
        raise RuleMismatch(rule, "règle primitive inconnue")
    if len(prevs) != spec.arity:
        raise RuleMismatch(rule, f"{spec.arity} prémisse(s) attendue(s), {len(prevs)} fournie(s)")
    try:
        return spec.evaluate(args, prevs, thy)
    except (HolTypeError, InstantiationTypeMismatch, SignatureError) as e:
        raise RuleMismatch(rule, str(e)) from e


# =============================================================================
# Vérifications communes
# =============================================================================

def _check_term(rule: str, t: Any, thy: Optional[TheoryEnv]) -> Term:
    if not isinstance(t, (Var, SchematicVar, Const, App, Abs, Bound)):
        raise RuleMismatch(rule, "un terme est attendu en argument")
    if not is_closed(t):
        raise RuleMismatch(rule, "l'argument contient un indice lié pendant")
    if thy is not None:
        type_of(t, thy.signature)
    else:
        infer_type(t)
    return t


def _check_bool(rule: str, t: Term) -> None:
    if infer_type(t) != BoolType:
        raise RuleMismatch(rule, "l'argument doit être booléen")


def _check_variable(rule: str, x: Any, hyps) -> Var:
    if not isinstance(x, Var):
        raise RuleMismatch(rule, "une variable libre est attendue en argument")
    if any(occurs_free(x, h) for h in hyps):
        raise RuleMismatch(rule, f"la variable {x.name} est libre dans les hypothèses")
    return x


def _dest_eq(rule: str, seq: Sequent):
    if not is_eq(seq.prop):
        raise RuleMismatch(rule, "une égalité est attendue en prémisse")
    return dest_eq(seq.prop)


# =============================================================================
# Règles
# =============================================================================

@_rule("assume", ArgKind.TERM, 0)
def _assume(a, prevs, thy):
    _check_term("assume", a, thy)
    _check_bool("assume", a)
    return Sequent(frozenset([a]), a)


@_rule("implies_intro", ArgKind.TERM, 1)
def _implies_intro(a, prevs, thy):
    _check_term("implies_intro", a, thy)
    _check_bool("implies_intro", a)
    prev = prevs[0]
    return Sequent(prev.hyps - {a}, mk_implies(a, prev.prop))


@_rule("implies_elim", ArgKind.NONE, 2)
def _implies_elim(args, prevs, thy):
    imp, ant = prevs
    if not is_implies(imp.prop):
        raise RuleMismatch("implies_elim", "la première prémisse doit être une implication")
    a, b = dest_implies(imp.prop)
    if a != ant.prop:
        raise RuleMismatch("implies_elim", "l'antécédent ne correspond pas à la seconde prémisse")
    return Sequent(imp.hyps | ant.hyps, b)


@_rule("forall_intro", ArgKind.VARIABLE, 1)
def _forall_intro(x, prevs, thy):
    prev = prevs[0]
    x = _check_variable("forall_intro", x, prev.hyps)
    return Sequent(prev.hyps, mk_forall(x, prev.prop))


@_rule("forall_elim", ArgKind.TERM, 1)
def _forall_elim(t, prevs, thy):
    _check_term("forall_elim", t, thy)
    prev = prevs[0]
    if not is_forall(prev.prop):
        raise RuleMismatch("forall_elim", "une quantification universelle est attendue")
    assert isinstance(prev.prop, App)
    pred = prev.prop.arg
    pred_ty = infer_type(pred)
    if not is_fun(pred_ty) or dest_fun(pred_ty)[0] != infer_type(t):
        raise RuleMismatch("forall_elim", "le type du témoin ne correspond pas")
    if isinstance(pred, Abs):
        return Sequent(prev.hyps, subst_bound(pred.body, t))
    return Sequent(prev.hyps, App(pred, t))


@_rule("reflexive", ArgKind.TERM, 0)
def _reflexive(t, prevs, thy):
    _check_term("reflexive", t, thy)
    return Sequent(frozenset(), mk_eq(t, t))


@_rule("symmetric", ArgKind.NONE, 1)
def _symmetric(args, prevs, thy):
    prev = prevs[0]
    lhs, rhs = _dest_eq("symmetric", prev)
    return Sequent(prev.hyps, mk_eq(rhs, lhs))


@_rule("transitive", ArgKind.NONE, 2)
def _transitive(args, prevs, thy):
    first, second = prevs
    a, b = _dest_eq("transitive", first)
    b2, c = _dest_eq("transitive", second)
    if b != b2:
        raise RuleMismatch("transitive", "les membres intermédiaires diffèrent")
    return Sequent(first.hyps | second.hyps, mk_eq(a, c))


@_rule("combination", ArgKind.NONE, 2)
def _combination(args, prevs, thy):
    fun_eq, arg_eq = prevs
    f, g = _dest_eq("combination", fun_eq)
    s, t = _dest_eq("combination", arg_eq)
    f_ty = infer_type(f)
    if not is_fun(f_ty) or dest_fun(f_ty)[0] != infer_type(s):
        raise RuleMismatch("combination", "types incompatibles pour l'application")
    return Sequent(fun_eq.hyps | arg_eq.hyps, mk_eq(App(f, s), App(g, t)))


@_rule("abstraction", ArgKind.VARIABLE, 1)
def _abstraction(x, prevs, thy):
    prev = prevs[0]
    x = _check_variable("abstraction", x, prev.hyps)
    s, t = _dest_eq("abstraction", prev)
    return Sequent(prev.hyps, mk_eq(mk_abs(x, s), mk_abs(x, t)))


@_rule("beta_conv", ArgKind.TERM, 0)
def _beta_conv(t, prevs, thy):
    _check_term("beta_conv", t, thy)
    if not (isinstance(t, App) and isinstance(t.fun, Abs)):
        raise RuleMismatch("beta_conv", "un bêta-redex est attendu")
    return Sequent(frozenset(), mk_eq(t, subst_bound(t.fun.body, t.arg)))


@_rule("equal_elim", ArgKind.NONE, 2)
def _equal_elim(args, prevs, thy):
    eq, prem = prevs
    a, b = _dest_eq("equal_elim", eq)
    if infer_type(a) != BoolType:
        raise RuleMismatch("equal_elim", "l'égalité doit porter sur des booléens")
    if a != prem.prop:
        raise RuleMismatch("equal_elim", "la seconde prémisse ne correspond pas au membre gauche")
    return Sequent(eq.hyps | prem.hyps, b)


@_rule("subst_type", ArgKind.TYPE_INST, 1)
def _subst_type(tyinst, prevs, thy):
    if not isinstance(tyinst, dict):
        raise RuleMismatch("subst_type", "une instanciation de types est attendue")
    if thy is not None:
        for ty in tyinst.values():
            thy.signature.check_type(ty)
    prev = prevs[0]
    return Sequent(
        frozenset(subst_type(tyinst, h) for h in prev.hyps),
        subst_type(tyinst, prev.prop),
    )


@_rule("substitution", ArgKind.TERM_INST, 1)
def _substitution(inst, prevs, thy):
    if not isinstance(inst, dict):
        raise RuleMismatch("substitution", "une instanciation de termes est attendue")
    if thy is not None:
        for value in inst.values():
            type_of(value, thy.signature)
    prev = prevs[0]
    return Sequent(
        frozenset(beta_norm(subst_term(inst, h)) for h in prev.hyps),
        beta_norm(subst_term(inst, prev.prop)),
    )


@_rule("theorem", ArgKind.NAME, 0)
def _theorem(name, prevs, thy):
    if thy is None:
        raise RuleMismatch("theorem", "aucune théorie disponible")
    if not isinstance(name, str):
        raise RuleMismatch("theorem", "un nom de théorème est attendu")
    return thy.get_theorem(name, schematic=True)


@_rule(GAP_RULE, ArgKind.SEQUENT, 0)
def _sorry(seq, prevs, thy):
    if not isinstance(seq, Sequent):
        raise RuleMismatch(GAP_RULE, "un séquent est attendu en argument")
    if thy is not None:
        for t in (seq.prop, *seq.hyps):
            type_of(t, thy.signature)
    return seq


__all__ = [
    "ArgKind", "RuleSpec", "PRIMITIVE_RULES", "GAP_RULE", "TheoryEnv",
    "apply_prim_rule", "is_primitive",
]
