"""
Conversions : procédures qui, pour un terme t, construisent une preuve de
⊢ t = t'. Les combinateurs composent ces preuves par transitivité et par les
règles de congruence (combination, abstraction).

Un échec est signalé par ConversionError ou MatchFailure ; try_conv,
first_conv, repeat_conv et top_conv les récupèrent, sauf BudgetExceeded qui
interrompt toujours le parcours.
"""
from abc import ABC, abstractmethod
from typing import List, Optional

from config import get_config
from kernel.errors import MatchFailure
from kernel.matcher import first_order_match
from kernel.rules import TheoryEnv
from kernel.term import Abs, App, Term, Var, dest_eq, free_vars, is_eq, subst_bound
from proof import proofterm as pt_
from proof.proofterm import ProofNode

from .errors import BudgetExceeded, ConversionError, NotAnEquation, ShapeMismatch

RECOVERABLE = (ConversionError, MatchFailure)


def rhs_of(pt: ProofNode) -> Term:
    """Membre droit de la conclusion d'une conversion."""
    return dest_eq(pt.th.prop)[1]


def _is_refl(pt: ProofNode) -> bool:
    return pt.rule == "reflexive"


def _transitive(pt1: ProofNode, pt2: ProofNode) -> ProofNode:
    if _is_refl(pt1):
        return pt2
    if _is_refl(pt2):
        return pt1
    return pt_.transitive(pt1, pt2)


def _combination(t: App, pt_fun: ProofNode, pt_arg: ProofNode) -> ProofNode:
    if _is_refl(pt_fun) and _is_refl(pt_arg):
        return pt_.reflexive(t)
    return pt_.combination(pt_fun, pt_arg)


class Conv(ABC):
    """Conversion : terme -> preuve de ⊢ t = t'."""

    @abstractmethod
    def get_proof_term(self, thy: TheoryEnv, t: Term) -> ProofNode:
        """
        Args:
            thy: Environnement (théorèmes de réécriture)
            t: Terme à convertir

        Returns:
            Nœud de preuve de ⊢ t = t' (membre gauche exactement t)
        """

    def __call__(self, thy: TheoryEnv, t: Term) -> ProofNode:
        return self.get_proof_term(thy, t)

    def eval(self, thy: TheoryEnv, t: Term):
        return self.get_proof_term(thy, t).th


# =============================================================================
# Conversions de base
# =============================================================================

class AllConv(Conv):
    def get_proof_term(self, thy, t):
        return pt_.reflexive(t)


class BetaConv(Conv):
    def get_proof_term(self, thy, t):
        if not (isinstance(t, App) and isinstance(t.fun, Abs)):
            raise ShapeMismatch("beta_conv", "bêta-redex")
        return pt_.beta_conv(t)


class RewrConv(Conv):
    """Réécrit t par l'égalité nommée (de droite à gauche si sym)."""

    def __init__(self, name: str, sym: bool = False):
        self.name = name
        self.sym = sym

    def get_proof_term(self, thy, t):
        th = thy.get_theorem(self.name, schematic=True)
        if not is_eq(th.prop):
            raise NotAnEquation(self.name)
        lhs, rhs = dest_eq(th.prop)
        pattern = rhs if self.sym else lhs
        tyinst, inst = first_order_match(pattern, t)
        pt = pt_.theorem(thy, self.name)
        pt = pt_.subst_type(tyinst, pt)
        pt = pt_.substitution(inst, pt)
        if self.sym:
            pt = pt_.symmetric(pt)
        if dest_eq(pt.th.prop)[0] != t:
            raise ConversionError(f"réécriture par {self.name}: terme non bêta-normal")
        return pt


class ThenConv(Conv):
    """Applique cv1 puis cv2."""

    def __init__(self, cv1: Conv, cv2: Conv):
        self.cv1 = cv1
        self.cv2 = cv2

    def get_proof_term(self, thy, t):
        pt1 = self.cv1.get_proof_term(thy, t)
        pt2 = self.cv2.get_proof_term(thy, rhs_of(pt1))
        return _transitive(pt1, pt2)


class EveryConv(Conv):
    def __init__(self, *cvs: Conv):
        self.cvs = cvs

    def get_proof_term(self, thy, t):
        pt = pt_.reflexive(t)
        for cv in self.cvs:
            pt = _transitive(pt, cv.get_proof_term(thy, rhs_of(pt)))
        return pt


class FirstConv(Conv):
    """Première conversion qui réussit."""

    def __init__(self, *cvs: Conv):
        self.cvs = cvs

    def get_proof_term(self, thy, t):
        for cv in self.cvs:
            try:
                return cv.get_proof_term(thy, t)
            except BudgetExceeded:
                raise
            except RECOVERABLE:
                continue
        raise ConversionError("first_conv: aucune conversion applicable")


class TryConv(Conv):
    def __init__(self, cv: Conv):
        self.cv = cv

    def get_proof_term(self, thy, t):
        try:
            return self.cv.get_proof_term(thy, t)
        except BudgetExceeded:
            raise
        except RECOVERABLE:
            return pt_.reflexive(t)


# =============================================================================
# Congruences
# =============================================================================

class ArgConv(Conv):
    def __init__(self, cv: Conv):
        self.cv = cv

    def get_proof_term(self, thy, t):
        if not isinstance(t, App):
            raise ShapeMismatch("arg_conv", "application")
        return _combination(t, pt_.reflexive(t.fun), self.cv.get_proof_term(thy, t.arg))


class FunConv(Conv):
    def __init__(self, cv: Conv):
        self.cv = cv

    def get_proof_term(self, thy, t):
        if not isinstance(t, App):
            raise ShapeMismatch("fun_conv", "application")
        return _combination(t, self.cv.get_proof_term(thy, t.fun), pt_.reflexive(t.arg))


class BinopConv(Conv):
    """Applique cv aux deux opérandes de op a b."""

    def __init__(self, cv: Conv):
        self.cv = cv

    def get_proof_term(self, thy, t):
        if not (isinstance(t, App) and isinstance(t.fun, App)):
            raise ShapeMismatch("binop_conv", "opérateur binaire")
        op_a = t.fun
        pt_left = _combination(op_a, pt_.reflexive(op_a.fun), self.cv.get_proof_term(thy, op_a.arg))
        return _combination(t, pt_left, self.cv.get_proof_term(thy, t.arg))


class AbsConv(Conv):
    """Applique cv au corps d'une abstraction, sous une variable fraîche."""

    def __init__(self, cv: Conv):
        self.cv = cv

    def get_proof_term(self, thy, t):
        if not isinstance(t, Abs):
            raise ShapeMismatch("abs_conv", "abstraction")
        used = {v.name for v in free_vars(t)}
        name = t.bound_name or "x"
        while name in used:
            name += "'"
        var = Var(name, t.bound_ty)
        pt = self.cv.get_proof_term(thy, subst_bound(t.body, var))
        if _is_refl(pt):
            return pt_.reflexive(t)
        return pt_.abstraction(var, pt)


class SubConv(Conv):
    """Applique cv aux sous-termes immédiats."""

    def __init__(self, cv: Conv):
        self.cv = cv

    def get_proof_term(self, thy, t):
        if isinstance(t, App):
            return _combination(t, self.cv.get_proof_term(thy, t.fun), self.cv.get_proof_term(thy, t.arg))
        if isinstance(t, Abs):
            return AbsConv(self.cv).get_proof_term(thy, t)
        return pt_.reflexive(t)


# =============================================================================
# Parcours répétés (bornés)
# =============================================================================

class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise BudgetExceeded(self.limit)


def _default_budget() -> int:
    return get_config().checker.step_budget


def _repeat(cv: Conv, thy: TheoryEnv, t: Term, budget: _Budget) -> ProofNode:
    pt = pt_.reflexive(t)
    while True:
        try:
            step = cv.get_proof_term(thy, rhs_of(pt))
        except BudgetExceeded:
            raise
        except RECOVERABLE:
            return pt
        if _is_refl(step) or rhs_of(step) == rhs_of(pt):
            return pt
        budget.spend()
        pt = _transitive(pt, step)


class RepeatConv(Conv):
    """Applique cv tant qu'il réussit."""

    def __init__(self, cv: Conv, budget: Optional[int] = None):
        self.cv = cv
        self.budget = budget

    def get_proof_term(self, thy, t):
        limit = self.budget if self.budget is not None else _default_budget()
        return _repeat(self.cv, thy, t, _Budget(limit))


class TopConv(Conv):
    """
    Parcours descendant répété jusqu'au point fixe : cv est appliqué à la
    racine tant qu'il réussit, puis aux sous-termes ; si un sous-terme a
    changé, la racine est reprise. Chaque réécriture consomme une étape du
    budget.
    """

    def __init__(self, cv: Conv, budget: Optional[int] = None):
        self.cv = cv
        self.budget = budget

    def get_proof_term(self, thy, t):
        limit = self.budget if self.budget is not None else _default_budget()
        return self._sweep(thy, t, _Budget(limit))

    def _sweep(self, thy: TheoryEnv, t: Term, budget: _Budget) -> ProofNode:
        pt = _repeat(self.cv, thy, t, budget)
        current = rhs_of(pt)
        if isinstance(current, App):
            sub = _combination(
                current,
                self._sweep(thy, current.fun, budget),
                self._sweep(thy, current.arg, budget),
            )
        elif isinstance(current, Abs):
            sub = AbsConv(_SweepConv(self, budget)).get_proof_term(thy, current)
        else:
            return pt
        if _is_refl(sub):
            return pt
        pt = _transitive(pt, sub)
        return _transitive(pt, self._sweep(thy, rhs_of(pt), budget))


class _SweepConv(Conv):
    """Poursuit le parcours d'un TopConv sous un lieur en partageant son budget."""

    def __init__(self, top: TopConv, budget: _Budget):
        self.top = top
        self.budget = budget

    def get_proof_term(self, thy, t):
        return self.top._sweep(thy, t, self.budget)


# =============================================================================
# Fabriques
# =============================================================================

def all_conv() -> Conv:
    return AllConv()


def beta_conv() -> Conv:
    return BetaConv()


def rewr_conv(name: str, sym: bool = False) -> Conv:
    return RewrConv(name, sym)


def then_conv(cv1: Conv, cv2: Conv) -> Conv:
    return ThenConv(cv1, cv2)


def every_conv(*cvs: Conv) -> Conv:
    return EveryConv(*cvs)


def first_conv(*cvs: Conv) -> Conv:
    return FirstConv(*cvs)


def try_conv(cv: Conv) -> Conv:
    return TryConv(cv)


def arg_conv(cv: Conv) -> Conv:
    return ArgConv(cv)


def fun_conv(cv: Conv) -> Conv:
    return FunConv(cv)


def binop_conv(cv: Conv) -> Conv:
    return BinopConv(cv)


def abs_conv(cv: Conv) -> Conv:
    return AbsConv(cv)


def sub_conv(cv: Conv) -> Conv:
    return SubConv(cv)


def repeat_conv(cv: Conv, budget: Optional[int] = None) -> Conv:
    return RepeatConv(cv, budget)


def top_conv(cv: Conv, budget: Optional[int] = None) -> Conv:
    return TopConv(cv, budget)


__all__: List[str] = [
    "Conv", "RECOVERABLE", "rhs_of",
    "all_conv", "beta_conv", "rewr_conv", "then_conv", "every_conv", "first_conv", "try_conv",
    "arg_conv", "fun_conv", "binop_conv", "abs_conv", "sub_conv", "repeat_conv", "top_conv",
]
