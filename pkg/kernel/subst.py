"""
Substitutions de types et de termes, bêta-normalisation.
"""
from typing import Mapping, Tuple

from .errors import InstantiationTypeMismatch
from .hol_type import HolType, TypeInstantiation, subst_type_in_type
from .term import (
    Abs, App, Const, SchematicVar, Term, TermInstantiation, Var, infer_type, is_closed,
    subst_bound,
)

InstantiationPair = Tuple[TypeInstantiation, TermInstantiation]


def subst_type(tyinst: Mapping[str, HolType], t: Term) -> Term:
    """Applique l'instanciation de types à tous les types apparaissant dans t."""
    if not tyinst:
        return t

    def go(s: Term) -> Term:
        if isinstance(s, Var):
            return Var(s.name, subst_type_in_type(tyinst, s.ty))
        if isinstance(s, SchematicVar):
            return SchematicVar(s.name, subst_type_in_type(tyinst, s.ty))
        if isinstance(s, Const):
            return Const(s.name, subst_type_in_type(tyinst, s.ty))
        if isinstance(s, App):
            return App(go(s.fun), go(s.arg))
        if isinstance(s, Abs):
            return Abs(s.bound_name, subst_type_in_type(tyinst, s.bound_ty), go(s.body))
        return s

    return go(t)


def check_term_instantiation(inst: Mapping[str, Term]) -> None:
    """Les termes affectés doivent être clos (aucun indice lié pendant)."""
    for name, value in inst.items():
        if not is_closed(value):
            raise InstantiationTypeMismatch(name, "terme non clos")


def subst_term(inst: Mapping[str, Term], t: Term) -> Term:
    """
    Remplace les variables schématiques nommées dans inst.

    La représentation de de Bruijn rend toute capture impossible : les termes
    affectés sont clos.

    Raises:
        InstantiationTypeMismatch: type du terme affecté différent de celui de la variable
    """
    if not inst:
        return t
    check_term_instantiation(inst)
    value_types = {name: infer_type(value) for name, value in inst.items()}

    def go(s: Term) -> Term:
        if isinstance(s, SchematicVar):
            if s.name not in inst:
                return s
            if value_types[s.name] != s.ty:
                raise InstantiationTypeMismatch(s.name)
            return inst[s.name]
        if isinstance(s, App):
            return App(go(s.fun), go(s.arg))
        if isinstance(s, Abs):
            return Abs(s.bound_name, s.bound_ty, go(s.body))
        return s

    return go(t)


def beta_norm(t: Term) -> Term:
    """Forme bêta-normale ; la terminaison est garantie par le typage simple."""
    if isinstance(t, App):
        f = beta_norm(t.fun)
        if isinstance(f, Abs):
            return beta_norm(subst_bound(f.body, t.arg))
        return App(f, beta_norm(t.arg))
    if isinstance(t, Abs):
        return Abs(t.bound_name, t.bound_ty, beta_norm(t.body))
    return t


def subst_norm(t: Term, instsp: InstantiationPair) -> Term:
    """subst_type, puis subst_term, puis beta_norm."""
    tyinst, inst = instsp
    return beta_norm(subst_term(inst, subst_type(tyinst, t)))
