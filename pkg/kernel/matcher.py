"""
Filtrage du premier ordre : motifs avec variables schématiques et variables de type.
"""
from typing import List, Optional, Sequence, Tuple

from .errors import ConflictingAssignment, LengthMismatch, MatchFailure
from .hol_type import HolType, TypeInstantiation
from .signature import match_type
from .subst import InstantiationPair
from .term import (
    Abs, App, Bound, Const, SchematicVar, Term, TermInstantiation, Var, infer_type,
    loose_bound_max,
)


def first_order_match(
    pattern: Term,
    target: Term,
    partial: Optional[InstantiationPair] = None
) -> InstantiationPair:
    """
    Étend partial pour que subst_norm(pattern, résultat) == target.

    Une variable schématique en tête d'application ne filtre que la fonction
    de l'application cible (descente structurelle, pas d'unification d'ordre
    supérieur). Sous une abstraction, l'affectation ne peut pas mentionner la
    variable liée.

    Args:
        pattern: Motif (variables schématiques et variables de type autorisées)
        target: Terme cible
        partial: Instanciation déjà connue (tyinst, inst)

    Returns:
        (tyinst, inst) étendues

    Raises:
        MatchFailure: aucune extension n'existe
        ConflictingAssignment: une variable reçoit deux valeurs
    """
    tyinst: TypeInstantiation = dict(partial[0]) if partial else {}
    inst: TermInstantiation = dict(partial[1]) if partial else {}
    _match(pattern, target, tyinst, inst, [])
    return tyinst, inst


def _match_types(
    pattern: HolType,
    ty: HolType,
    tyinst: TypeInstantiation,
    path: List[str]
) -> None:
    extended = match_type(pattern, ty, tyinst)
    if extended is None:
        raise MatchFailure(f"types incompatibles {pattern} / {ty}", path)
    tyinst.update(extended)


def _match(
    p: Term,
    t: Term,
    tyinst: TypeInstantiation,
    inst: TermInstantiation,
    path: List[str]
) -> None:
    if isinstance(p, SchematicVar):
        if loose_bound_max(t) > 0:
            raise MatchFailure(f"?{p.name} ne peut pas capturer une variable liée", path)
        _match_types(p.ty, infer_type(t), tyinst, path)
        previous = inst.get(p.name)
        if previous is None:
            inst[p.name] = t
        elif previous != t:
            raise ConflictingAssignment(p.name, path)
        return

    if isinstance(p, (Var, Const)):
        if type(t) is not type(p) or t.name != p.name:  # type: ignore[union-attr]
            raise MatchFailure(f"{p.name} attendu", path)
        _match_types(p.ty, t.ty, tyinst, path)  # type: ignore[union-attr]
        return

    if isinstance(p, Bound):
        if p != t:
            raise MatchFailure(f"indice lié {p.index} attendu", path)
        return

    if isinstance(p, App):
        if not isinstance(t, App):
            raise MatchFailure("application attendue", path)
        path.append("fun")
        _match(p.fun, t.fun, tyinst, inst, path)
        path[-1] = "arg"
        _match(p.arg, t.arg, tyinst, inst, path)
        path.pop()
        return

    if not isinstance(t, Abs):
        raise MatchFailure("abstraction attendue", path)
    _match_types(p.bound_ty, t.bound_ty, tyinst, path)
    path.append("body")
    _match(p.body, t.body, tyinst, inst, path)
    path.pop()


def first_order_match_list(
    patterns: Sequence[Term],
    targets: Sequence[Term],
    partial: Optional[InstantiationPair] = None
) -> InstantiationPair:
    """
    Filtre une liste de motifs de gauche à droite en propageant l'instanciation.

    Raises:
        LengthMismatch: listes de longueurs différentes
        MatchFailure: échec, annoté avec la position fautive
    """
    if len(patterns) != len(targets):
        raise LengthMismatch(len(patterns), len(targets))
    instsp: InstantiationPair = (
        (dict(partial[0]), dict(partial[1])) if partial else ({}, {})
    )
    for index, (pattern, target) in enumerate(zip(patterns, targets)):
        try:
            instsp = first_order_match(pattern, target, instsp)
        except MatchFailure as e:
            raise e.with_index(index)
    return instsp


__all__: Tuple[str, ...] = ("first_order_match", "first_order_match_list")
