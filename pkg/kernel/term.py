"""
Termes du lambda-calcul simplement typé.

Les variables liées sont des indices de de Bruijn (Bound) ; les variables
libres (Var) et schématiques (SchematicVar) sont nommées. Le nom indicatif
d'une abstraction est ignoré par l'égalité : l'égalité structurelle est
donc l'alpha-équivalence.
"""
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Set, Tuple, Union

from .errors import HolTypeError
from .hol_type import (
    BoolType, HolType, TypeApplication, dest_fun, fun_type, is_fun, iter_type_vars, type_key,
)


class _CachedHash:
    """Mémorise le hash des termes (ils sont immuables et souvent profonds)."""

    def _hash_fields(self) -> tuple:
        raise NotImplementedError

    def __hash__(self) -> int:
        cached = self.__dict__.get("_hash")
        if cached is None:
            cached = hash((type(self).__name__,) + self._hash_fields())
            object.__setattr__(self, "_hash", cached)
        return cached


@dataclass(frozen=True, eq=True)
class Var(_CachedHash):
    """Variable libre nommée."""
    name: str
    ty: HolType

    def _hash_fields(self) -> tuple:
        return (self.name, self.ty)

    __hash__ = _CachedHash.__hash__


@dataclass(frozen=True, eq=True)
class SchematicVar(_CachedHash):
    """Variable schématique (?A), instanciée par filtrage."""
    name: str
    ty: HolType

    def _hash_fields(self) -> tuple:
        return (self.name, self.ty)

    __hash__ = _CachedHash.__hash__


@dataclass(frozen=True, eq=True)
class Const(_CachedHash):
    """Constante, avec son type (instance du type déclaré dans la signature)."""
    name: str
    ty: HolType

    def _hash_fields(self) -> tuple:
        return (self.name, self.ty)

    __hash__ = _CachedHash.__hash__


@dataclass(frozen=True, eq=True)
class App(_CachedHash):
    """Application fun arg."""
    fun: "Term"
    arg: "Term"

    def _hash_fields(self) -> tuple:
        return (self.fun, self.arg)

    __hash__ = _CachedHash.__hash__


@dataclass(frozen=True, eq=True)
class Abs(_CachedHash):
    """Abstraction ; bound_name n'est qu'une indication pour l'affichage."""
    bound_name: str = field(compare=False)
    bound_ty: HolType
    body: "Term"

    def _hash_fields(self) -> tuple:
        return (self.bound_ty, self.body)

    __hash__ = _CachedHash.__hash__


@dataclass(frozen=True, eq=True)
class Bound(_CachedHash):
    """Variable liée (indice de de Bruijn)."""
    index: int

    def _hash_fields(self) -> tuple:
        return (self.index,)

    __hash__ = _CachedHash.__hash__


Term = Union[Var, SchematicVar, Const, App, Abs, Bound]

# Instanciation de termes : nom de variable schématique -> terme
TermInstantiation = Dict[str, Term]


# =============================================================================
# Typage sans signature
# =============================================================================

def infer_type(t: Term, bound_types: Sequence[HolType] = ()) -> HolType:
    """
    Calcule le type de t en faisant confiance aux types portés par les constantes.

    Args:
        t: Terme
        bound_types: Types des variables liées englobantes (la plus interne en tête)

    Returns:
        Le type de t
    """
    return _infer(t, list(bound_types), [])


def _infer(t: Term, bound: List[HolType], path: List[str]) -> HolType:
    if isinstance(t, (Var, SchematicVar, Const)):
        return t.ty
    if isinstance(t, Bound):
        if t.index >= len(bound):
            raise HolTypeError(f"indice lié {t.index} hors de portée", path)
        return bound[t.index]
    if isinstance(t, Abs):
        bound.insert(0, t.bound_ty)
        path.append("body")
        try:
            body_ty = _infer(t.body, bound, path)
        finally:
            path.pop()
            bound.pop(0)
        return fun_type(t.bound_ty, body_ty)
    path.append("fun")
    fun_ty = _infer(t.fun, bound, path)
    path[-1] = "arg"
    arg_ty = _infer(t.arg, bound, path)
    path.pop()
    if not is_fun(fun_ty):
        raise HolTypeError(f"application d'un terme de type non fonctionnel", path)
    domain, codomain = dest_fun(fun_ty)
    if domain != arg_ty:
        raise HolTypeError("type d'argument incompatible", path)
    return codomain


# =============================================================================
# Parcours et indices de de Bruijn
# =============================================================================

def loose_bound_max(t: Term, level: int = 0) -> int:
    """Retourne 1 + le plus grand indice libre (relatif à level), 0 si le terme est clos."""
    if isinstance(t, Bound):
        return t.index - level + 1 if t.index >= level else 0
    if isinstance(t, App):
        return max(loose_bound_max(t.fun, level), loose_bound_max(t.arg, level))
    if isinstance(t, Abs):
        return loose_bound_max(t.body, level + 1)
    return 0


def is_closed(t: Term) -> bool:
    """Vrai si aucun indice de de Bruijn ne s'échappe."""
    return loose_bound_max(t) == 0


def incr_boundvars(t: Term, inc: int, level: int = 0) -> Term:
    """Décale de inc les indices libres (>= level) de t."""
    if inc == 0:
        return t
    if isinstance(t, Bound):
        return Bound(t.index + inc) if t.index >= level else t
    if isinstance(t, App):
        return App(incr_boundvars(t.fun, inc, level), incr_boundvars(t.arg, inc, level))
    if isinstance(t, Abs):
        return Abs(t.bound_name, t.bound_ty, incr_boundvars(t.body, inc, level + 1))
    return t


def subst_bound(body: Term, arg: Term) -> Term:
    """Remplace l'indice 0 de body (corps d'une abstraction) par arg."""

    def go(t: Term, level: int) -> Term:
        if isinstance(t, Bound):
            if t.index == level:
                return incr_boundvars(arg, level)
            if t.index > level:
                return Bound(t.index - 1)
            return t
        if isinstance(t, App):
            return App(go(t.fun, level), go(t.arg, level))
        if isinstance(t, Abs):
            return Abs(t.bound_name, t.bound_ty, go(t.body, level + 1))
        return t

    return go(body, 0)


def abstract_over(t: Term, v: Union[Var, SchematicVar]) -> Term:
    """Remplace les occurrences de v par l'indice lié correspondant (corps d'abstraction)."""

    def go(s: Term, level: int) -> Term:
        if s == v:
            return Bound(level)
        if isinstance(s, App):
            return App(go(s.fun, level), go(s.arg, level))
        if isinstance(s, Abs):
            return Abs(s.bound_name, s.bound_ty, go(s.body, level + 1))
        if isinstance(s, Bound) and s.index >= level:
            return Bound(s.index + 1)
        return s

    return go(t, 0)


def mk_abs(v: Var, body: Term) -> Abs:
    """Construit %v. body en abstrayant la variable libre v."""
    return Abs(v.name, v.ty, abstract_over(body, v))


def iter_subterms(t: Term) -> Iterator[Term]:
    yield t
    if isinstance(t, App):
        yield from iter_subterms(t.fun)
        yield from iter_subterms(t.arg)
    elif isinstance(t, Abs):
        yield from iter_subterms(t.body)


def free_vars(t: Term) -> Set[Var]:
    """Variables libres nommées de t."""
    return {s for s in iter_subterms(t) if isinstance(s, Var)}


def schematic_vars(t: Term) -> Set[SchematicVar]:
    return {s for s in iter_subterms(t) if isinstance(s, SchematicVar)}


def occurs_free(v: Var, t: Term) -> bool:
    return any(s == v for s in iter_subterms(t))


def term_type_vars(t: Term) -> Set[str]:
    """Variables de type apparaissant dans t."""
    names: Set[str] = set()
    for s in iter_subterms(t):
        if isinstance(s, (Var, SchematicVar, Const)):
            names.update(iter_type_vars(s.ty))
        elif isinstance(s, Abs):
            names.update(iter_type_vars(s.bound_ty))
    return names


def term_key(t: Term) -> tuple:
    """
    Clé d'ordre total canonique : étiquette du constructeur puis comparaison
    lexicographique récursive. Utilisée pour l'ordre des hypothèses.
    """
    if isinstance(t, Bound):
        return (0, t.index)
    if isinstance(t, Var):
        return (1, t.name, type_key(t.ty))
    if isinstance(t, SchematicVar):
        return (2, t.name, type_key(t.ty))
    if isinstance(t, Const):
        return (3, t.name, type_key(t.ty))
    if isinstance(t, App):
        return (4, term_key(t.fun), term_key(t.arg))
    return (5, type_key(t.bound_ty), term_key(t.body))


# =============================================================================
# Constantes du noyau : égalité, implication, quantification universelle
# =============================================================================

EQUALS = "equals"
IMPLIES = "implies"
ALL = "all"


def mk_const_eq(ty: HolType) -> Const:
    return Const(EQUALS, fun_type(ty, fun_type(ty, BoolType)))


def mk_eq(lhs: Term, rhs: Term) -> Term:
    """Construit lhs = rhs (lhs et rhs doivent avoir le même type)."""
    return App(App(mk_const_eq(infer_type(lhs)), lhs), rhs)


def is_binop(t: Term, name: str) -> bool:
    return (
        isinstance(t, App) and isinstance(t.fun, App)
        and isinstance(t.fun.fun, Const) and t.fun.fun.name == name
    )


def dest_binop(t: Term, name: str) -> Tuple[Term, Term]:
    if not is_binop(t, name):
        raise ValueError(f"Pas une application de {name}")
    assert isinstance(t, App) and isinstance(t.fun, App)
    return t.fun.arg, t.arg


def is_eq(t: Term) -> bool:
    return is_binop(t, EQUALS)


def dest_eq(t: Term) -> Tuple[Term, Term]:
    """Retourne (lhs, rhs) d'une égalité."""
    return dest_binop(t, EQUALS)


IMPLIES_CONST = Const(IMPLIES, fun_type(BoolType, fun_type(BoolType, BoolType)))


def mk_implies(a: Term, b: Term) -> Term:
    return App(App(IMPLIES_CONST, a), b)


def is_implies(t: Term) -> bool:
    return is_binop(t, IMPLIES)


def dest_implies(t: Term) -> Tuple[Term, Term]:
    return dest_binop(t, IMPLIES)


def strip_implies(t: Term) -> Tuple[List[Term], Term]:
    """Décompose A1 --> ... --> An --> C en ([A1, ..., An], C)."""
    assums: List[Term] = []
    while is_implies(t):
        a, t = dest_implies(t)
        assums.append(a)
    return assums, t


def list_implies(assums: Sequence[Term], concl: Term) -> Term:
    result = concl
    for a in reversed(assums):
        result = mk_implies(a, result)
    return result


def mk_const_all(ty: HolType) -> Const:
    return Const(ALL, fun_type(fun_type(ty, BoolType), BoolType))


def mk_forall(v: Var, body: Term) -> Term:
    """Construit !v. body."""
    return App(mk_const_all(v.ty), mk_abs(v, body))


def is_forall(t: Term) -> bool:
    return isinstance(t, App) and isinstance(t.fun, Const) and t.fun.name == ALL


def mk_app(f: Term, *args: Term) -> Term:
    for a in args:
        f = App(f, a)
    return f


def strip_app(t: Term) -> Tuple[Term, List[Term]]:
    """Décompose f a1 ... an en (f, [a1, ..., an])."""
    args: List[Term] = []
    while isinstance(t, App):
        args.append(t.arg)
        t = t.fun
    args.reverse()
    return t, args


def schematize(t: Term, names: Mapping[str, HolType]) -> Term:
    """Transforme en variables schématiques les variables libres listées dans names."""
    if not names:
        return t

    def go(s: Term) -> Term:
        if isinstance(s, Var) and names.get(s.name) == s.ty:
            return SchematicVar(s.name, s.ty)
        if isinstance(s, App):
            return App(go(s.fun), go(s.arg))
        if isinstance(s, Abs):
            return Abs(s.bound_name, s.bound_ty, go(s.body))
        return s

    return go(t)


def is_bool(t: Term) -> bool:
    try:
        return infer_type(t) == BoolType
    except HolTypeError:
        return False
