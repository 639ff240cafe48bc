"""
Types simples de la logique d'ordre supérieur.

Un type est soit une variable de type ('a), soit l'application d'un
constructeur déclaré à une liste d'arguments (bool, nat, 'a list, fun).
"""
from dataclasses import dataclass
from typing import Dict, Iterator, Mapping, Set, Tuple, Union


@dataclass(frozen=True)
class TypeVariable:
    """Variable de type, nommée sans l'apostrophe de la syntaxe concrète."""
    name: str

    def __str__(self) -> str:
        return f"'{self.name}"


@dataclass(frozen=True)
class TypeApplication:
    """Constructeur de type appliqué à ses arguments."""
    constructor: str
    args: Tuple["HolType", ...] = ()

    def __str__(self) -> str:
        from syntax.printer import print_type
        return print_type(self)


HolType = Union[TypeVariable, TypeApplication]

# Instanciation de types : nom de variable de type -> type
TypeInstantiation = Dict[str, HolType]

FUN = "fun"

BoolType = TypeApplication("bool")
NatType = TypeApplication("nat")


def fun_type(domain: HolType, codomain: HolType) -> TypeApplication:
    """Construit le type des fonctions domain => codomain."""
    return TypeApplication(FUN, (domain, codomain))


def list_fun_type(domains: Tuple[HolType, ...], codomain: HolType) -> HolType:
    """Construit T1 => T2 => ... => codomain."""
    result = codomain
    for ty in reversed(domains):
        result = fun_type(ty, result)
    return result


def is_fun(ty: HolType) -> bool:
    return isinstance(ty, TypeApplication) and ty.constructor == FUN and len(ty.args) == 2


def dest_fun(ty: HolType) -> Tuple[HolType, HolType]:
    """Retourne (domaine, codomaine) d'un type fonctionnel."""
    if not is_fun(ty):
        raise ValueError(f"Pas un type fonctionnel: {ty}")
    assert isinstance(ty, TypeApplication)
    return ty.args[0], ty.args[1]


def subst_type_in_type(tyinst: Mapping[str, HolType], ty: HolType) -> HolType:
    """Applique une instanciation de types à un type."""
    if not tyinst:
        return ty
    if isinstance(ty, TypeVariable):
        return tyinst.get(ty.name, ty)
    if not ty.args:
        return ty
    return TypeApplication(ty.constructor, tuple(subst_type_in_type(tyinst, a) for a in ty.args))


def iter_type_vars(ty: HolType) -> Iterator[str]:
    if isinstance(ty, TypeVariable):
        yield ty.name
    else:
        for arg in ty.args:
            yield from iter_type_vars(arg)


def type_vars(ty: HolType) -> Set[str]:
    """Ensemble des noms de variables de type apparaissant dans ty."""
    return set(iter_type_vars(ty))


def type_key(ty: HolType) -> tuple:
    """Clé d'ordre total sur les types (variables avant applications)."""
    if isinstance(ty, TypeVariable):
        return (0, ty.name)
    return (1, ty.constructor, tuple(type_key(a) for a in ty.args))
