"""
Signature : constructeurs de types (avec arité) et constantes (avec type déclaré).
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .errors import HolTypeError, SignatureError
from .hol_type import (
    BoolType, HolType, TypeApplication, TypeInstantiation, TypeVariable, fun_type,
)
from .term import ALL, EQUALS, IMPLIES, Abs, App, Bound, Const, Term, Var, SchematicVar


@dataclass
class Signature:
    """Constructeurs de types et constantes déclarés."""
    type_constructors: Dict[str, int] = field(default_factory=dict)
    constants: Dict[str, HolType] = field(default_factory=dict)

    def add_type(self, name: str, arity: int) -> None:
        """Déclare un constructeur de type ; une redéclaration identique est tolérée."""
        previous = self.type_constructors.get(name)
        if previous is not None and previous != arity:
            raise SignatureError(
                f"Constructeur {name} déjà déclaré avec l'arité {previous} (nouvelle: {arity})"
            )
        self.type_constructors[name] = arity

    def add_const(self, name: str, ty: HolType) -> None:
        """Déclare une constante ; une redéclaration identique est tolérée."""
        self.check_type(ty)
        previous = self.constants.get(name)
        if previous is not None and previous != ty:
            raise SignatureError(f"Constante {name} déjà déclarée avec un autre type")
        self.constants[name] = ty

    def merge(self, other: "Signature") -> None:
        """Ajoute les déclarations d'une autre signature (théorie importée)."""
        for name, arity in other.type_constructors.items():
            self.add_type(name, arity)
        for name, ty in other.constants.items():
            self.add_const(name, ty)

    def copy(self) -> "Signature":
        return Signature(dict(self.type_constructors), dict(self.constants))

    def check_type(self, ty: HolType) -> None:
        """Vérifie que chaque constructeur est déclaré avec la bonne arité."""
        if isinstance(ty, TypeVariable):
            return
        arity = self.type_constructors.get(ty.constructor)
        if arity is None:
            raise SignatureError(f"Constructeur de type inconnu: {ty.constructor}")
        if arity != len(ty.args):
            raise SignatureError(
                f"Constructeur {ty.constructor} d'arité {arity} appliqué à {len(ty.args)} arguments"
            )
        for arg in ty.args:
            self.check_type(arg)


def base_signature() -> Signature:
    """Signature minimale requise par les règles primitives."""
    sig = Signature()
    sig.add_type("bool", 0)
    sig.add_type("fun", 2)
    alpha = TypeVariable("a")
    sig.add_const(EQUALS, fun_type(alpha, fun_type(alpha, BoolType)))
    sig.add_const(IMPLIES, fun_type(BoolType, fun_type(BoolType, BoolType)))
    sig.add_const(ALL, fun_type(fun_type(alpha, BoolType), BoolType))
    return sig


def match_type(
    pattern: HolType,
    ty: HolType,
    tyinst: Optional[TypeInstantiation] = None
) -> Optional[TypeInstantiation]:
    """
    Filtrage de types : cherche tyinst tel que pattern[tyinst] == ty.

    Returns:
        L'instanciation étendue, ou None en cas d'échec
    """
    inst: TypeInstantiation = dict(tyinst or {})
    stack = [(pattern, ty)]
    while stack:
        p, t = stack.pop()
        if isinstance(p, TypeVariable):
            bound = inst.get(p.name)
            if bound is None:
                inst[p.name] = t
            elif bound != t:
                return None
        elif isinstance(t, TypeApplication) and p.constructor == t.constructor \
                and len(p.args) == len(t.args):
            stack.extend(zip(p.args, t.args))
        else:
            return None
    return inst


def type_of(t: Term, sig: Signature) -> HolType:
    """
    Calcule le type de t en vérifiant les constantes contre la signature.

    Raises:
        HolTypeError: application mal typée, constante inconnue, indice hors bornes
    """
    path: List[str] = []

    def go(s: Term, bound: List[HolType]) -> HolType:
        if isinstance(s, (Var, SchematicVar)):
            _check_type(s.ty)
            return s.ty
        if isinstance(s, Const):
            declared = sig.constants.get(s.name)
            if declared is None:
                raise HolTypeError(f"constante inconnue {s.name}", path)
            if match_type(declared, s.ty) is None:
                raise HolTypeError(f"type incompatible pour la constante {s.name}", path)
            return s.ty
        if isinstance(s, Bound):
            if s.index >= len(bound):
                raise HolTypeError(f"indice lié {s.index} hors de portée", path)
            return bound[s.index]
        if isinstance(s, Abs):
            _check_type(s.bound_ty)
            path.append("body")
            body_ty = go(s.body, [s.bound_ty] + bound)
            path.pop()
            return fun_type(s.bound_ty, body_ty)
        path.append("fun")
        fun_ty = go(s.fun, bound)
        path[-1] = "arg"
        arg_ty = go(s.arg, bound)
        path.pop()
        if not (isinstance(fun_ty, TypeApplication) and fun_ty.constructor == "fun"):
            raise HolTypeError("application d'un terme de type non fonctionnel", path)
        if fun_ty.args[0] != arg_ty:
            raise HolTypeError("type d'argument incompatible", path)
        return fun_ty.args[1]

    def _check_type(ty: HolType) -> None:
        try:
            sig.check_type(ty)
        except SignatureError as e:
            raise HolTypeError(str(e), path) from e

    return go(t, [])

