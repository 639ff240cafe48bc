"""
Élaboration des pré-termes : résolution des noms et inférence de types.

Les inconnues de type sont des variables de type nommées « ?N » ; les
variables de type écrites par l'utilisateur ('a) sont rigides. La
résolution d'un identifiant suit l'ordre : variable liée, contexte,
constante de la signature, variable libre (si allow_free).
"""
from typing import Dict, Mapping, Optional, Sequence, Tuple

from kernel.hol_type import (
    BoolType, HolType, NatType, TypeApplication, TypeVariable, fun_type, subst_type_in_type,
    type_vars,
)
from kernel.signature import Signature
from kernel.term import Abs, App, Bound, Const, SchematicVar, Term, Var, term_type_vars
from macros.numerals import NUMERAL_CONSTANTS, mk_numeral

from .errors import ParseError, TypeInferenceError
from .parser import PAbs, PApp, PConst, PIdent, PNumeral, PreTerm, PSchematic, PTyped


def _is_unknown(ty: HolType) -> bool:
    return isinstance(ty, TypeVariable) and ty.name.startswith("?")


class Elaborator:
    """Transforme des pré-termes en termes du noyau bien typés."""

    def __init__(
        self,
        sig: Signature,
        ctx: Optional[Mapping[str, HolType]] = None,
        allow_free: bool = False
    ):
        self.sig = sig
        self.ctx: Mapping[str, HolType] = ctx or {}
        self.allow_free = allow_free
        self.subst: Dict[str, HolType] = {}
        self.free_types: Dict[str, HolType] = {}
        self.schematic_types: Dict[str, HolType] = {}
        self._counter = 0

    # -------------------------------------------------------------------------
    # Unification
    # -------------------------------------------------------------------------

    def fresh(self) -> TypeVariable:
        self._counter += 1
        return TypeVariable(f"?{self._counter}")

    def _walk(self, ty: HolType) -> HolType:
        while isinstance(ty, TypeVariable) and ty.name in self.subst:
            ty = self.subst[ty.name]
        return ty

    def resolve(self, ty: HolType) -> HolType:
        ty = self._walk(ty)
        if isinstance(ty, TypeApplication) and ty.args:
            return TypeApplication(ty.constructor, tuple(self.resolve(a) for a in ty.args))
        return ty

    def unify(self, a: HolType, b: HolType, position: Optional[int] = None) -> None:
        a, b = self._walk(a), self._walk(b)
        if a == b:
            return
        if _is_unknown(a):
            self._bind(a, b, position)
        elif _is_unknown(b):
            self._bind(b, a, position)
        elif isinstance(a, TypeApplication) and isinstance(b, TypeApplication) \
                and a.constructor == b.constructor and len(a.args) == len(b.args):
            for x, y in zip(a.args, b.args):
                self.unify(x, y, position)
        else:
            raise TypeInferenceError(
                f"types incompatibles {self.resolve(a)} et {self.resolve(b)}", position
            )

    def _bind(self, var: HolType, ty: HolType, position: Optional[int]) -> None:
        assert isinstance(var, TypeVariable)
        if var.name in type_vars(self.resolve(ty)):
            raise TypeInferenceError("type récursif (occurs check)", position)
        self.subst[var.name] = ty

    # -------------------------------------------------------------------------
    # Élaboration
    # -------------------------------------------------------------------------

    def elaborate(
        self,
        pre: PreTerm,
        bound: Sequence[Tuple[str, HolType]] = ()
    ) -> Tuple[Term, HolType]:
        """Retourne le terme (types encore partiels) et son type."""
        if isinstance(pre, PIdent):
            return self._identifier(pre, bound)
        if isinstance(pre, PSchematic):
            return self._schematic(pre)
        if isinstance(pre, PConst):
            return self._constant(pre.name, pre.position)
        if isinstance(pre, PNumeral):
            return self._numeral(pre)
        if isinstance(pre, PApp):
            fun, fun_ty = self.elaborate(pre.fun, bound)
            arg, arg_ty = self.elaborate(pre.arg, bound)
            result = self.fresh()
            self.unify(fun_ty, fun_type(arg_ty, result), _position(pre))
            return App(fun, arg), result
        if isinstance(pre, PAbs):
            var_ty = pre.ty if pre.ty is not None else self.fresh()
            body, body_ty = self.elaborate(pre.body, [(pre.name, var_ty), *bound])
            return Abs(pre.name, var_ty, body), fun_type(var_ty, body_ty)
        term, ty = self.elaborate(pre.term, bound)
        self.unify(ty, pre.ty, pre.position)
        return term, ty

    def elaborate_bool(self, pre: PreTerm) -> Term:
        term, ty = self.elaborate(pre)
        self.unify(ty, BoolType, _position(pre))
        return term

    def _identifier(self, pre: PIdent, bound: Sequence[Tuple[str, HolType]]) -> Tuple[Term, HolType]:
        for index, (name, ty) in enumerate(bound):
            if name == pre.name:
                return Bound(index), ty
        if pre.name in self.ctx:
            ty = self.ctx[pre.name]
            return Var(pre.name, ty), ty
        if pre.name in self.sig.constants:
            return self._constant(pre.name, pre.position)
        if self.allow_free:
            ty = self.free_types.setdefault(pre.name, self.fresh())
            return Var(pre.name, ty), ty
        raise ParseError(f"identifiant inconnu {pre.name}", pre.position, "variable déclarée ou constante")

    def _schematic(self, pre: PSchematic) -> Tuple[Term, HolType]:
        for key in ("?" + pre.name, pre.name):
            if key in self.ctx:
                ty = self.ctx[key]
                return SchematicVar(pre.name, ty), ty
        if self.allow_free:
            ty = self.schematic_types.setdefault(pre.name, self.fresh())
            return SchematicVar(pre.name, ty), ty
        raise ParseError(f"variable schématique inconnue ?{pre.name}", pre.position)

    def _constant(self, name: str, position: int) -> Tuple[Term, HolType]:
        declared = self.sig.constants.get(name)
        if declared is None:
            raise ParseError(f"constante non déclarée {name}", position)
        renaming = {v: self.fresh() for v in type_vars(declared)}
        ty = subst_type_in_type(renaming, declared)
        return Const(name, ty), ty

    def _numeral(self, pre: PNumeral) -> Tuple[Term, HolType]:
        if any(name not in self.sig.constants for name in NUMERAL_CONSTANTS):
            raise ParseError("numéral sans les constantes de la théorie nat", pre.position)
        return mk_numeral(pre.value), NatType

    # -------------------------------------------------------------------------
    # Finalisation
    # -------------------------------------------------------------------------

    def finish(self, t: Term) -> Term:
        """
        Applique la substitution de types obtenue.

        Raises:
            TypeInferenceError: il reste une inconnue de type (terme ambigu)
        """
        result = self._apply(t)
        if any(name.startswith("?") for name in term_type_vars(result)):
            raise TypeInferenceError("type ambigu, annotation requise")
        return result

    def _apply(self, t: Term) -> Term:
        if isinstance(t, Var):
            return Var(t.name, self.resolve(t.ty))
        if isinstance(t, SchematicVar):
            return SchematicVar(t.name, self.resolve(t.ty))
        if isinstance(t, Const):
            return Const(t.name, self.resolve(t.ty))
        if isinstance(t, App):
            return App(self._apply(t.fun), self._apply(t.arg))
        if isinstance(t, Abs):
            return Abs(t.bound_name, self.resolve(t.bound_ty), self._apply(t.body))
        return t


def _position(pre: PreTerm) -> Optional[int]:
    while isinstance(pre, PApp):
        pre = pre.fun
    return getattr(pre, "position", None)

