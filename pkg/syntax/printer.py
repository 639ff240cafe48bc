"""
Affichage des types, termes et séquents avec un minimum de parenthèses.

L'affichage est l'inverse de l'analyse : parse_term(print_term(t)) == t.
Un lieur n'est écrit sans parenthèses qu'en position ouverte à droite, et
le type de sa variable est toujours annoté.
"""
from typing import List, Mapping, Optional

from kernel.hol_type import HolType, TypeVariable, dest_fun, is_fun
from kernel.sequent import Sequent
from kernel.term import ALL, Abs, App, Bound, Const, SchematicVar, Term, Var, iter_subterms, strip_app
from macros.numerals import numeral_value

from .lexer import is_identifier
from .parser import APP_PRECEDENCE, BINARY_OPERATORS, EXISTS, INFIX_SYMBOLS, NEG, NEG_PRECEDENCE

ATOM_PRECEDENCE = 1000

_QUANTIFIER_SYMBOLS = {ALL: "!", EXISTS: "?"}


def print_type(ty: HolType) -> str:
    """Affiche un type ; => est associatif à droite, les constructeurs sont postfixes."""
    if isinstance(ty, TypeVariable):
        return f"'{ty.name}"
    if is_fun(ty):
        domain, codomain = dest_fun(ty)
        left = print_type(domain)
        if is_fun(domain):
            left = f"({left})"
        return f"{left} => {print_type(codomain)}"
    if not ty.args:
        return ty.constructor
    if len(ty.args) == 1:
        arg = print_type(ty.args[0])
        if is_fun(ty.args[0]):
            arg = f"({arg})"
        return f"{arg} {ty.constructor}"
    return f"({', '.join(print_type(a) for a in ty.args)}) {ty.constructor}"


class _TermPrinter:
    def __init__(self, ctx: Optional[Mapping[str, HolType]]):
        self.ctx = ctx

    def render(self, t: Term, bound: List[str], required: int, tail_open: bool) -> str:
        value = numeral_value(t)
        if value is not None:
            return str(value)
        if isinstance(t, Bound):
            return bound[t.index]
        if isinstance(t, Var):
            return self._free(t.name, t.ty, (t.name,))
        if isinstance(t, SchematicVar):
            return self._free("?" + t.name, t.ty, ("?" + t.name, t.name))
        if isinstance(t, Const):
            return t.name
        if isinstance(t, Abs):
            return self._binder("%", t, bound, tail_open)

        head, args = strip_app(t)
        if isinstance(head, Const):
            if head.name in _QUANTIFIER_SYMBOLS and len(args) == 1 and isinstance(args[0], Abs):
                return self._binder(_QUANTIFIER_SYMBOLS[head.name], args[0], bound, tail_open)
            if head.name in INFIX_SYMBOLS and len(args) == 2:
                return self._infix(INFIX_SYMBOLS[head.name], args[0], args[1], bound, required, tail_open)
            if head.name == NEG and len(args) == 1:
                wrap = NEG_PRECEDENCE < required
                operand = self.render(args[0], bound, NEG_PRECEDENCE, wrap or tail_open)
                return _wrap(f"~{operand}", wrap)

        assert isinstance(t, App)
        wrap = APP_PRECEDENCE < required
        fun = self.render(t.fun, bound, APP_PRECEDENCE, False)
        arg = self.render(t.arg, bound, APP_PRECEDENCE + 1, wrap or tail_open)
        return _wrap(f"{fun} {arg}", wrap)

    def _free(self, display: str, ty: HolType, keys: tuple) -> str:
        if self.ctx is None:
            return display
        for key in keys:
            if key in self.ctx:
                if self.ctx[key] == ty:
                    return display
                break
        return f"({display}::{print_type(ty)})"

    def _infix(
        self,
        symbol: str,
        left: Term,
        right: Term,
        bound: List[str],
        required: int,
        tail_open: bool
    ) -> str:
        op = BINARY_OPERATORS[symbol]
        prec = op.precedence
        left_req = prec if op.assoc == "left" else prec + 1
        right_req = prec if op.assoc == "right" else prec + 1
        wrap = prec < required
        text = (
            f"{self.render(left, bound, left_req, False)} {symbol} "
            f"{self.render(right, bound, right_req, wrap or tail_open)}"
        )
        return _wrap(text, wrap)

    def _binder(self, symbol: str, abs_: Abs, bound: List[str], tail_open: bool) -> str:
        name = _bound_name(abs_, bound)
        body = self.render(abs_.body, [name, *bound], 0, True)
        return _wrap(f"{symbol}{name}::{print_type(abs_.bound_ty)}. {body}", not tail_open)


def _wrap(text: str, wrap: bool) -> str:
    return f"({text})" if wrap else text


def _bound_name(abs_: Abs, bound: List[str]) -> str:
    """Nom d'affichage de la variable liée, suffixé de primes en cas de conflit."""
    name = abs_.bound_name if is_identifier(abs_.bound_name) else "x"
    avoid = set(bound)
    for s in iter_subterms(abs_.body):
        if isinstance(s, (Var, Const)):
            avoid.add(s.name)
    while name in avoid:
        name += "'"
    return name


def print_term(t: Term, ctx: Optional[Mapping[str, HolType]] = None) -> str:
    """
    Affiche un terme.

    Args:
        t: Terme bien typé
        ctx: Si fourni, les variables libres absentes du contexte (ou d'un autre type)
            sont annotées « (x::T) » pour que la relecture retrouve leur type

    Returns:
        Le texte, relisible par parse_term
    """
    return _TermPrinter(ctx).render(t, [], 0, True)


def print_sequent(seq: Sequent, ctx: Optional[Mapping[str, HolType]] = None) -> str:
    """Affiche « A1, A2 |- C », hypothèses dans l'ordre canonique."""
    hyps = ", ".join(print_term(h, ctx) for h in seq.sorted_hyps())
    prop = print_term(seq.prop, ctx)
    return f"{hyps} |- {prop}" if hyps else f"|- {prop}"
