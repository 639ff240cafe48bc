"""
Arguments des éléments de preuve : lecture et écriture selon la forme
déclarée par la règle ou la macro.

    none        (vide)
    term        x + 0 = x
    variable    x::nat
    type_inst   {'a := nat, 'b := bool}
    term_inst   {A := p & q, B := (y::nat) = 0}
    name        conjI
    name_inst   conjI  ou  conjI {B := q, 'a := nat}
    sequent     A, B |- A
"""
from typing import Any, Mapping, Optional

from kernel.hol_type import HolType
from kernel.rules import ArgKind
from kernel.signature import Signature
from kernel.term import Term

from .errors import ParseError
from .lexer import TokenKind, is_identifier
from .parser import Parser, parse_instantiation, parse_sequent, parse_term, parse_variable
from .printer import print_sequent, print_term, print_type

Context = Optional[Mapping[str, HolType]]


def parse_args(kind: ArgKind, text: str, ctx: Context, sig: Signature) -> Any:
    """
    Lit le texte des arguments d'un élément de preuve.

    Les identifiants absents du contexte sont acceptés comme variables libres
    (leur type est inféré ou donné par une annotation « (x::T) »).

    Raises:
        ParseError, TypeInferenceError
    """
    text = text or ""
    if kind == ArgKind.NONE:
        if text.strip():
            raise ParseError("aucun argument attendu", 0)
        return None
    if kind == ArgKind.TERM:
        return parse_term(text, ctx, sig, allow_free=True)
    if kind == ArgKind.VARIABLE:
        return parse_variable(text, sig)
    if kind == ArgKind.TYPE_INST:
        tyinst, inst = parse_instantiation(text, ctx, sig)
        if inst:
            raise ParseError("instanciation de types attendue", 0)
        return tyinst
    if kind == ArgKind.TERM_INST:
        tyinst, inst = parse_instantiation(text, ctx, sig)
        if tyinst:
            raise ParseError("instanciation de termes attendue", 0)
        return inst
    if kind == ArgKind.NAME:
        name = text.strip()
        if not is_identifier(name):
            raise ParseError(f"nom de théorème invalide {name!r}", 0, "identifiant")
        return name
    if kind == ArgKind.NAME_INST:
        return _parse_name_inst(text, ctx, sig)
    if kind == ArgKind.SEQUENT:
        return parse_sequent(text, ctx, sig, allow_free=True)
    raise ParseError(f"forme d'arguments inconnue {kind}")


def _parse_name_inst(text: str, ctx: Context, sig: Signature):
    parser = Parser(text, sig)
    name_token = parser.expect_ident("nom de théorème")
    if parser.peek().kind == TokenKind.EOF:
        return name_token.value, ({}, {})
    rest = text[parser.peek().position:]
    return name_token.value, parse_instantiation(rest, ctx, sig)


def print_args(kind: ArgKind, value: Any, ctx: Context = None) -> str:
    """Écrit les arguments sous la forme relue par parse_args."""
    if kind == ArgKind.NONE:
        return ""
    if kind == ArgKind.TERM:
        return print_term(value, ctx)
    if kind == ArgKind.VARIABLE:
        return f"{value.name}::{print_type(value.ty)}"
    if kind == ArgKind.TYPE_INST:
        return print_instantiation(value, {}, ctx)
    if kind == ArgKind.TERM_INST:
        return print_instantiation({}, value, ctx)
    if kind == ArgKind.NAME:
        return value
    if kind == ArgKind.NAME_INST:
        if isinstance(value, str):
            return value
        name, (tyinst, inst) = value
        if not tyinst and not inst:
            return name
        return f"{name} {print_instantiation(tyinst, inst, ctx)}"
    if kind == ArgKind.SEQUENT:
        return print_sequent(value, ctx)
    raise ValueError(f"forme d'arguments inconnue {kind}")


def print_instantiation(
    tyinst: Mapping[str, HolType],
    inst: Mapping[str, Term],
    ctx: Context = None
) -> str:
    """Écrit « {'a := T, A := t} », clés triées."""
    entries = [f"'{name} := {print_type(tyinst[name])}" for name in sorted(tyinst)]
    entries += [f"{name} := {print_term(inst[name], ctx)}" for name in sorted(inst)]
    return "{" + ", ".join(entries) + "}"

