"""
Numéraux binaires sur nat.

Le numéral n est construit à partir de one par les constructeurs bit0/bit1,
bit de poids faible à l'extérieur : 6 = bit0 (bit1 one). Zéro est la
constante zero. Un numéral est canonique s'il ne contient ni bit0 zero ni
bit1 zero.
"""
from typing import Optional

from kernel.hol_type import NatType, fun_type
from kernel.term import App, Const, Term, is_binop, mk_app

ZERO = "zero"
ONE = "one"
BIT0 = "bit0"
BIT1 = "bit1"
PLUS = "plus"
TIMES = "times"

NUMERAL_CONSTANTS = (ZERO, ONE, BIT0, BIT1)

_NAT_UNARY = fun_type(NatType, NatType)
_NAT_BINARY = fun_type(NatType, _NAT_UNARY)

zero = Const(ZERO, NatType)
one = Const(ONE, NatType)
bit0 = Const(BIT0, _NAT_UNARY)
bit1 = Const(BIT1, _NAT_UNARY)
plus = Const(PLUS, _NAT_BINARY)
times = Const(TIMES, _NAT_BINARY)


def mk_numeral(n: int) -> Term:
    """Numéral canonique de l'entier naturel n."""
    if n < 0:
        raise ValueError(f"Pas un entier naturel: {n}")
    if n == 0:
        return zero
    if n == 1:
        return one
    return App(bit1 if n % 2 else bit0, mk_numeral(n // 2))


def _positive_value(t: Term) -> Optional[int]:
    if t == one:
        return 1
    if isinstance(t, App) and t.fun in (bit0, bit1):
        inner = _positive_value(t.arg)
        if inner is None:
            return None
        return 2 * inner + (1 if t.fun == bit1 else 0)
    return None


def numeral_value(t: Term) -> Optional[int]:
    """Valeur d'un numéral canonique, None sinon."""
    if t == zero:
        return 0
    return _positive_value(t)


def is_numeral(t: Term) -> bool:
    return numeral_value(t) is not None


def dest_numeral(t: Term) -> int:
    value = numeral_value(t)
    if value is None:
        raise ValueError("Pas un numéral canonique")
    return value


def mk_plus(a: Term, b: Term) -> Term:
    return mk_app(plus, a, b)


def mk_times(a: Term, b: Term) -> Term:
    return mk_app(times, a, b)


def is_plus(t: Term) -> bool:
    return is_binop(t, PLUS) and isinstance(t, App) and t.fun.fun == plus  # type: ignore[union-attr]


def is_times(t: Term) -> bool:
    return is_binop(t, TIMES) and isinstance(t, App) and t.fun.fun == times  # type: ignore[union-attr]
