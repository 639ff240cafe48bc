"""
Macro nat_arith_eval : évaluation des expressions closes sur les numéraux
binaires avec + et *.

eval calcule la valeur avec les entiers natifs ; l'expansion prouve le même
résultat bit par bit, en réécrivant avec les lemmes de la théorie nat.
"""
from conv.conversions import Conv, all_conv, arg_conv, binop_conv, fun_conv, rewr_conv, then_conv
from kernel.errors import UnknownTheorem
from kernel.hol_type import NatType
from kernel.rules import ArgKind, TheoryEnv
from kernel.sequent import Sequent
from kernel.term import App, Term, dest_binop, dest_eq, infer_type, is_eq, mk_eq
from proof import proofterm as pt_
from proof.proofterm import ProofNode

from .base import MissingLemma, NotClosedArithmetic, ProofMacro
from .numerals import PLUS, TIMES, bit0, is_numeral, is_plus, is_times, mk_numeral, numeral_value, one, zero

# Lemmes de la théorie nat utilisés par l'expansion
ADD_LEMMAS = (
    "add_0_left", "add_0_right", "add_one_one", "add_one_bit0", "add_bit0_one",
    "add_one_bit1", "add_bit1_one", "add_bit0_bit0", "add_bit0_bit1", "add_bit1_bit0",
    "add_bit1_bit1",
)
MULT_LEMMAS = (
    "mult_0_left", "mult_0_right", "mult_1_left", "mult_1_right", "mult_bit0_left",
    "mult_bit1_left",
)


def _text(t: Term) -> str:
    from syntax.printer import print_term

    return print_term(t)


def arith_value(t: Term) -> int:
    """
    Valeur d'une expression close sur les numéraux, + et *.

    Raises:
        NotClosedArithmetic: autre forme de terme
    """
    value = numeral_value(t)
    if value is not None:
        return value
    if is_plus(t):
        a, b = dest_binop(t, PLUS)
        return arith_value(a) + arith_value(b)
    if is_times(t):
        a, b = dest_binop(t, TIMES)
        return arith_value(a) * arith_value(b)
    raise NotClosedArithmetic(_text(t))


def _bit(t: Term) -> str:
    """« bit0 » ou « bit1 » pour un numéral strictement supérieur à 1."""
    assert isinstance(t, App)
    return "bit0" if t.fun == bit0 else "bit1"


# =============================================================================
# Conversions
# =============================================================================

class NatAddConv(Conv):
    """⊢ a + b = c pour a, b numéraux canoniques ; c est canonique."""

    def get_proof_term(self, thy: TheoryEnv, t: Term) -> ProofNode:
        a, b = dest_binop(t, PLUS)
        if a == zero:
            return rewr_conv("add_0_left")(thy, t)
        if b == zero:
            return rewr_conv("add_0_right")(thy, t)
        if a == one and b == one:
            return rewr_conv("add_one_one")(thy, t)
        if a == one:
            if _bit(b) == "bit0":
                return rewr_conv("add_one_bit0")(thy, t)
            return then_conv(rewr_conv("add_one_bit1"), arg_conv(self))(thy, t)
        if b == one:
            if _bit(a) == "bit0":
                return rewr_conv("add_bit0_one")(thy, t)
            return then_conv(rewr_conv("add_bit1_one"), arg_conv(self))(thy, t)
        lemma = f"add_{_bit(a)}_{_bit(b)}"
        if lemma == "add_bit1_bit1":
            # bit0 ((m + n) + 1) : la retenue s'ajoute après la somme
            carry = then_conv(fun_conv(arg_conv(self)), self)
            return then_conv(rewr_conv(lemma), arg_conv(carry))(thy, t)
        return then_conv(rewr_conv(lemma), arg_conv(self))(thy, t)


class NatMultConv(Conv):
    """⊢ a * b = c pour a, b numéraux canoniques ; c est canonique."""

    def get_proof_term(self, thy: TheoryEnv, t: Term) -> ProofNode:
        a, b = dest_binop(t, TIMES)
        if a == zero:
            return rewr_conv("mult_0_left")(thy, t)
        if b == zero:
            return rewr_conv("mult_0_right")(thy, t)
        if a == one:
            return rewr_conv("mult_1_left")(thy, t)
        if b == one:
            return rewr_conv("mult_1_right")(thy, t)
        if _bit(a) == "bit0":
            return then_conv(rewr_conv("mult_bit0_left"), arg_conv(self))(thy, t)
        # bit0 (m * n) + n
        product = fun_conv(arg_conv(arg_conv(self)))
        return then_conv(rewr_conv("mult_bit1_left"), then_conv(product, NatAddConv()))(thy, t)


class NatEvalConv(Conv):
    """⊢ t = n pour une expression arithmétique close t."""

    def get_proof_term(self, thy: TheoryEnv, t: Term) -> ProofNode:
        if is_numeral(t):
            return all_conv()(thy, t)
        if is_plus(t):
            return then_conv(binop_conv(self), NatAddConv())(thy, t)
        if is_times(t):
            return then_conv(binop_conv(self), NatMultConv())(thy, t)
        raise NotClosedArithmetic(_text(t))


def nat_eval_conv() -> Conv:
    return NatEvalConv()


# =============================================================================
# Macro
# =============================================================================

def _is_nat_eq(t: Term) -> bool:
    return is_eq(t) and infer_type(dest_eq(t)[0]) == NatType


class NatArithEvalMacro(ProofMacro):
    """
    Évalue une expression arithmétique close.

    Argument t de type nat : conclusion ⊢ t = n. Argument a = b (deux
    expressions closes de même valeur) : conclusion ⊢ a = b.
    """

    name = "nat_arith_eval"
    level = 1
    arg_kind = ArgKind.TERM

    def eval(self, thy, args, prevs):
        t = args
        if _is_nat_eq(t):
            lhs, rhs = dest_eq(t)
            if arith_value(lhs) != arith_value(rhs):
                raise NotClosedArithmetic(f"{_text(t)} (égalité fausse)")
            return Sequent(frozenset(), t)
        if infer_type(t) != NatType:
            raise NotClosedArithmetic(_text(t))
        return Sequent(frozenset(), mk_eq(t, mk_numeral(arith_value(t))))

    def get_proof_term(self, thy, args, prevs):
        self.eval(thy, args, [])
        t = args
        try:
            if not _is_nat_eq(t):
                return nat_eval_conv()(thy, t)
            lhs, rhs = dest_eq(t)
            pt_lhs = nat_eval_conv()(thy, lhs)
            if is_numeral(rhs):
                return pt_lhs
            return pt_.transitive(pt_lhs, pt_.symmetric(nat_eval_conv()(thy, rhs)))
        except UnknownTheorem as e:
            raise MissingLemma(e.name) from e
