"""
Macro nat_norm_poly : égalités polynomiales sur nat.

Un terme est lu comme polynôme sur des atomes (tout sous-terme qui n'est ni
un numéral, ni une somme, ni un produit). Forme canonique :

- monôme : atomes triés par term_key, en produit associé à droite, précédé
  du coefficient s'il vaut au moins 2 (« 3 * (x * y) ») ; monôme constant :
  le numéral seul ;
- polynôme : monômes triés par degré puis par atomes, en somme
  associée à droite ; le polynôme nul est 0.

eval compare les formes canoniques calculées en Python ; l'expansion prouve
⊢ lhs = N et ⊢ rhs = N par réécriture avec les lemmes d'associativité, de
commutativité et de distributivité de la théorie nat, l'arithmétique des
coefficients passant par des nœuds nat_arith_eval.
"""
from collections import defaultdict
from typing import Dict, List, Tuple

from conv.conversions import (
    Conv, all_conv, arg_conv, binop_conv, fun_conv, rewr_conv, rhs_of, then_conv,
)
from kernel.errors import UnknownTheorem
from kernel.hol_type import NatType
from kernel.rules import ArgKind, TheoryEnv
from kernel.sequent import Sequent
from kernel.term import Term, dest_binop, dest_eq, infer_type, is_eq, term_key
from proof import proofterm as pt_
from proof.proofterm import ProofNode

from .base import MacroError, MissingLemma, NormalizationMismatch, ProofMacro
from .numerals import PLUS, TIMES, is_numeral, is_plus, is_times, mk_numeral, mk_plus, mk_times, numeral_value, one, zero

POLY_LEMMAS = (
    "add_0_left", "add_0_right", "add_comm", "add_assoc", "add_left_comm", "add_right_comm",
    "add_add_swap", "mult_0_left", "mult_0_right", "mult_1_left", "mult_comm", "mult_assoc",
    "mult_left_comm", "mult_mult_swap", "add_mult_distrib", "left_add_mult_distrib",
)

Monomial = Tuple[Term, ...]
Poly = Dict[Monomial, int]


# =============================================================================
# Forme canonique calculée
# =============================================================================

def _sorted_atoms(atoms) -> Monomial:
    return tuple(sorted(atoms, key=term_key))


def monomial_key(mono: Monomial) -> tuple:
    """Ordre lexicographique gradué : degré, puis atomes."""
    return len(mono), tuple(term_key(a) for a in mono)


def poly_of(t: Term) -> Poly:
    """Polynôme (monôme -> coefficient non nul) représenté par t."""
    value = numeral_value(t)
    if value is not None:
        return {(): value} if value else {}
    if is_plus(t):
        a, b = dest_binop(t, PLUS)
        result: Poly = defaultdict(int, poly_of(a))
        for mono, c in poly_of(b).items():
            result[mono] += c
        return dict(result)
    if is_times(t):
        a, b = dest_binop(t, TIMES)
        pa, pb = poly_of(a), poly_of(b)
        result = defaultdict(int)
        for ma, ca in pa.items():
            for mb, cb in pb.items():
                result[_sorted_atoms(ma + mb)] += ca * cb
        return dict(result)
    return {(t,): 1}


def _product(atoms: Monomial) -> Term:
    result = atoms[-1]
    for atom in reversed(atoms[:-1]):
        result = mk_times(atom, result)
    return result


def monomial_term(mono: Monomial, coeff: int) -> Term:
    if not mono:
        return mk_numeral(coeff)
    product = _product(mono)
    return product if coeff == 1 else mk_times(mk_numeral(coeff), product)


def poly_term(poly: Poly) -> Term:
    """Terme canonique du polynôme."""
    monos = sorted(poly, key=monomial_key)
    if not monos:
        return zero
    result = monomial_term(monos[-1], poly[monos[-1]])
    for mono in reversed(monos[:-1]):
        result = mk_plus(monomial_term(mono, poly[mono]), result)
    return result


def normal_form(t: Term) -> Term:
    return poly_term(poly_of(t))


# =============================================================================
# Lecture des formes canoniques
# =============================================================================

def _strip_times(t: Term) -> List[Term]:
    factors = []
    while is_times(t):
        a, t = dest_binop(t, TIMES)
        factors.append(a)
    factors.append(t)
    return factors


def _has_coeff(m: Term) -> bool:
    return is_times(m) and is_numeral(dest_binop(m, TIMES)[0])


def _atoms(m: Term) -> Monomial:
    """Atomes d'un monôme canonique."""
    if is_numeral(m):
        return ()
    if _has_coeff(m):
        return tuple(_strip_times(dest_binop(m, TIMES)[1]))
    return tuple(_strip_times(m))


def _head(p: Term) -> Term:
    """Premier monôme d'un polynôme canonique non nul."""
    return dest_binop(p, PLUS)[0] if is_plus(p) else p


def _head_factor(x: Term) -> Term:
    return dest_binop(x, TIMES)[0] if is_times(x) else x


# =============================================================================
# Conversions de normalisation
# =============================================================================

class ArithNodeConv(Conv):
    """⊢ a op b = n par un nœud nat_arith_eval."""

    def get_proof_term(self, thy: TheoryEnv, t: Term) -> ProofNode:
        return pt_.node("nat_arith_eval", t, (), thy)


class ExplicitCoeffConv(Conv):
    """Monôme non constant -> c * X (ajoute 1 * si nécessaire)."""

    def get_proof_term(self, thy, t):
        if _has_coeff(t):
            return all_conv()(thy, t)
        return rewr_conv("mult_1_left", sym=True)(thy, t)


class DropUnitCoeffConv(Conv):
    """1 * X -> X ; autre forme inchangée."""

    def get_proof_term(self, thy, t):
        if is_times(t) and dest_binop(t, TIMES)[0] == one:
            return rewr_conv("mult_1_left")(thy, t)
        return all_conv()(thy, t)


class ProdMulConv(Conv):
    """Fusion de deux produits d'atomes triés."""

    def get_proof_term(self, thy, t):
        x, y = dest_binop(t, TIMES)
        if term_key(_head_factor(x)) <= term_key(_head_factor(y)):
            if is_times(x):
                return then_conv(rewr_conv("mult_assoc"), arg_conv(self))(thy, t)
            return all_conv()(thy, t)
        if is_times(y):
            return then_conv(rewr_conv("mult_left_comm"), arg_conv(self))(thy, t)
        return rewr_conv("mult_comm")(thy, t)


class MonoAddConv(Conv):
    """Somme de deux monômes canoniques de mêmes atomes."""

    def get_proof_term(self, thy, t):
        m, n = dest_binop(t, PLUS)
        if is_numeral(m):
            return ArithNodeConv()(thy, t)
        return then_conv(
            binop_conv(ExplicitCoeffConv()),
            then_conv(rewr_conv("add_mult_distrib", sym=True), fun_conv(arg_conv(ArithNodeConv()))),
        )(thy, t)


class MonoMulConv(Conv):
    """Produit de deux monômes canoniques."""

    def get_proof_term(self, thy, t):
        m, n = dest_binop(t, TIMES)
        if is_numeral(m) and is_numeral(n):
            return ArithNodeConv()(thy, t)
        if is_numeral(n):
            return then_conv(rewr_conv("mult_comm"), self)(thy, t)
        if is_numeral(m):
            steps = [
                arg_conv(ExplicitCoeffConv()),
                rewr_conv("mult_assoc", sym=True),
                fun_conv(arg_conv(ArithNodeConv())),
            ]
        else:
            steps = [
                binop_conv(ExplicitCoeffConv()),
                rewr_conv("mult_mult_swap"),
                fun_conv(arg_conv(ArithNodeConv())),
                arg_conv(ProdMulConv()),
            ]
        cv = DropUnitCoeffConv()
        for step in reversed(steps):
            cv = then_conv(step, cv)
        return cv(thy, t)


class PolyAddConv(Conv):
    """Somme de deux polynômes canoniques (fusion triée)."""

    def get_proof_term(self, thy, t):
        p, q = dest_binop(t, PLUS)
        if p == zero:
            return rewr_conv("add_0_left")(thy, t)
        if q == zero:
            return rewr_conv("add_0_right")(thy, t)
        kp = monomial_key(_atoms(_head(p)))
        kq = monomial_key(_atoms(_head(q)))
        if kp < kq:
            if is_plus(p):
                return then_conv(rewr_conv("add_assoc"), arg_conv(self))(thy, t)
            return all_conv()(thy, t)
        if kp > kq:
            if is_plus(q):
                return then_conv(rewr_conv("add_left_comm"), arg_conv(self))(thy, t)
            return rewr_conv("add_comm")(thy, t)
        mono_add = fun_conv(arg_conv(MonoAddConv()))
        if is_plus(p) and is_plus(q):
            return then_conv(
                rewr_conv("add_add_swap"), then_conv(mono_add, arg_conv(self))
            )(thy, t)
        if is_plus(q):
            return then_conv(rewr_conv("add_assoc", sym=True), mono_add)(thy, t)
        if is_plus(p):
            return then_conv(rewr_conv("add_right_comm"), mono_add)(thy, t)
        return MonoAddConv()(thy, t)


class MonoPolyMulConv(Conv):
    """Monôme canonique fois polynôme canonique non nul."""

    def get_proof_term(self, thy, t):
        _, q = dest_binop(t, TIMES)
        if is_plus(q):
            return then_conv(
                rewr_conv("left_add_mult_distrib"),
                then_conv(binop_conv_pair(MonoMulConv(), self), PolyAddConv()),
            )(thy, t)
        return MonoMulConv()(thy, t)


class PolyMulConv(Conv):
    """Produit de deux polynômes canoniques."""

    def get_proof_term(self, thy, t):
        p, q = dest_binop(t, TIMES)
        if p == zero:
            return rewr_conv("mult_0_left")(thy, t)
        if q == zero:
            return rewr_conv("mult_0_right")(thy, t)
        if is_plus(p):
            return then_conv(
                rewr_conv("add_mult_distrib"),
                then_conv(binop_conv_pair(MonoPolyMulConv(), self), PolyAddConv()),
            )(thy, t)
        return MonoPolyMulConv()(thy, t)


class _BinopPairConv(Conv):
    """Applique cv1 au premier opérande et cv2 au second."""

    def __init__(self, cv1: Conv, cv2: Conv):
        self.cv1 = cv1
        self.cv2 = cv2

    def get_proof_term(self, thy, t):
        return then_conv(fun_conv(arg_conv(self.cv1)), arg_conv(self.cv2))(thy, t)


def binop_conv_pair(cv1: Conv, cv2: Conv) -> Conv:
    return _BinopPairConv(cv1, cv2)


class PolyNormConv(Conv):
    """⊢ t = normal_form(t)."""

    def get_proof_term(self, thy, t):
        if is_plus(t):
            return then_conv(binop_conv(self), PolyAddConv())(thy, t)
        if is_times(t):
            return then_conv(binop_conv(self), PolyMulConv())(thy, t)
        return all_conv()(thy, t)


def poly_norm_conv() -> Conv:
    return PolyNormConv()


# =============================================================================
# Macro
# =============================================================================

class NatNormPolyMacro(ProofMacro):
    """Prouve lhs = rhs quand les deux membres ont la même forme polynomiale canonique."""

    name = "nat_norm_poly"
    level = 2
    arg_kind = ArgKind.TERM

    def _sides(self, t: Term) -> Tuple[Term, Term]:
        if not is_eq(t) or infer_type(dest_eq(t)[0]) != NatType:
            raise MacroError("nat_norm_poly: égalité entre termes de type nat attendue")
        return dest_eq(t)

    def eval(self, thy, args, prevs):
        lhs, rhs = self._sides(args)
        nl, nr = normal_form(lhs), normal_form(rhs)
        if nl != nr:
            from syntax.printer import print_term

            raise NormalizationMismatch(print_term(nl), print_term(nr))
        return Sequent(frozenset(), args)

    def get_proof_term(self, thy, args, prevs):
        self.eval(thy, args, [])
        lhs, rhs = self._sides(args)
        try:
            pt_lhs = poly_norm_conv()(thy, lhs)
            pt_rhs = poly_norm_conv()(thy, rhs)
        except UnknownTheorem as e:
            raise MissingLemma(e.name) from e
        if rhs_of(pt_lhs) != rhs_of(pt_rhs):
            from syntax.printer import print_term

            raise NormalizationMismatch(print_term(rhs_of(pt_lhs)), print_term(rhs_of(pt_rhs)))
        if pt_rhs.rule == "reflexive":
            return pt_lhs
        if pt_lhs.rule == "reflexive":
            return pt_.symmetric(pt_rhs)
        return pt_.transitive(pt_lhs, pt_.symmetric(pt_rhs))
