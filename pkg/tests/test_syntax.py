"""
Tests de la syntaxe concrète : précédences, erreurs, arguments et relecture.
"""
import random

import pytest

from kernel.hol_type import BoolType, NatType, TypeVariable, fun_type
from kernel.rules import ArgKind
from kernel.sequent import Sequent
from kernel.term import Abs, App, Bound, Const, SchematicVar, Var, mk_abs, mk_eq, mk_forall, mk_implies
from macros.numerals import mk_numeral, plus, times
from syntax import (
    ParseError, TypeInferenceError, parse_args, parse_sequent, parse_term, parse_type, print_args,
    print_sequent, print_term, print_type,
)
from syntax.lexer import TokenKind, tokenize

BOOL2 = fun_type(BoolType, fun_type(BoolType, BoolType))
CONJ = Const("conj", BOOL2)
DISJ = Const("disj", BOOL2)
NEG = Const("neg", fun_type(BoolType, BoolType))
EQ_NAT = Const("equals", fun_type(NatType, fun_type(NatType, BoolType)))
EQ_BOOL = Const("equals", BOOL2)
SUC = Const("Suc", fun_type(NatType, NatType))
A, B, C = Var("A", BoolType), Var("B", BoolType), Var("C", BoolType)
x, y, z = Var("x", NatType), Var("y", NatType), Var("z", NatType)


class TestLexer:
    def test_token_kinds(self):
        kinds = [t.kind for t in tokenize("%n::'a. ?A --> 12")]
        assert kinds == [
            TokenKind.SYMBOL, TokenKind.IDENT, TokenKind.SYMBOL, TokenKind.TVAR, TokenKind.SYMBOL,
            TokenKind.SCHEMATIC, TokenKind.SYMBOL, TokenKind.NUMBER, TokenKind.EOF,
        ]

    def test_prefix_stripped(self):
        tokens = tokenize("'a ?A")
        assert tokens[0].value == "a"
        assert tokens[1].value == "A"

    def test_unexpected_character(self):
        with pytest.raises(ParseError) as excinfo:
            tokenize("A # B")
        assert excinfo.value.position == 2


class TestTypes:
    def test_arrow_right_associative(self, sig):
        assert parse_type("nat => nat => bool", sig) == fun_type(NatType, fun_type(NatType, BoolType))

    def test_parenthesized_domain(self, sig):
        ty = parse_type("(nat => nat) => bool", sig)
        assert ty == fun_type(fun_type(NatType, NatType), BoolType)
        assert print_type(ty) == "(nat => nat) => bool"

    def test_type_variable(self, sig):
        assert parse_type("'a => bool", sig) == fun_type(TypeVariable("a"), BoolType)

    def test_unknown_constructor(self, sig):
        with pytest.raises(ParseError):
            parse_type("real", sig)

    def test_wrong_arity(self, sig):
        with pytest.raises(ParseError):
            parse_type("nat bool", sig)


class TestPrecedence:
    def test_implication_right_associative(self, term):
        assert term("A --> B --> C") == mk_implies(A, mk_implies(B, C))

    def test_conjunction_binds_tighter_than_disjunction(self, term):
        assert term("A | B & C") == App(App(DISJ, A), App(App(CONJ, B), C))

    def test_negation(self, term):
        assert term("~A & B") == App(App(CONJ, App(NEG, A)), B)

    def test_negation_looser_than_equality(self, term):
        assert term("~A = B") == App(NEG, mk_eq(A, B))

    def test_arithmetic(self, term):
        assert term("x + y * z") == App(App(plus, x), App(App(times, y), z))

    def test_plus_left_associative(self, term):
        assert term("x + y + z") == App(App(plus, App(App(plus, x), y)), z)

    def test_application_binds_tightest(self, term):
        assert term("Suc x + y") == App(App(plus, App(SUC, x)), y)

    def test_equality_non_associative(self, term):
        with pytest.raises(ParseError):
            term("A = B = C")

    def test_equality_parenthesized(self, term):
        assert term("(A = B) = C") == mk_eq(mk_eq(A, B), C)

    def test_binder_extends_right(self, term):
        n = Var("n", NatType)
        assert term("!n::nat. n = x & A") == mk_forall(n, App(App(CONJ, mk_eq(n, x)), A))

    def test_binder_as_last_argument(self, term):
        n = Var("n", NatType)
        assert term("A & !n::nat. n = n") == App(App(CONJ, A), mk_forall(n, mk_eq(n, n)))

    def test_existential_binder(self, term):
        ex = Const("exists", fun_type(fun_type(NatType, BoolType), BoolType))
        assert term("?n::nat. n = x") == App(ex, Abs("n", NatType, App(App(EQ_NAT, Bound(0)), x)))

    def test_schematic_variable(self, term):
        assert term("?A --> A") == mk_implies(SchematicVar("A", BoolType), A)

    def test_numerals(self, term):
        assert term("6") == mk_numeral(6)
        assert term("0 + 1") == App(App(plus, mk_numeral(0)), mk_numeral(1))

    def test_type_annotation(self, term):
        assert term("(u::'a) = v") == mk_eq(Var("u", TypeVariable("a")), Var("v", TypeVariable("a")))

    def test_inferred_binder_type(self, term):
        assert term("(%n. n + 1) x") == App(mk_abs(Var("n", NatType), App(App(plus, Var("n", NatType)), mk_numeral(1))), x)


class TestErrors:
    def test_unknown_identifier(self, term):
        with pytest.raises(ParseError):
            term("A & mystery")

    def test_trailing_text(self, term):
        with pytest.raises(ParseError) as excinfo:
            term("A B )")
        assert excinfo.value.position is not None

    def test_type_clash(self, term):
        with pytest.raises(TypeInferenceError):
            term("x & A")

    def test_ambiguous_type(self, sig):
        with pytest.raises(TypeInferenceError):
            parse_term("%n. n", {}, sig)

    def test_missing_dot(self, term):
        with pytest.raises(ParseError):
            term("!n::nat n = n")

    def test_sequent_requires_turnstile(self, sig, ctx):
        with pytest.raises(ParseError):
            parse_sequent("A, B", ctx, sig)

    def test_sequent_members_bool(self, sig, ctx):
        with pytest.raises(TypeInferenceError):
            parse_sequent("x |- A", ctx, sig)

    def test_free_variables_allowed_on_request(self, sig):
        t = parse_term("q & A", {}, sig, allow_free=True)
        assert t == App(App(CONJ, Var("q", BoolType)), Var("A", BoolType))


class TestPrinter:
    def test_minimal_parentheses(self, term):
        assert print_term(term("(A --> B) --> C")) == "(A --> B) --> C"
        assert print_term(term("A --> B --> C")) == "A --> B --> C"
        assert print_term(term("x + (y + z)")) == "x + (y + z)"
        assert print_term(term("(x + y) * z")) == "(x + y) * z"

    def test_binder_parenthesized_when_not_last(self, term):
        assert print_term(term("(!n::nat. n = n) & A")) == "(!n::nat. n = n) & A"

    def test_numeral_printed_in_decimal(self, term):
        assert print_term(term("123 * 456")) == "123 * 456"

    def test_unknown_variable_annotated(self, ctx):
        w = Var("w", NatType)
        assert print_term(mk_eq(w, x), ctx) == "(w::nat) = x"
        assert print_term(mk_eq(w, x)) == "w = x"

    def test_bound_name_clash_renamed(self):
        n = Var("n", NatType)
        lam = Abs("n", NatType, App(App(EQ_NAT, Bound(0)), n))
        assert print_term(lam) == "%n'::nat. n' = n"

    def test_sequent(self, seq):
        s = seq("B, A |- A & B")
        assert print_sequent(s) == "A, B |- A & B"
        assert print_sequent(seq("|- A")) == "|- A"


class TestArgs:
    def test_none(self, sig, ctx):
        assert parse_args(ArgKind.NONE, "", ctx, sig) is None
        with pytest.raises(ParseError):
            parse_args(ArgKind.NONE, "A", ctx, sig)

    def test_variable(self, sig, ctx):
        assert parse_args(ArgKind.VARIABLE, "n::nat", ctx, sig) == Var("n", NatType)

    def test_type_inst(self, sig, ctx):
        assert parse_args(ArgKind.TYPE_INST, "{'a := nat}", ctx, sig) == {"a": NatType}
        with pytest.raises(ParseError):
            parse_args(ArgKind.TYPE_INST, "{A := B}", ctx, sig)

    def test_term_inst(self, sig, ctx):
        inst = parse_args(ArgKind.TERM_INST, "{A := A & B, ?n := 3}", ctx, sig)
        assert inst == {"A": App(App(CONJ, A), B), "n": mk_numeral(3)}

    def test_name(self, sig, ctx):
        assert parse_args(ArgKind.NAME, " conjI ", ctx, sig) == "conjI"
        with pytest.raises(ParseError):
            parse_args(ArgKind.NAME, "conj I", ctx, sig)

    def test_name_inst(self, sig, ctx):
        assert parse_args(ArgKind.NAME_INST, "conjI", ctx, sig) == ("conjI", ({}, {}))
        name, (tyinst, inst) = parse_args(ArgKind.NAME_INST, "conjI {B := A}", ctx, sig)
        assert name == "conjI"
        assert tyinst == {}
        assert inst == {"B": A}

    def test_free_variable_typed_by_annotation(self, sig):
        t = parse_args(ArgKind.TERM, "(q::nat) = q", {}, sig)
        assert t == mk_eq(Var("q", NatType), Var("q", NatType))

    def test_sequent(self, sig, ctx, seq):
        assert parse_args(ArgKind.SEQUENT, "A |- A", ctx, sig) == seq("A |- A")

    def test_print_args(self, term, ctx):
        assert print_args(ArgKind.NONE, None) == ""
        assert print_args(ArgKind.VARIABLE, Var("n", NatType)) == "n::nat"
        assert print_args(ArgKind.TYPE_INST, {"a": NatType}) == "{'a := nat}"
        assert print_args(ArgKind.NAME_INST, ("conjI", ({}, {"B": A, "A": B}))) == "conjI {A := B, B := A}"
        assert print_args(ArgKind.NAME_INST, ("conjI", ({}, {}))) == "conjI"
        assert print_args(ArgKind.TERM, term("x + 0 = x"), ctx) == "x + 0 = x"

    def test_args_reread(self, sig, ctx):
        for kind, text in [
            (ArgKind.TERM, "!n::nat. n + 0 = n"),
            (ArgKind.TERM_INST, "{A := B --> C, n := x * 2}"),
            (ArgKind.NAME_INST, "add_comm {a := x, b := 3}"),
            (ArgKind.SEQUENT, "A, B |- A & B"),
        ]:
            value = parse_args(kind, text, ctx, sig)
            assert parse_args(kind, print_args(kind, value, ctx), ctx, sig) == value


# =============================================================================
# Relecture de termes aléatoires bien typés
# =============================================================================

EXISTS_NAT = Const("exists", fun_type(fun_type(NatType, BoolType), BoolType))
P = Var("P", fun_type(NatType, BoolType))
f = Var("f", fun_type(NatType, NatType))
STRANGER = Var("w", NatType)
BOUND_NAMES = ["n", "m", "k", "x"]


class TermGenerator:
    """Engendre des termes bien typés de type bool ou nat."""

    def __init__(self, seed: int):
        self.rng = random.Random(seed)

    def nat(self, depth: int, bound: list):
        rng = self.rng
        if depth == 0 or rng.random() < 0.25:
            leaves = [x, y, z, STRANGER, mk_numeral(rng.randrange(20))] + [Bound(i) for i in range(len(bound))]
            return rng.choice(leaves)
        choice = rng.randrange(5)
        if choice == 0:
            return App(App(plus, self.nat(depth - 1, bound)), self.nat(depth - 1, bound))
        if choice == 1:
            return App(App(times, self.nat(depth - 1, bound)), self.nat(depth - 1, bound))
        if choice == 2:
            return App(SUC, self.nat(depth - 1, bound))
        if choice == 3:
            return App(f, self.nat(depth - 1, bound))
        name = rng.choice(BOUND_NAMES)
        lam = Abs(name, NatType, self.nat(depth - 1, [name, *bound]))
        return App(lam, self.nat(depth - 1, bound))

    def bool(self, depth: int, bound: list):
        rng = self.rng
        if depth == 0 or rng.random() < 0.2:
            return rng.choice([A, B, C, SchematicVar("A", BoolType)])
        choice = rng.randrange(9)
        if choice in (0, 1, 2):
            op = [CONJ, DISJ, Const("implies", BOOL2)][choice]
            return App(App(op, self.bool(depth - 1, bound)), self.bool(depth - 1, bound))
        if choice == 3:
            return App(NEG, self.bool(depth - 1, bound))
        if choice == 4:
            return App(App(EQ_NAT, self.nat(depth - 1, bound)), self.nat(depth - 1, bound))
        if choice == 5:
            return App(App(EQ_BOOL, self.bool(depth - 1, bound)), self.bool(depth - 1, bound))
        if choice == 6:
            return App(P, self.nat(depth - 1, bound))
        name = rng.choice(BOUND_NAMES)
        body = self.bool(depth - 1, [name, *bound])
        quantifier = Const("all", EXISTS_NAT.ty) if choice == 7 else EXISTS_NAT
        return App(quantifier, Abs(name, NatType, body))


class TestRoundTrip:
    def test_random_terms(self, sig, ctx):
        """print_term puis parse_term redonne le même terme."""
        generator = TermGenerator(seed=42)
        for _ in range(1000):
            t = generator.bool(5, [])
            text = print_term(t, ctx)
            assert parse_term(text, ctx, sig, allow_free=True) == t, text

    def test_random_sequents(self, sig, ctx):
        generator = TermGenerator(seed=3)
        for _ in range(100):
            s = Sequent.of([generator.bool(2, []) for _ in range(2)], generator.bool(3, []))
            assert parse_sequent(print_sequent(s, ctx), ctx, sig, allow_free=True) == s
