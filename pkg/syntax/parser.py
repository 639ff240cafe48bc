"""
Analyseur syntaxique des types, termes et séquents (montée de précédence).

Le texte est d'abord lu en pré-termes (noms non résolus, types de lieurs
éventuellement omis), puis élaboré en termes du noyau par infer.Elaborator.
"""
from dataclasses import dataclass
from typing import Dict, List, Mapping, NamedTuple, Optional, Tuple, Union

from kernel.hol_type import HolType, TypeApplication, TypeVariable, fun_type
from kernel.sequent import Sequent
from kernel.signature import Signature
from kernel.term import ALL, EQUALS, IMPLIES, Term, Var

from .errors import ParseError
from .lexer import Token, TokenKind, tokenize


# =============================================================================
# Table des opérateurs
# =============================================================================

class Operator(NamedTuple):
    const: str
    precedence: int
    assoc: str  # "left", "right" ou "none"


BINARY_OPERATORS: Dict[str, Operator] = {
    "-->": Operator(IMPLIES, 25, "right"),
    "|": Operator("disj", 30, "right"),
    "&": Operator("conj", 35, "right"),
    "=": Operator(EQUALS, 50, "none"),
    "+": Operator("plus", 65, "left"),
    "*": Operator("times", 70, "left"),
}

# Constante -> symbole, pour l'affichage
INFIX_SYMBOLS: Dict[str, str] = {op.const: symbol for symbol, op in BINARY_OPERATORS.items()}

NEG = "neg"
NEG_PRECEDENCE = 40
APP_PRECEDENCE = 100
EXISTS = "exists"

# Lieur -> quantificateur (None pour la lambda)
BINDERS: Dict[str, Optional[str]] = {"%": None, "!": ALL, "?": EXISTS}


# =============================================================================
# Pré-termes
# =============================================================================

@dataclass(frozen=True)
class PIdent:
    name: str
    position: int


@dataclass(frozen=True)
class PSchematic:
    name: str
    position: int


@dataclass(frozen=True)
class PConst:
    """Constante d'opérateur, jamais masquée par une variable."""
    name: str
    position: int


@dataclass(frozen=True)
class PNumeral:
    value: int
    position: int


@dataclass(frozen=True)
class PApp:
    fun: "PreTerm"
    arg: "PreTerm"


@dataclass(frozen=True)
class PAbs:
    name: str
    ty: Optional[HolType]
    body: "PreTerm"
    position: int


@dataclass(frozen=True)
class PTyped:
    term: "PreTerm"
    ty: HolType
    position: int


PreTerm = Union[PIdent, PSchematic, PConst, PNumeral, PApp, PAbs, PTyped]


# =============================================================================
# Analyseur
# =============================================================================

class Parser:
    """Analyseur à montée de précédence sur la liste de lexèmes."""

    def __init__(self, text: str, sig: Signature):
        self.text = text
        self.sig = sig
        self.tokens: List[Token] = tokenize(text)
        self.index = 0

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.index + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.peek()
        if token.kind != TokenKind.EOF:
            self.index += 1
        return token

    def expect_symbol(self, symbol: str) -> Token:
        token = self.peek()
        if not token.is_symbol(symbol):
            raise ParseError(f"lexème inattendu {token.value!r}", token.position, repr(symbol))
        return self.advance()

    def expect_ident(self, what: str = "identifiant") -> Token:
        token = self.peek()
        if token.kind != TokenKind.IDENT:
            raise ParseError(f"lexème inattendu {token.value!r}", token.position, what)
        return self.advance()

    def expect_end(self) -> None:
        token = self.peek()
        if token.kind != TokenKind.EOF:
            raise ParseError(f"texte superflu à partir de {token.value!r}", token.position, "fin")

    # -------------------------------------------------------------------------
    # Types
    # -------------------------------------------------------------------------

    def parse_type(self) -> HolType:
        """type := postfix ['=>' type]"""
        left = self._postfix_type()
        if self.peek().is_symbol("=>"):
            self.advance()
            return fun_type(left, self.parse_type())
        return left

    def _postfix_type(self) -> HolType:
        token = self.peek()
        ty: HolType
        if token.kind == TokenKind.TVAR:
            self.advance()
            ty = TypeVariable(token.value)
        elif token.kind == TokenKind.IDENT:
            self.advance()
            ty = self._make_type(token, ())
        elif token.is_symbol("("):
            self.advance()
            args = [self.parse_type()]
            while self.peek().is_symbol(","):
                self.advance()
                args.append(self.parse_type())
            self.expect_symbol(")")
            if len(args) == 1:
                ty = args[0]
            else:
                ty = self._make_type(self.expect_ident("constructeur de type"), tuple(args))
        else:
            raise ParseError(f"lexème inattendu {token.value!r}", token.position, "type")
        while self.peek().kind == TokenKind.IDENT:
            ty = self._make_type(self.advance(), (ty,))
        return ty

    def _make_type(self, token: Token, args: Tuple[HolType, ...]) -> HolType:
        arity = self.sig.type_constructors.get(token.value)
        if arity is None:
            raise ParseError(f"constructeur de type inconnu {token.value}", token.position)
        if arity != len(args):
            raise ParseError(
                f"le constructeur {token.value} attend {arity} argument(s), {len(args)} fourni(s)",
                token.position,
            )
        return TypeApplication(token.value, args)

    # -------------------------------------------------------------------------
    # Termes
    # -------------------------------------------------------------------------

    def parse_expr(self, min_prec: int = 0) -> PreTerm:
        left = self._operand()
        while True:
            token = self.peek()
            op = BINARY_OPERATORS.get(token.value) if token.kind == TokenKind.SYMBOL else None
            if op is None or op.precedence < min_prec:
                return left
            self.advance()
            next_prec = op.precedence if op.assoc == "right" else op.precedence + 1
            right = self.parse_expr(next_prec)
            left = PApp(PApp(PConst(op.const, token.position), left), right)
            if op.assoc == "none":
                following = self.peek()
                other = BINARY_OPERATORS.get(following.value) if following.kind == TokenKind.SYMBOL else None
                if other is not None and other.precedence == op.precedence:
                    raise ParseError(
                        f"opérateur {token.value} non associatif, parenthèses requises",
                        following.position,
                    )

    def _operand(self) -> PreTerm:
        token = self.peek()
        if token.is_symbol("~"):
            self.advance()
            return PApp(PConst(NEG, token.position), self.parse_expr(NEG_PRECEDENCE))
        binder = self._try_binder()
        if binder is not None:
            return binder
        return self._application()

    def _application(self) -> PreTerm:
        result = self._atom()
        while True:
            if self._starts_atom(self.peek()):
                binder = self._try_binder()
                result = PApp(result, binder if binder is not None else self._atom())
            elif self.peek().is_symbol("%", "!", "?"):
                binder = self._try_binder()
                assert binder is not None
                return PApp(result, binder)
            else:
                return result

    @staticmethod
    def _starts_atom(token: Token) -> bool:
        return token.kind in (TokenKind.IDENT, TokenKind.SCHEMATIC, TokenKind.NUMBER) \
            or token.is_symbol("(")

    def _try_binder(self) -> Optional[PreTerm]:
        """
        Lit un lieur %x::T. t, !x::T. t ou ?x::T. t s'il commence ici.

        ?x suivi de '.' (ou de '::' type '.') est un lieur existentiel ;
        sinon ?x est une variable schématique et la lecture revient en arrière.
        """
        start = self.index
        token = self.peek()
        from_schematic = False
        if token.is_symbol(*BINDERS):
            self.advance()
            kind = token.value
            name = self.expect_ident("variable liée").value
        elif token.kind == TokenKind.SCHEMATIC and self.peek(1).is_symbol(".", "::"):
            self.advance()
            kind, name, from_schematic = "?", token.value, True
        else:
            return None

        ty: Optional[HolType] = None
        if self.peek().is_symbol("::"):
            self.advance()
            try:
                ty = self.parse_type()
            except ParseError:
                if from_schematic:
                    self.index = start
                    return None
                raise
        if not self.peek().is_symbol("."):
            if from_schematic:
                self.index = start
                return None
            following = self.peek()
            raise ParseError(f"lexème inattendu {following.value!r}", following.position, "'.'")
        self.advance()

        body = self.parse_expr(0)
        abstraction = PAbs(name, ty, body, token.position)
        quantifier = BINDERS[kind]
        if quantifier is None:
            return abstraction
        return PApp(PConst(quantifier, token.position), abstraction)

    def _atom(self) -> PreTerm:
        token = self.advance()
        if token.kind == TokenKind.IDENT:
            return PIdent(token.value, token.position)
        if token.kind == TokenKind.SCHEMATIC:
            return PSchematic(token.value, token.position)
        if token.kind == TokenKind.NUMBER:
            return PNumeral(int(token.value), token.position)
        if token.is_symbol("("):
            inner = self.parse_expr(0)
            if self.peek().is_symbol("::"):
                self.advance()
                ty = self.parse_type()
                self.expect_symbol(")")
                return PTyped(inner, ty, token.position)
            self.expect_symbol(")")
            return inner
        raise ParseError(f"lexème inattendu {token.value!r}", token.position, "terme")

    # -------------------------------------------------------------------------
    # Séquents, variables, instanciations
    # -------------------------------------------------------------------------

    def parse_sequent_parts(self) -> Tuple[List[PreTerm], PreTerm]:
        """sequent := [term {',' term}] '|-' term"""
        hyps: List[PreTerm] = []
        if not self.peek().is_symbol("|-"):
            hyps.append(self.parse_expr(0))
            while self.peek().is_symbol(","):
                self.advance()
                hyps.append(self.parse_expr(0))
        self.expect_symbol("|-")
        return hyps, self.parse_expr(0)

    def parse_variable_parts(self) -> Tuple[str, HolType]:
        """variable := ident '::' type"""
        name = self.expect_ident("variable").value
        self.expect_symbol("::")
        return name, self.parse_type()

    def parse_instantiation_parts(self) -> Tuple[Dict[str, HolType], Dict[str, PreTerm]]:
        """instantiation := '{' [entry {',' entry}] '}' ; entry := ('a | A | ?A) ':=' valeur"""
        tyinst: Dict[str, HolType] = {}
        inst: Dict[str, PreTerm] = {}
        self.expect_symbol("{")
        if not self.peek().is_symbol("}"):
            while True:
                key = self.advance()
                self.expect_symbol(":=")
                if key.kind == TokenKind.TVAR:
                    tyinst[key.value] = self.parse_type()
                elif key.kind in (TokenKind.IDENT, TokenKind.SCHEMATIC):
                    inst[key.value] = self.parse_expr(0)
                else:
                    raise ParseError(f"lexème inattendu {key.value!r}", key.position, "clé d'instanciation")
                if not self.peek().is_symbol(","):
                    break
                self.advance()
        self.expect_symbol("}")
        return tyinst, inst


# =============================================================================
# API publique
# =============================================================================

Context = Optional[Mapping[str, HolType]]


def parse_type(text: str, sig: Signature) -> HolType:
    """
    Lit un type.

    Raises:
        ParseError: texte mal formé ou constructeur inconnu / d'arité incorrecte
    """
    parser = Parser(text, sig)
    ty = parser.parse_type()
    parser.expect_end()
    return ty


def parse_term(text: str, ctx: Context, sig: Signature, allow_free: bool = False) -> Term:
    """
    Lit et type un terme.

    Args:
        text: Texte du terme
        ctx: Types des variables libres autorisées
        sig: Signature (constructeurs de types, constantes)
        allow_free: Accepte les identifiants inconnus comme variables libres typées par inférence

    Raises:
        ParseError: texte mal formé ou identifiant inconnu
        TypeInferenceError: types contradictoires ou ambigus
    """
    from .infer import Elaborator

    parser = Parser(text, sig)
    pre = parser.parse_expr(0)
    parser.expect_end()
    elaborator = Elaborator(sig, ctx, allow_free)
    term, _ = elaborator.elaborate(pre)
    return elaborator.finish(term)


def parse_sequent(text: str, ctx: Context, sig: Signature, allow_free: bool = False) -> Sequent:
    """Lit un séquent « A1, A2 |- C » (hypothèses éventuellement absentes)."""
    from .infer import Elaborator

    parser = Parser(text, sig)
    hyp_pres, prop_pre = parser.parse_sequent_parts()
    parser.expect_end()
    elaborator = Elaborator(sig, ctx, allow_free)
    terms = [elaborator.elaborate_bool(pre) for pre in hyp_pres + [prop_pre]]
    terms = [elaborator.finish(t) for t in terms]
    return Sequent(frozenset(terms[:-1]), terms[-1])


def parse_variable(text: str, sig: Signature) -> Var:
    """Lit une variable annotée « x::T »."""
    parser = Parser(text, sig)
    name, ty = parser.parse_variable_parts()
    parser.expect_end()
    return Var(name, ty)


def parse_instantiation(
    text: str,
    ctx: Context,
    sig: Signature
) -> Tuple[Dict[str, HolType], Dict[str, Term]]:
    """Lit une instanciation « {'a := T, A := t} » ; les valeurs peuvent mentionner des variables libres."""
    from .infer import Elaborator

    parser = Parser(text, sig)
    tyinst, pre_inst = parser.parse_instantiation_parts()
    parser.expect_end()
    inst: Dict[str, Term] = {}
    for name, pre in pre_inst.items():
        elaborator = Elaborator(sig, ctx, allow_free=True)
        term, _ = elaborator.elaborate(pre)
        inst[name] = elaborator.finish(term)
    return tyinst, inst
