"""
Découpage en lexèmes des types, termes, séquents et arguments de preuve.
"""
import re
from dataclasses import dataclass
from enum import Enum
from typing import List

from .errors import ParseError


class TokenKind(str, Enum):
    IDENT = "IDENT"
    TVAR = "TVAR"
    SCHEMATIC = "SCHEMATIC"
    NUMBER = "NUMBER"
    SYMBOL = "SYMBOL"
    EOF = "EOF"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    value: str
    position: int

    def is_symbol(self, *symbols: str) -> bool:
        return self.kind == TokenKind.SYMBOL and self.value in symbols


# Les symboles longs doivent précéder leurs préfixes
SYMBOLS = ["-->", "|-", "=>", "::", ":=", "(", ")", "{", "}", ",", ".", "%", "!", "?", "~", "&", "|", "=", "+", "*"]

IDENT_RE = r"[A-Za-z_][A-Za-z0-9_']*"

_TOKEN_RE = re.compile(
    r"(?P<space>\s+)"
    rf"|(?P<tvar>'{IDENT_RE})"
    rf"|(?P<schematic>\?{IDENT_RE})"
    rf"|(?P<ident>{IDENT_RE})"
    r"|(?P<number>[0-9]+)"
    r"|(?P<symbol>" + "|".join(re.escape(s) for s in SYMBOLS) + ")"
)

_IDENT_FULL = re.compile(IDENT_RE)


def is_identifier(name: str) -> bool:
    return _IDENT_FULL.fullmatch(name) is not None


def tokenize(source: str) -> List[Token]:
    """
    Découpe source en lexèmes, terminés par un lexème EOF.

    Raises:
        ParseError: caractère inattendu
    """
    tokens: List[Token] = []
    position = 0
    while position < len(source):
        match = _TOKEN_RE.match(source, position)
        if match is None:
            raise ParseError(f"caractère inattendu {source[position]!r}", position)
        kind = match.lastgroup
        text = match.group()
        if kind == "tvar":
            tokens.append(Token(TokenKind.TVAR, text[1:], position))
        elif kind == "schematic":
            tokens.append(Token(TokenKind.SCHEMATIC, text[1:], position))
        elif kind == "ident":
            tokens.append(Token(TokenKind.IDENT, text, position))
        elif kind == "number":
            tokens.append(Token(TokenKind.NUMBER, text, position))
        elif kind == "symbol":
            tokens.append(Token(TokenKind.SYMBOL, text, position))
        position = match.end()
    tokens.append(Token(TokenKind.EOF, "", len(source)))
    return tokens
