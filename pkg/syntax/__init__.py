"""Syntaxe concrète : analyse et affichage des types, termes, séquents et arguments de preuve."""
from .args import parse_args, print_args, print_instantiation
from .errors import ParseError, TypeInferenceError
from .parser import parse_instantiation, parse_sequent, parse_term, parse_type, parse_variable
from .printer import print_sequent, print_term, print_type

__all__ = [
    "parse_args",
    "print_args",
    "print_instantiation",
    "ParseError",
    "TypeInferenceError",
    "parse_instantiation",
    "parse_sequent",
    "parse_term",
    "parse_type",
    "parse_variable",
    "print_sequent",
    "print_term",
    "print_type",
]
