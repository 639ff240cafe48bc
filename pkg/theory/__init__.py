"""Théories : format de fichier, chargement, vérification."""
from .checker import TheoremResult, TheoryCheckReport, check_theorem, check_theory
from .errors import (
    DefinitionError,
    DuplicateName,
    ImportCycle,
    ImportNotFound,
    ItemError,
    SchemaError,
    TheoryError,
    UnsupportedItem,
)
from .expand import ExpansionResult, expand_theorem
from .loader import TheoryLoader, dump_document, load_theory, read_document, save_document, save_theory
from .models import TheoryFile, parse_document
from .theory import Theory, TheoremEntry, TheoryView

__all__ = [
    "TheoremResult",
    "TheoryCheckReport",
    "check_theorem",
    "check_theory",
    "DefinitionError",
    "DuplicateName",
    "ImportCycle",
    "ImportNotFound",
    "ItemError",
    "SchemaError",
    "TheoryError",
    "UnsupportedItem",
    "ExpansionResult",
    "expand_theorem",
    "TheoryLoader",
    "dump_document",
    "load_theory",
    "read_document",
    "save_document",
    "save_theory",
    "TheoryFile",
    "parse_document",
    "Theory",
    "TheoremEntry",
    "TheoryView",
]
