"""
Théories : signature et table des théorèmes construites élément par élément.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from kernel.errors import HolTypeError, KernelError, UnknownTheorem
from kernel.hol_type import BoolType, HolType, type_vars
from kernel.sequent import Sequent
from kernel.signature import Signature, base_signature
from kernel.term import (
    Const, Term, dest_eq, free_vars, infer_type, is_eq, iter_subterms, schematic_vars,
    schematize, term_type_vars,
)
from syntax.errors import ParseError, TypeInferenceError
from syntax.parser import parse_term, parse_type

from .errors import DefinitionError, DuplicateName, ItemError
from .models import AxiomItem, ConstAxItem, DefItem, TheoremItem, TheoryFile, TypeAxItem

logger = logging.getLogger(__name__)

AXIOM = "axiom"
DEFINITION = "definition"
THEOREM = "theorem"


@dataclass(frozen=True)
class TheoremEntry:
    """Énoncé nommé, sous forme à variables nommées."""
    name: str
    sequent: Sequent
    vars: Dict[str, HolType] = field(default_factory=dict)
    kind: str = THEOREM
    theory: str = ""
    position: int = 0

    def schematic(self) -> Sequent:
        """Variables de vars remplacées par des variables schématiques."""
        if not self.vars:
            return self.sequent
        return Sequent(
            frozenset(schematize(h, self.vars) for h in self.sequent.hyps),
            schematize(self.sequent.prop, self.vars),
        )


class Theory:
    """
    Théorie chargée : document d'origine, théories importées, signature et
    table des théorèmes (imports, axiomes, définitions, énoncés des théorèmes).
    """

    def __init__(self, document: TheoryFile, parents: Sequence["Theory"] = ()):
        self.document = document
        self.parents: List[Theory] = list(parents)
        self._imported_signature = base_signature()
        imported: Dict[str, TheoremEntry] = {}
        for parent in self.parents:
            self._imported_signature.merge(parent.signature)
            for name, entry in parent.theorems.items():
                existing = imported.get(name)
                if existing is not None and existing is not entry:
                    raise DuplicateName(name, existing.theory)
                imported[name] = entry
        self.signature = self._imported_signature.copy()
        self.theorems: Dict[str, TheoremEntry] = imported
        # (position, "type" | "const", nom, arité ou type)
        self._declarations: List[Tuple[int, str, str, Union[int, HolType]]] = []
        for index, item in enumerate(document.content):
            self._add_item(index, item)
        logger.debug(f"Théorie {self.name}: {len(self.theorems)} énoncés")

    @property
    def name(self) -> str:
        return self.document.name

    @property
    def imports(self) -> List[str]:
        return list(self.document.imports)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Theory) and self.document == other.document

    def __repr__(self) -> str:
        return f"Theory({self.name}, {len(self.document.content)} éléments)"

    # =========================================================================
    # Construction
    # =========================================================================

    def _add_item(self, index: int, item: Any) -> None:
        try:
            if isinstance(item, TypeAxItem):
                if item.name in self.signature.type_constructors:
                    raise DuplicateName(item.name)
                self.signature.add_type(item.name, item.arity)
                self._declarations.append((index, "type", item.name, item.arity))
            elif isinstance(item, ConstAxItem):
                ty = parse_type(item.type, self.signature)
                if item.name in self.signature.constants:
                    raise DuplicateName(item.name)
                self.signature.add_const(item.name, ty)
                self._declarations.append((index, "const", item.name, ty))
            elif isinstance(item, DefItem):
                self._add_definition(index, item)
            else:
                kind = AXIOM if isinstance(item, AxiomItem) else THEOREM
                ctx = self._parse_vars(item.vars)
                prop = self._parse_prop(item.prop, ctx)
                self._register(item.name, Sequent(frozenset(), prop), ctx, kind, index)
        except (ParseError, TypeInferenceError, KernelError) as e:
            raise ItemError(self.name, index, item.name, e) from e

    def _parse_vars(self, vars: Mapping[str, str]) -> Dict[str, HolType]:
        return {name: parse_type(text, self.signature) for name, text in vars.items()}

    def _parse_prop(self, text: str, ctx: Mapping[str, HolType]) -> Term:
        prop = parse_term(text, ctx, self.signature)
        if infer_type(prop) != BoolType:
            raise HolTypeError("énoncé non booléen")
        return prop

    def _add_definition(self, index: int, item: DefItem) -> None:
        ty = parse_type(item.type, self.signature)
        if item.name in self.signature.constants:
            raise DuplicateName(item.name)
        trial = self.signature.copy()
        trial.add_const(item.name, ty)
        eq = parse_term(item.prop, {}, trial)
        if not is_eq(eq):
            raise DefinitionError(item.name, "égalité « c = corps » attendue")
        lhs, body = dest_eq(eq)
        if lhs != Const(item.name, ty):
            raise DefinitionError(item.name, f"le membre gauche doit être la constante {item.name}")
        if any(isinstance(s, Const) and s.name == item.name for s in iter_subterms(body)):
            raise DefinitionError(item.name, "définition récursive")
        if free_vars(body) or schematic_vars(body):
            raise DefinitionError(item.name, "corps non clos")
        if not term_type_vars(body) <= type_vars(ty):
            raise DefinitionError(item.name, "variables de type absentes du type déclaré")
        self.signature.add_const(item.name, ty)
        self._declarations.append((index, "const", item.name, ty))
        self._register(definition_name(item.name), Sequent(frozenset(), eq), {}, DEFINITION, index)

    def _register(
        self,
        name: str,
        sequent: Sequent,
        ctx: Dict[str, HolType],
        kind: str,
        index: int
    ) -> None:
        existing = self.theorems.get(name)
        if existing is not None:
            raise DuplicateName(name, existing.theory)
        self.theorems[name] = TheoremEntry(name, sequent, ctx, kind, self.name, index)

    # =========================================================================
    # Consultation
    # =========================================================================

    def _lookup(self, name: str, before: Optional[int]) -> TheoremEntry:
        entry = self.theorems.get(name)
        if entry is None:
            raise UnknownTheorem(name)
        if before is not None and entry.theory == self.name and entry.position >= before:
            raise UnknownTheorem(name)
        return entry

    def get_theorem(self, name: str, schematic: bool = False) -> Sequent:
        """
        Énoncé stocké ; avec schematic, les variables de vars deviennent schématiques.

        Raises:
            UnknownTheorem: nom absent des imports et de la théorie
        """
        entry = self._lookup(name, None)
        return entry.schematic() if schematic else entry.sequent

    def entry(self, name: str) -> TheoremEntry:
        return self._lookup(name, None)

    def signature_at(self, position: int) -> Signature:
        """Signature visible avant l'élément d'indice position."""
        sig = self._imported_signature.copy()
        for index, kind, name, value in self._declarations:
            if index >= position:
                break
            if kind == "type":
                sig.add_type(name, value)  # type: ignore[arg-type]
            else:
                sig.add_const(name, value)  # type: ignore[arg-type]
        return sig

    def view(self, position: int) -> "TheoryView":
        """Environnement vu par la preuve de l'élément d'indice position (imports et éléments antérieurs)."""
        return TheoryView(self, position)

    def theorem_items(self) -> Iterator[Tuple[int, TheoremItem]]:
        for index, item in enumerate(self.document.content):
            if isinstance(item, TheoremItem):
                yield index, item

    def theorem_item(self, name: str) -> Tuple[int, TheoremItem]:
        for index, item in self.theorem_items():
            if item.name == name:
                return index, item
        raise UnknownTheorem(name)

    def closure(self) -> List["Theory"]:
        """Théories importées (transitivement) puis la théorie elle-même, chacune une fois."""
        seen: Dict[str, Theory] = {}

        def visit(thy: "Theory") -> None:
            for parent in thy.parents:
                if parent.name not in seen:
                    visit(parent)
            seen.setdefault(thy.name, thy)

        visit(self)
        return list(seen.values())


class TheoryView:
    """Théorie restreinte aux éléments précédant une position."""

    def __init__(self, theory: Theory, position: int):
        self.theory = theory
        self.position = position
        self.signature = theory.signature_at(position)

    def get_theorem(self, name: str, schematic: bool = False) -> Sequent:
        entry = self.theory._lookup(name, self.position)
        return entry.schematic() if schematic else entry.sequent


def definition_name(const: str) -> str:
    return f"{const}_def"
