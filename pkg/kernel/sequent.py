"""
Séquents A1, ..., An |- C : l'unité de connaissance prouvée.
"""
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List

from .errors import HolTypeError
from .hol_type import BoolType
from .term import Term, infer_type, term_key


@dataclass(frozen=True)
class Sequent:
    """Jugement prouvé : ensemble d'hypothèses booléennes et une conclusion booléenne."""
    hyps: FrozenSet[Term]
    prop: Term

    def __post_init__(self) -> None:
        if not isinstance(self.hyps, frozenset):
            object.__setattr__(self, "hyps", frozenset(self.hyps))
        for t in (self.prop, *self.hyps):
            if infer_type(t) != BoolType:
                raise HolTypeError("les membres d'un séquent doivent être booléens")

    @classmethod
    def of(cls, hyps: Iterable[Term], prop: Term) -> "Sequent":
        return cls(frozenset(hyps), prop)

    def sorted_hyps(self) -> List[Term]:
        """Hypothèses dans l'ordre canonique (affichage déterministe)."""
        return sorted(self.hyps, key=term_key)

    def __str__(self) -> str:
        from syntax.printer import print_sequent
        return print_sequent(self)
