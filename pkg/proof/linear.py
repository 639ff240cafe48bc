"""
Preuves linéaires : liste ordonnée d'éléments à identifiants pointés.

Un élément produit par linéarisation garde la valeur déjà lue de ses
arguments et le séquent prouvé ; leur texte n'est calculé qu'à l'écriture.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Tuple

from kernel.hol_type import HolType
from kernel.rules import PRIMITIVE_RULES, ArgKind
from kernel.sequent import Sequent

from .errors import ItemId, format_id
from .proofterm import GIVEN, ProofNode

_UNSET = object()


def parse_id(text: str) -> ItemId:
    """Lit « n1.n2...nk » ; chaque composante est écrite sans zéro initial."""
    parts = str(text).split(".")
    if not all(p.isascii() and p.isdigit() and (p == "0" or p[0] != "0") for p in parts):
        raise ValueError(f"Identifiant d'élément invalide: {text!r}")
    return tuple(int(p) for p in parts)


def arg_kind_of(rule: str) -> ArgKind:
    """Forme des arguments d'une règle primitive ou d'une macro enregistrée."""
    spec = PRIMITIVE_RULES.get(rule)
    if spec is not None:
        return spec.arg_kind
    from macros.base import get_registry

    return get_registry().get(rule).arg_kind


@dataclass
class LinearProofItem:
    """Élément de preuve linéaire."""
    id: ItemId
    rule: str
    args: Optional[str] = None
    prevs: List[ItemId] = field(default_factory=list)
    th: Optional[str] = None
    value: Any = field(default=_UNSET, compare=False, repr=False)
    sequent: Optional[Sequent] = field(default=None, compare=False, repr=False)

    @property
    def has_value(self) -> bool:
        return self.value is not _UNSET

    def args_text(self, ctx: Optional[Mapping[str, HolType]] = None) -> str:
        if self.args is None:
            if not self.has_value:
                return ""
            from syntax.args import print_args

            self.args = print_args(arg_kind_of(self.rule), self.value, ctx)
        return self.args

    def th_text(self, ctx: Optional[Mapping[str, HolType]] = None) -> Optional[str]:
        if self.th is None and self.sequent is not None:
            from syntax.printer import print_sequent

            self.th = print_sequent(self.sequent, ctx)
        return self.th

    def render(self, ctx: Optional[Mapping[str, HolType]] = None) -> "LinearProofItem":
        """Calcule les textes manquants (avant écriture dans un fichier)."""
        self.args_text(ctx)
        self.th_text(ctx)
        return self

    def to_dict(self, ctx: Optional[Mapping[str, HolType]] = None) -> Dict[str, Any]:
        """Forme JSON, clés dans l'ordre canonique."""
        result: Dict[str, Any] = {
            "id": format_id(self.id),
            "rule": self.rule,
            "args": self.args_text(ctx),
            "prevs": [format_id(p) for p in self.prevs],
        }
        th = self.th_text(ctx)
        if th is not None:
            result["th"] = th
        return result


@dataclass
class LinearProof:
    """Liste ordonnée d'éléments ; le dernier porte la conclusion."""
    items: List[LinearProofItem] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    @property
    def last(self) -> LinearProofItem:
        return self.items[-1]

    def rules(self) -> List[str]:
        return [item.rule for item in self.items]


def linearize(
    root: ProofNode,
    prefix: Tuple[int, ...] = (),
    external: Optional[Mapping[int, ItemId]] = None
) -> LinearProof:
    """
    Ordre topologique du graphe (prémisses d'abord), chaque nœud émis une fois.

    Les ex aequo sont départagés par l'ordre de première visite d'un parcours
    en profondeur des prémisses de gauche à droite.

    Args:
        root: Racine du graphe
        prefix: Préfixe des identifiants émis (prefix + (0,), prefix + (1,), ...)
        external: id() des nœuds GIVEN -> identifiant de l'élément qu'ils représentent

    Raises:
        ValueError: prémisse GIVEN sans correspondance
    """
    ids: Dict[int, ItemId] = dict(external or {})
    items: List[LinearProofItem] = []
    stack: List[Tuple[ProofNode, bool]] = [(root, False)]
    while stack:
        current, ready = stack.pop()
        if id(current) in ids:
            continue
        if current.rule == GIVEN:
            raise ValueError("prémisse externe sans identifiant")
        if not ready:
            stack.append((current, True))
            for prev in reversed(current.prevs):
                if id(prev) not in ids:
                    stack.append((prev, False))
            continue
        item_id = prefix + (len(items),)
        ids[id(current)] = item_id
        items.append(LinearProofItem(
            id=item_id,
            rule=current.rule,
            prevs=[ids[id(p)] for p in current.prevs],
            value=current.args,
            sequent=current.th,
        ))
    return LinearProof(items)
