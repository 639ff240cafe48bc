"""
Expansion complète de la preuve d'un théorème (commande expand).
"""
import logging
from dataclasses import dataclass

from kernel.rules import is_primitive
from proof.checker import build_proof_term, expand_fully
from proof.linear import linearize

from .checker import linear_proof_of, proof_models
from .models import TheoryFile
from .theory import Theory

logger = logging.getLogger(__name__)


@dataclass
class ExpansionResult:
    """Document modifié et tailles de la preuve avant / après."""
    document: TheoryFile
    theorem: str
    items_before: int
    items_after: int

    @property
    def changed(self) -> bool:
        return self.items_before != self.items_after


def expand_theorem(thy: Theory, name: str) -> ExpansionResult:
    """
    Remplace la preuve du théorème par sa version sans macro.

    Une preuve qui ne contient que des règles primitives est conservée telle
    quelle. Les éléments produits portent tous leur séquent (clé th).

    Raises:
        UnknownTheorem: pas de théorème de ce nom dans la théorie
        CheckFailure: preuve d'origine refusée
        NoExpansion, ExpansionMismatch: macro non expansible
    """
    index, item = thy.theorem_item(name)
    proof = linear_proof_of(item)
    document = thy.document.model_copy(deep=True)
    if all(is_primitive(rule) for rule in proof.rules()):
        return ExpansionResult(document, name, len(proof), len(proof))

    env = thy.view(index)
    ctx = thy.entry(name).vars
    expanded = linearize(expand_fully(build_proof_term(proof, env, ctx), env))
    document.content[index].proof = proof_models(expanded, ctx)  # type: ignore[union-attr]
    logger.info(f"{thy.name}/{name}: {len(proof)} -> {len(expanded)} éléments")
    return ExpansionResult(document, name, len(proof), len(expanded))
