"""
Termes de preuve : graphes orientés acycliques enracinés d'applications de règles.

Chaque nœud porte le séquent qu'il prouve, calculé à la construction ; les
prémisses sont partagées par référence.
"""
from dataclasses import dataclass
from typing import Any, Mapping, Optional, Sequence, Tuple

from kernel.hol_type import HolType
from kernel.rules import TheoryEnv, apply_prim_rule, is_primitive
from kernel.sequent import Sequent
from kernel.subst import beta_norm
from kernel.term import Term, Var

# Nœud sans règle tenant lieu d'une prémisse externe (expansion de macro)
GIVEN = "given"


@dataclass(frozen=True, eq=False)
class ProofNode:
    """Sommet du graphe de preuve ; l'égalité est l'identité."""
    rule: str
    args: Any
    prevs: Tuple["ProofNode", ...]
    th: Sequent

    def __repr__(self) -> str:
        return f"ProofNode({self.rule}, {len(self.prevs)} prémisse(s), {self.th})"


def node(
    rule: str,
    args: Any = None,
    prevs: Sequence[ProofNode] = (),
    thy: Optional[TheoryEnv] = None
) -> ProofNode:
    """
    Applique une règle primitive ou une macro et retourne le nœud obtenu.

    Raises:
        RuleMismatch, UnknownTheorem: erreurs des règles primitives
        MacroError: macro inconnue ou évaluation refusée
    """
    prevs = tuple(prevs)
    prev_ths = [p.th for p in prevs]
    if is_primitive(rule):
        th = apply_prim_rule(rule, args, prev_ths, thy)
    else:
        from macros.base import get_registry

        th = get_registry().get(rule).eval(thy, args, prev_ths)
    return ProofNode(rule, args, prevs, th)


def given(th: Sequent) -> ProofNode:
    """Prémisse externe : séquent supposé établi ailleurs."""
    return ProofNode(GIVEN, None, (), th)


# =============================================================================
# Constructeurs par règle
# =============================================================================

def assume(a: Term, thy: Optional[TheoryEnv] = None) -> ProofNode:
    return node("assume", a, (), thy)


def implies_intro(a: Term, pt: ProofNode, thy: Optional[TheoryEnv] = None) -> ProofNode:
    return node("implies_intro", a, (pt,), thy)


def implies_elim(pt1: ProofNode, pt2: ProofNode) -> ProofNode:
    """De pt1 : A --> B et pt2 : A, déduit B."""
    return node("implies_elim", None, (pt1, pt2))


def forall_intro(x: Var, pt: ProofNode) -> ProofNode:
    return node("forall_intro", x, (pt,))


def forall_elim(t: Term, pt: ProofNode, thy: Optional[TheoryEnv] = None) -> ProofNode:
    return node("forall_elim", t, (pt,), thy)


def reflexive(t: Term, thy: Optional[TheoryEnv] = None) -> ProofNode:
    return node("reflexive", t, (), thy)


def symmetric(pt: ProofNode) -> ProofNode:
    return node("symmetric", None, (pt,))


def transitive(pt1: ProofNode, pt2: ProofNode) -> ProofNode:
    return node("transitive", None, (pt1, pt2))


def combination(pt1: ProofNode, pt2: ProofNode) -> ProofNode:
    return node("combination", None, (pt1, pt2))


def abstraction(x: Var, pt: ProofNode) -> ProofNode:
    return node("abstraction", x, (pt,))


def beta_conv(t: Term, thy: Optional[TheoryEnv] = None) -> ProofNode:
    return node("beta_conv", t, (), thy)


def equal_elim(pt1: ProofNode, pt2: ProofNode) -> ProofNode:
    return node("equal_elim", None, (pt1, pt2))


def subst_type(tyinst: Mapping[str, HolType], pt: ProofNode) -> ProofNode:
    if not tyinst:
        return pt
    return node("subst_type", dict(tyinst), (pt,))


def substitution(inst: Mapping[str, Term], pt: ProofNode) -> ProofNode:
    """Instancie les variables schématiques puis bêta-normalise ; omis s'il ne change rien."""
    if not inst and all(beta_norm(t) == t for t in (pt.th.prop, *pt.th.hyps)):
        return pt
    return node("substitution", dict(inst), (pt,))


def theorem(thy: TheoryEnv, name: str) -> ProofNode:
    """Théorème nommé de la théorie, sous forme schématique."""
    return node("theorem", name, (), thy)


def sorry(th: Sequent) -> ProofNode:
    return node("sorry", th)
