"""
Vérification des preuves linéaires, expansion complète des macros et
reconstruction des termes de preuve.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Tuple

from conv.errors import ConversionError
from kernel.errors import KernelError
from kernel.hol_type import HolType
from kernel.rules import GAP_RULE, TheoryEnv, apply_prim_rule, is_primitive
from kernel.sequent import Sequent
from macros.base import MacroError, TrustPolicy, get_registry
from syntax.errors import ParseError, TypeInferenceError

from .errors import CheckFailure, ExpansionMismatch, ItemId, NoExpansion, format_id
from .linear import LinearProof, LinearProofItem, arg_kind_of, linearize
from .proofterm import GIVEN, ProofNode, given, node

logger = logging.getLogger(__name__)

Context = Optional[Mapping[str, HolType]]

_ITEM_ERRORS = (
    KernelError, MacroError, ConversionError, ParseError, TypeInferenceError,
    NoExpansion, ExpansionMismatch, ValueError,
)


@dataclass
class CheckReport:
    """Résultat de la vérification d'une preuve linéaire."""
    conclusion: Optional[Sequent] = None
    steps_checked: int = 0
    macro_steps_trusted: int = 0
    macro_steps_expanded: int = 0
    gaps: List[ItemId] = field(default_factory=list)

    def absorb(self, other: "CheckReport") -> None:
        """Ajoute les compteurs d'une sous-preuve (expansion de macro)."""
        self.steps_checked += other.steps_checked
        self.macro_steps_trusted += other.macro_steps_trusted
        self.macro_steps_expanded += other.macro_steps_expanded
        self.gaps.extend(other.gaps)

    def to_dict(self, ctx: Context = None) -> Dict[str, Any]:
        from syntax.printer import print_sequent

        return {
            "conclusion": print_sequent(self.conclusion, ctx) if self.conclusion is not None else None,
            "steps_checked": self.steps_checked,
            "macro_steps_trusted": self.macro_steps_trusted,
            "macro_steps_expanded": self.macro_steps_expanded,
            "gaps": [format_id(g) for g in self.gaps],
        }


def _read_args(item: LinearProofItem, thy: TheoryEnv, ctx: Context) -> Any:
    if item.has_value:
        return item.value
    from syntax.args import parse_args

    return parse_args(arg_kind_of(item.rule), item.args or "", ctx, thy.signature)


def _read_annotation(item: LinearProofItem, thy: TheoryEnv, ctx: Context) -> Optional[Sequent]:
    if item.sequent is not None:
        return item.sequent
    if item.th is None:
        return None
    from syntax.parser import parse_sequent

    return parse_sequent(item.th, ctx, thy.signature, allow_free=True)


def check_linear_proof(
    proof: LinearProof,
    thy: TheoryEnv,
    trust: TrustPolicy = TrustPolicy(),
    ctx: Context = None,
    known: Optional[Mapping[ItemId, Sequent]] = None
) -> CheckReport:
    """
    Vérifie les éléments dans l'ordre.

    Chaque règle est réévaluée à partir des séquents des prémisses ; une
    annotation th doit coïncider avec le séquent recalculé. Une macro de
    niveau supérieur au seuil de confiance est expansée et son expansion
    vérifiée récursivement sous les identifiants k.0, k.1, ...

    Args:
        proof: Preuve linéaire (non vide)
        thy: Environnement de la théorie
        trust: Politique de confiance
        ctx: Types des variables libres du théorème (lecture des arguments)
        known: Séquents déjà établis, accessibles comme prémisses

    Raises:
        CheckFailure: élément refusé (identifiant et raison)
    """
    if not proof.items:
        raise CheckFailure((), "preuve vide")
    sequents: Dict[ItemId, Sequent] = dict(known or {})
    report = CheckReport()
    for item in proof.items:
        if item.id in sequents:
            raise CheckFailure(item.id, "identifiant en double")
        try:
            prev_ths = [sequents[p] for p in item.prevs]
        except KeyError as e:
            raise CheckFailure(item.id, f"prémisse non résolue {format_id(e.args[0])}") from e
        try:
            sequents[item.id] = _check_item(item, prev_ths, thy, trust, ctx, sequents, report)
        except CheckFailure:
            raise
        except _ITEM_ERRORS as e:
            raise CheckFailure(item.id, str(e)) from e
    report.conclusion = sequents[proof.last.id]
    return report


def _check_item(
    item: LinearProofItem,
    prev_ths: List[Sequent],
    thy: TheoryEnv,
    trust: TrustPolicy,
    ctx: Context,
    sequents: Mapping[ItemId, Sequent],
    report: CheckReport
) -> Sequent:
    args = _read_args(item, thy, ctx)
    annotation = _read_annotation(item, thy, ctx)

    if is_primitive(item.rule):
        th = apply_prim_rule(item.rule, args, prev_ths, thy)
        report.steps_checked += 1
        if item.rule == GAP_RULE:
            report.gaps.append(item.id)
    else:
        macro = get_registry().get(item.rule)
        if trust.trusts(macro):
            th = macro.eval(thy, args, prev_ths)
            report.steps_checked += 1
            report.macro_steps_trusted += 1
        else:
            claimed = annotation if annotation is not None else macro.eval(thy, args, prev_ths)
            placeholders = [given(s) for s in prev_ths]
            expansion = macro.get_proof_term(thy, args, placeholders)
            if expansion is None:
                raise NoExpansion(macro.name)
            external = {id(ph): prev_id for ph, prev_id in zip(placeholders, item.prevs)}
            if id(expansion) in external:
                th = expansion.th
            else:
                sub_proof = linearize(expansion, prefix=item.id, external=external)
                sub_report = check_linear_proof(sub_proof, thy, trust, ctx, known=sequents)
                report.absorb(sub_report)
                th = sub_report.conclusion
            report.macro_steps_expanded += 1
            if th != claimed:
                raise CheckFailure(item.id, f"l'expansion de {macro.name} ne prouve pas le séquent annoncé")
            logger.debug(f"Macro {macro.name} expansée sous {format_id(item.id)}")

    if annotation is not None and annotation != th:
        raise CheckFailure(item.id, "le séquent annoté diffère du séquent recalculé")
    return th


def check_proof_term(
    root: ProofNode,
    thy: TheoryEnv,
    trust: TrustPolicy = TrustPolicy(),
    ctx: Context = None
) -> CheckReport:
    """Linéarise puis vérifie un terme de preuve."""
    return check_linear_proof(linearize(root), thy, trust, ctx)


def build_proof_term(proof: LinearProof, thy: TheoryEnv, ctx: Context = None) -> ProofNode:
    """
    Reconstruit le graphe de preuve d'une preuve linéaire (éléments réévalués).

    Raises:
        CheckFailure: prémisse non résolue ou règle refusée
    """
    nodes: Dict[ItemId, ProofNode] = {}
    for item in proof.items:
        try:
            prevs = [nodes[p] for p in item.prevs]
            nodes[item.id] = node(item.rule, _read_args(item, thy, ctx), prevs, thy)
        except KeyError as e:
            raise CheckFailure(item.id, f"prémisse non résolue {format_id(e.args[0])}") from e
        except _ITEM_ERRORS as e:
            raise CheckFailure(item.id, str(e)) from e
    return nodes[proof.last.id]


_VISIT, _BUILD, _LINK = 0, 1, 2


def expand_fully(root: ProofNode, thy: TheoryEnv) -> ProofNode:
    """
    Remplace récursivement chaque macro par son expansion.

    Le graphe obtenu ne contient que des règles primitives et prouve le même
    séquent ; le partage est conservé (chaque nœud est traité une fois).

    Raises:
        NoExpansion: macro sans expansion
        ExpansionMismatch: expansion prouvant un autre séquent
    """
    registry = get_registry()
    # id(nœud) -> (nœud, nœud expansé) ; garder le nœud empêche la réutilisation de son id
    memo: Dict[int, Tuple[ProofNode, ProofNode]] = {}
    stack: List[Tuple[ProofNode, int, Optional[ProofNode]]] = [(root, _VISIT, None)]
    while stack:
        current, state, expansion = stack.pop()
        if id(current) in memo:
            continue
        if state == _LINK:
            assert expansion is not None
            memo[id(current)] = (current, memo[id(expansion)][1])
            continue
        if state == _VISIT:
            stack.append((current, _BUILD, None))
            for prev in reversed(current.prevs):
                if id(prev) not in memo:
                    stack.append((prev, _VISIT, None))
            continue

        new_prevs = tuple(memo[id(p)][1] for p in current.prevs)
        if current.rule == GIVEN or is_primitive(current.rule):
            if all(a is b for a, b in zip(new_prevs, current.prevs)):
                memo[id(current)] = (current, current)
            else:
                memo[id(current)] = (current, ProofNode(current.rule, current.args, new_prevs, current.th))
            continue

        macro = registry.get(current.rule)
        placeholders = [given(p.th) for p in new_prevs]
        expanded = macro.get_proof_term(thy, current.args, placeholders)
        if expanded is None:
            raise NoExpansion(macro.name)
        if expanded.th != current.th:
            raise ExpansionMismatch(macro.name, "séquent différent")
        for placeholder, real in zip(placeholders, new_prevs):
            memo[id(placeholder)] = (placeholder, real)
        stack.append((current, _LINK, expanded))
        stack.append((expanded, _VISIT, None))
    return memo[id(root)][1]
