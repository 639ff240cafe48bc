"""
Vérification d'une théorie : les preuves des théorèmes sont vérifiées une à
une, dans l'environnement formé des imports et des éléments antérieurs.
"""
import json
import logging
import time
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Dict, List, Optional

from kernel.sequent import Sequent
from macros.base import TrustPolicy
from proof.checker import CheckReport, check_linear_proof
from proof.errors import CheckFailure, format_id
from proof.linear import LinearProof, LinearProofItem, parse_id

from .models import ProofItemModel, TheoremItem
from .theory import Theory

if TYPE_CHECKING:
    from logging_system.journal import Journal

logger = logging.getLogger(__name__)

OK = "ok"
GAPS = "gaps"
FAILED = "failed"
SKIPPED = "skipped"


def linear_proof_of(item: TheoremItem) -> LinearProof:
    """
    Raises:
        ValueError: identifiant mal formé
    """
    return LinearProof([
        LinearProofItem(
            id=parse_id(step.id),
            rule=step.rule,
            args=step.args,
            prevs=[parse_id(p) for p in step.prevs],
            th=step.th,
        )
        for step in item.proof
    ])


def proof_models(proof: LinearProof, ctx=None) -> List[ProofItemModel]:
    """Éléments de preuve sous forme de fichier (textes calculés si nécessaire)."""
    return [ProofItemModel(**step.to_dict(ctx)) for step in proof.items]


@dataclass
class TheoremResult:
    """Verdict d'un théorème."""
    name: str
    index: int
    status: str
    report: Optional[CheckReport] = None
    error: Optional[str] = None
    failed_item: Optional[str] = None
    duration_ms: int = 0

    @property
    def gaps(self) -> List[str]:
        return [format_id(g) for g in self.report.gaps] if self.report else []

    @property
    def steps_checked(self) -> int:
        return self.report.steps_checked if self.report else 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "status": self.status,
            "steps_checked": self.steps_checked,
            "macro_steps_trusted": self.report.macro_steps_trusted if self.report else 0,
            "macro_steps_expanded": self.report.macro_steps_expanded if self.report else 0,
            "gaps": self.gaps,
            "error": self.error,
            "failed_item": self.failed_item,
        }


@dataclass
class TheoryCheckReport:
    """Résultat de la vérification d'une théorie : un verdict par théorème."""
    theory: str
    trust: int = 0
    no_gaps: bool = False
    results: List[TheoremResult] = field(default_factory=list)
    imports: List["TheoryCheckReport"] = field(default_factory=list)
    duration_ms: int = 0

    def _total(self, attribute: str) -> int:
        return sum(getattr(r.report, attribute) for r in self.results if r.report)

    @property
    def steps_checked(self) -> int:
        return self._total("steps_checked")

    @property
    def macro_steps_trusted(self) -> int:
        return self._total("macro_steps_trusted")

    @property
    def macro_steps_expanded(self) -> int:
        return self._total("macro_steps_expanded")

    @property
    def gaps(self) -> List[str]:
        """Théorèmes contenant au moins un sorry."""
        return [r.name for r in self.results if r.status == GAPS]

    @property
    def failures(self) -> List[str]:
        return [r.name for r in self.results if r.status == FAILED]

    @property
    def ok(self) -> bool:
        """Toutes les preuves vérifiées (et aucun trou si no_gaps)."""
        if any(not sub.ok for sub in self.imports):
            return False
        if any(r.status in (FAILED, SKIPPED) for r in self.results):
            return False
        return not (self.no_gaps and self.gaps)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "theory": self.theory,
            "ok": self.ok,
            "trust": self.trust,
            "totals": {
                "theorems": len(self.results),
                "steps_checked": self.steps_checked,
                "macro_steps_trusted": self.macro_steps_trusted,
                "macro_steps_expanded": self.macro_steps_expanded,
            },
            "theorems": [r.to_dict() for r in self.results],
            "gaps": self.gaps,
            "failures": self.failures,
            "imports": [sub.to_dict() for sub in self.imports],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)


def check_theorem(thy: Theory, index: int, item: TheoremItem, trust: TrustPolicy) -> TheoremResult:
    """
    Vérifie la preuve d'un théorème ; la conclusion doit être l'énoncé, sans
    hypothèse, sous forme nommée ou schématique.
    """
    start = time.perf_counter()
    result = TheoremResult(item.name, index, FAILED)
    entry = thy.entry(item.name)
    try:
        report = check_linear_proof(linear_proof_of(item), thy.view(index), trust, entry.vars)
        result.report = report
        if report.conclusion not in (Sequent(frozenset(), entry.sequent.prop), entry.schematic()):
            from syntax.printer import print_sequent

            result.error = (
                f"la preuve conclut {print_sequent(report.conclusion, entry.vars)}, "
                f"pas l'énoncé"
            )
        else:
            result.status = GAPS if report.gaps else OK
    except CheckFailure as e:
        result.error = e.reason
        result.failed_item = format_id(e.item_id) if e.item_id else None
    except ValueError as e:
        result.error = str(e)
    except RecursionError:
        result.error = "profondeur de récursion dépassée (terme ou expansion trop profonds)"
    result.duration_ms = int((time.perf_counter() - start) * 1000)

    if result.report is not None and item.num_gaps is not None and item.num_gaps != len(result.report.gaps):
        logger.warning(
            f"{thy.name}/{item.name}: num_gaps={item.num_gaps} mais {len(result.report.gaps)} trou(s) trouvé(s)"
        )
    return result


def check_theory(
    thy: Theory,
    trust: TrustPolicy = TrustPolicy(),
    no_gaps: bool = False,
    fail_fast: bool = False,
    with_imports: bool = False,
    journal: Optional["Journal"] = None
) -> TheoryCheckReport:
    """
    Vérifie les théorèmes dans l'ordre du fichier.

    Les énoncés importés sont admis, sauf avec with_imports où chaque théorie
    importée (transitivement) est vérifiée une fois, avant celle-ci. Une
    erreur sur un théorème est enregistrée et la vérification continue, sauf
    avec fail_fast : les théorèmes restants sont alors marqués « skipped ».
    """
    start = time.perf_counter()
    report = TheoryCheckReport(thy.name, trust.threshold, no_gaps)
    if with_imports:
        for imported in thy.closure()[:-1]:
            sub = check_theory(imported, trust, no_gaps, fail_fast, False, journal)
            report.imports.append(sub)
            if fail_fast and not sub.ok:
                break

    stop = fail_fast and not all(sub.ok for sub in report.imports)
    for index, item in thy.theorem_items():
        if stop:
            report.results.append(TheoremResult(item.name, index, SKIPPED))
            continue
        result = check_theorem(thy, index, item, trust)
        report.results.append(result)
        if journal is not None:
            journal.log_theorem_checked(
                thy.name, item.name, result.status, result.steps_checked, result.duration_ms, result.error
            )
        elif result.status == FAILED:
            logger.warning(f"{thy.name}/{item.name}: {result.error}")
        if fail_fast and (result.status == FAILED or (no_gaps and result.status == GAPS)):
            stop = True

    report.duration_ms = int((time.perf_counter() - start) * 1000)
    if journal is not None:
        journal.log_theory_checked(
            thy.name, len(report.results), len(report.failures), len(report.gaps), report.duration_ms
        )
    return report
