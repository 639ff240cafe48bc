"""
Interface en ligne de commande du vérificateur de théories.

Codes de sortie : 0 si tout est vérifié, 1 si une preuve est refusée (ou
contient un trou avec --no-gaps), 2 si une théorie ne peut pas être chargée.
"""
import json
import logging
import random
import sys
import time
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import click
from rich.console import Console
from rich.table import Table

from config import Config, set_config
from kernel.errors import KernelError, UnknownTheorem
from logging_system.journal import Journal
from macros.base import MacroError, TrustPolicy
from proof.errors import CheckFailure, ExpansionMismatch, NoExpansion
from syntax.errors import ParseError, TypeInferenceError
from theory.errors import TheoryError

console = Console()
err_console = Console(stderr=True)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_LOAD_ERROR = 2

LOAD_ERRORS = (TheoryError, ParseError, TypeInferenceError, KernelError, OSError)

DEFAULT_BENCH_BITS = "4,8,16,32,64"


# =============================================================================
# Configuration et utilitaires
# =============================================================================

def _configure(
    trust: Optional[int] = None,
    budget: Optional[int] = None,
    paths: Sequence[str] = (),
    no_gaps: bool = False,
    fail_fast: bool = False,
    with_imports: bool = False
) -> Config:
    """Options > environnement > valeurs par défaut ; la configuration est relue à chaque commande."""
    config = Config()
    if trust is not None:
        config.checker.trust = trust
    if budget is not None:
        config.checker.step_budget = budget
    config.checker.no_gaps = no_gaps
    config.checker.fail_fast = fail_fast
    config.checker.with_imports = with_imports
    config.paths.search_path = [Path(p) for p in paths] + list(config.paths.search_path)
    set_config(config)
    logging.basicConfig(
        level=getattr(logging, config.logging.level.upper(), logging.WARNING),
        format=config.logging.format,
        stream=sys.stderr,
        force=True,
    )
    return config


def _load(path: str, config: Config, journal: Journal):
    """Charge une théorie ; toute erreur termine la commande avec le code 2."""
    from theory.loader import TheoryLoader

    start = time.perf_counter()
    try:
        thy = TheoryLoader(config.paths.search_path).load_file(path)
    except LOAD_ERRORS as e:
        err_console.print(f"[red]Erreur de chargement[/red] {path}: {e}")
        journal.error(str(e), source="loader")
        sys.exit(EXIT_LOAD_ERROR)
    journal.log_theory_loaded(
        thy.name, str(path), len(thy.document.content), int((time.perf_counter() - start) * 1000)
    )
    return thy


def _status_style(status: str) -> str:
    return {"ok": "green", "gaps": "yellow", "failed": "red", "skipped": "dim"}.get(status, "white")


common_options = [
    click.option("--trust", type=click.IntRange(min=0), default=None,
                 help="Seuil de confiance : macros de niveau <= N admises sans expansion"),
    click.option("--path", "paths", multiple=True, type=click.Path(file_okay=False),
                 help="Répertoire de recherche des imports (répétable, prioritaire sur HOLCHECK_PATH)"),
    click.option("--budget", type=click.IntRange(min=1), default=None,
                 help="Nombre maximal de réécritures par parcours de conversion"),
    click.option("--report", "report_format", type=click.Choice(["human", "json"]), default="human",
                 help="Format du rapport sur la sortie standard"),
]


def with_common_options(func):
    for option in reversed(common_options):
        func = option(func)
    return func


@click.group()
@click.version_option(version="1.0.0", prog_name="holcheck")
def cli():
    """
    Vérificateur indépendant de théories en logique d'ordre supérieur.

    Charge les théories (format JSON) et leurs imports, revérifie chaque
    preuve avec un noyau de règles primitives et expanse les macros non
    admises jusqu'aux règles primitives.
    """
    pass


# =============================================================================
# check
# =============================================================================

@cli.command("check")
@click.argument("theories", nargs=-1, required=True, type=click.Path(exists=True, dir_okay=False))
@with_common_options
@click.option("--no-gaps", is_flag=True, help="Refuser les preuves contenant sorry")
@click.option("--fail-fast", is_flag=True, help="S'arrêter au premier théorème refusé")
@click.option("--with-imports", is_flag=True, help="Vérifier aussi les théories importées")
def check(
    theories: Tuple[str, ...],
    trust: Optional[int],
    paths: Tuple[str, ...],
    budget: Optional[int],
    report_format: str,
    no_gaps: bool,
    fail_fast: bool,
    with_imports: bool
):
    """Vérifie toutes les preuves des théories données."""
    from theory.checker import check_theory

    config = _configure(trust, budget, paths, no_gaps, fail_fast, with_imports)
    journal = Journal.from_config(config)
    policy = TrustPolicy(config.checker.trust)

    loaded = [_load(path, config, journal) for path in theories]
    reports = []
    for thy in loaded:
        report = check_theory(
            thy,
            policy,
            no_gaps=config.checker.no_gaps,
            fail_fast=config.checker.fail_fast,
            with_imports=config.checker.with_imports,
            journal=journal,
        )
        reports.append(report)
        if config.checker.fail_fast and not report.ok:
            break

    ok = all(r.ok for r in reports) and len(reports) == len(loaded)
    if report_format == "json":
        click.echo(json.dumps({"ok": ok, "theories": [r.to_dict() for r in reports]}, indent=2, ensure_ascii=False))
    else:
        for report in reports:
            for sub in report.imports:
                _print_check_report(sub)
            _print_check_report(report)
    journal.close()
    sys.exit(EXIT_OK if ok else EXIT_FAILED)


def _print_check_report(report) -> None:
    table = Table(title=f"Théorie {report.theory} (confiance {report.trust})")
    table.add_column("Théorème", style="cyan")
    table.add_column("Statut")
    table.add_column("Étapes", justify="right")
    table.add_column("Macros admises", justify="right")
    table.add_column("Macros expansées", justify="right")
    table.add_column("Trous", justify="right")
    for result in report.results:
        table.add_row(
            result.name,
            f"[{_status_style(result.status)}]{result.status}[/]",
            str(result.steps_checked),
            str(result.report.macro_steps_trusted if result.report else 0),
            str(result.report.macro_steps_expanded if result.report else 0),
            str(len(result.gaps)),
        )
    console.print(table)
    for result in report.results:
        if result.error:
            where = f" (élément {result.failed_item})" if result.failed_item else ""
            err_console.print(f"[red]✗[/red] {report.theory}/{result.name}{where}: {result.error}")
    verdict = "[green]✓ vérifiée[/green]" if report.ok else "[red]✗ refusée[/red]"
    console.print(
        f"{verdict} {report.theory}: {len(report.results)} théorèmes, "
        f"{report.steps_checked} étapes, {len(report.gaps)} avec trous, {report.duration_ms}ms"
    )


# =============================================================================
# expand
# =============================================================================

@cli.command("expand")
@click.argument("theory_path", type=click.Path(exists=True, dir_okay=False))
@click.argument("theorem")
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None,
              help="Fichier de sortie (sortie standard par défaut)")
@click.option("--path", "paths", multiple=True, type=click.Path(file_okay=False),
              help="Répertoire de recherche des imports (répétable)")
@click.option("--budget", type=click.IntRange(min=1), default=None,
              help="Nombre maximal de réécritures par parcours de conversion")
def expand(theory_path: str, theorem: str, out_path: Optional[str], paths: Tuple[str, ...], budget: Optional[int]):
    """Remplace la preuve d'un théorème par sa version entièrement expansée."""
    from theory.expand import expand_theorem
    from theory.loader import dump_document, save_document

    config = _configure(None, budget, paths)
    journal = Journal.from_config(config)
    thy = _load(theory_path, config, journal)
    try:
        result = expand_theorem(thy, theorem)
    except UnknownTheorem as e:
        err_console.print(f"[red]{e}[/red]")
        sys.exit(EXIT_LOAD_ERROR)
    except (CheckFailure, NoExpansion, ExpansionMismatch, MacroError, KernelError, ValueError) as e:
        err_console.print(f"[red]Expansion impossible[/red] {thy.name}/{theorem}: {e}")
        sys.exit(EXIT_FAILED)

    journal.log_expansion(thy.name, theorem, result.items_before, result.items_after)
    if out_path:
        save_document(result.document, out_path)
        err_console.print(
            f"[green]✓[/green] {theorem}: {result.items_before} -> {result.items_after} éléments, écrit dans {out_path}"
        )
    else:
        click.echo(dump_document(result.document), nl=False)
    journal.close()


# =============================================================================
# stats
# =============================================================================

def _parse_bits(text: str) -> List[int]:
    try:
        bits = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"liste d'entiers attendue: {text!r}")
    if any(k < 1 for k in bits):
        raise click.BadParameter("les tailles doivent être positives")
    return bits


def theorem_stats(thy, trust: TrustPolicy) -> List[Dict[str, Any]]:
    """Taille de chaque preuve, étapes au seuil donné et entièrement expansée."""
    from theory.checker import check_theorem

    rows = []
    for index, item in thy.theorem_items():
        at_trust = check_theorem(thy, index, item, trust)
        expanded = at_trust if trust.threshold == 0 else check_theorem(thy, index, item, TrustPolicy(0))
        items = len(item.proof)
        rows.append({
            "name": item.name,
            "status": expanded.status,
            "items": items,
            "steps": at_trust.steps_checked,
            "steps_expanded": expanded.steps_checked,
            "ratio": round(expanded.steps_checked / items, 2) if items else None,
        })
    return rows


def arith_benchmark(thy, bits: Sequence[int], seed: int) -> List[Dict[str, Any]]:
    """
    Une preuve d'un seul élément nat_arith_eval par taille k (a + b, opérandes
    de k bits tirés avec la graine donnée), vérifiée admise puis expansée.
    """
    from macros.numerals import mk_numeral, mk_plus
    from proof.checker import check_linear_proof
    from proof.linear import LinearProof, LinearProofItem

    rng = random.Random(seed)
    rows = []
    for k in bits:
        a = rng.randrange(2 ** (k - 1), 2 ** k)
        b = rng.randrange(2 ** (k - 1), 2 ** k)
        proof = LinearProof([LinearProofItem((0,), "nat_arith_eval", value=mk_plus(mk_numeral(a), mk_numeral(b)))])
        macro = check_linear_proof(proof, thy, TrustPolicy(1))
        expanded = check_linear_proof(proof, thy, TrustPolicy(0))
        rows.append({
            "bits": k,
            "lhs": f"{a} + {b}",
            "steps_macro": macro.steps_checked,
            "steps_expanded": expanded.steps_checked,
            "ratio": round(expanded.steps_checked / macro.steps_checked, 2),
        })
    return rows


@cli.command("stats")
@click.argument("theory_path", type=click.Path(exists=True, dir_okay=False))
@with_common_options
@click.option("--bench-bits", default=None,
              help=f"Tailles d'opérandes du banc d'essai arithmétique (ex. {DEFAULT_BENCH_BITS})")
@click.option("--seed", type=int, default=0, help="Graine des opérandes du banc d'essai")
def stats(
    theory_path: str,
    trust: Optional[int],
    paths: Tuple[str, ...],
    budget: Optional[int],
    report_format: str,
    bench_bits: Optional[str],
    seed: int
):
    """Compare les tailles des preuves avec macros et entièrement expansées."""
    config = _configure(trust, budget, paths)
    journal = Journal.from_config(config)
    thy = _load(theory_path, config, journal)
    policy = TrustPolicy(config.checker.trust)
    bits = _parse_bits(bench_bits) if bench_bits else []

    rows = theorem_stats(thy, policy)
    try:
        bench = arith_benchmark(thy, bits, seed)
    except (CheckFailure, MacroError, KernelError) as e:
        err_console.print(f"[red]Banc d'essai impossible[/red]: {e}")
        sys.exit(EXIT_FAILED)

    if report_format == "json":
        document = {"theory": thy.name, "trust": policy.threshold, "theorems": rows, "bench": bench}
        click.echo(json.dumps(document, indent=2, ensure_ascii=False))
    else:
        table = Table(title=f"Théorie {thy.name} (confiance {policy.threshold})")
        table.add_column("Théorème", style="cyan")
        table.add_column("Éléments", justify="right")
        table.add_column("Étapes", justify="right")
        table.add_column("Expansées", justify="right")
        table.add_column("Ratio", justify="right")
        for row in rows:
            table.add_row(row["name"], str(row["items"]), str(row["steps"]),
                          str(row["steps_expanded"]), str(row["ratio"]))
        console.print(table)
        if bench:
            bench_table = Table(title=f"nat_arith_eval : a + b sur k bits (graine {seed})")
            bench_table.add_column("k", justify="right")
            bench_table.add_column("Macro", justify="right")
            bench_table.add_column("Expansée", justify="right")
            bench_table.add_column("Ratio", justify="right")
            for row in bench:
                bench_table.add_row(str(row["bits"]), str(row["steps_macro"]),
                                    str(row["steps_expanded"]), str(row["ratio"]))
            console.print(bench_table)
    journal.close()
    failed = any(row["status"] == "failed" for row in rows)
    sys.exit(EXIT_FAILED if failed else EXIT_OK)
