"""
Système de journalisation du vérificateur.

Les diagnostics vont sur la sortie d'erreur ; les rapports restent seuls sur
la sortie standard.
"""
import json
import logging
import sys
from dataclasses import asdict, dataclass, field
from datetime import datetime
from enum import Enum
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import IO, Any, Dict, Optional

from config import Config, get_config


class NiveauLog(Enum):
    """Niveaux de log."""
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"


@dataclass
class EntreeJournal:
    """Entrée de journal structurée."""
    timestamp: datetime
    niveau: NiveauLog
    message: str
    source: str
    metadata: Dict[str, Any] = field(default_factory=dict)
    theorie: Optional[str] = None
    theoreme: Optional[str] = None
    duree_ms: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convertit en dictionnaire."""
        d = asdict(self)
        d["timestamp"] = self.timestamp.isoformat()
        d["niveau"] = self.niveau.value
        return d

    def to_json(self) -> str:
        """Convertit en JSON."""
        return json.dumps(self.to_dict(), ensure_ascii=False, default=str)


class Journal:
    """
    Journal centralisé.

    Fonctionnalités :
    - Sortie console sur stderr
    - Fichier texte avec rotation (optionnel)
    - Fichier JSON lines structuré (optionnel)
    """

    def __init__(
        self,
        nom: str = "holcheck",
        niveau: str = "WARNING",
        log_file: Optional[Path] = None,
        json_path: Optional[Path] = None,
        max_file_size: int = 10 * 1024 * 1024,  # 10 MB
        backup_count: int = 5,
        console_output: bool = True,
        stream: Optional[IO[str]] = None,
        log_format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    ):
        """
        Initialise le journal.

        Args:
            nom: Nom du logger
            niveau: Niveau de log (DEBUG, INFO, WARNING, ERROR, CRITICAL)
            log_file: Fichier texte avec rotation (optionnel)
            json_path: Fichier JSON lines (optionnel)
            max_file_size: Taille max du fichier avant rotation
            backup_count: Nombre de fichiers de sauvegarde
            console_output: Activer la sortie console
            stream: Flux de la console (stderr par défaut)
            log_format: Format des lignes texte
        """
        self.nom = nom
        self.niveau = getattr(logging, niveau.upper(), logging.WARNING)

        self.logger = logging.getLogger(nom)
        self.logger.setLevel(self.niveau)
        self.logger.handlers.clear()
        self.logger.propagate = False

        self._formatter = logging.Formatter(log_format)

        if console_output:
            console_handler = logging.StreamHandler(stream or sys.stderr)
            console_handler.setLevel(self.niveau)
            console_handler.setFormatter(self._formatter)
            self.logger.addHandler(console_handler)

        if log_file:
            self._setup_file_handler(log_file, max_file_size, backup_count)

        self.json_log_path = json_path
        self._json_file: Optional[IO[str]] = None
        if json_path:
            json_path.parent.mkdir(parents=True, exist_ok=True)
            self._json_file = open(json_path, "a", encoding="utf-8")

    @classmethod
    def from_config(cls, config: Optional[Config] = None, **kwargs) -> "Journal":
        """Journal configuré depuis la section logging de la configuration."""
        section = (config or get_config()).logging
        return cls(
            niveau=section.level,
            log_file=section.file_path,
            json_path=section.json_path,
            max_file_size=section.max_file_size,
            backup_count=section.backup_count,
            log_format=section.format,
            **kwargs
        )

    def _setup_file_handler(self, log_file: Path, max_size: int, backup_count: int) -> None:
        """Configure le handler de fichier avec rotation."""
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = RotatingFileHandler(
            log_file,
            maxBytes=max_size,
            backupCount=backup_count,
            encoding="utf-8"
        )
        file_handler.setLevel(self.niveau)
        file_handler.setFormatter(self._formatter)
        self.logger.addHandler(file_handler)

    def _write_json(self, entree: EntreeJournal) -> None:
        if self._json_file is None:
            return
        try:
            self._json_file.write(entree.to_json() + "\n")
            self._json_file.flush()
        except OSError as e:
            self.logger.error(f"Erreur écriture JSON: {e}")

    def _log(
        self,
        niveau: NiveauLog,
        message: str,
        source: str = "holcheck",
        theorie: Optional[str] = None,
        theoreme: Optional[str] = None,
        duree_ms: Optional[int] = None,
        **metadata
    ) -> None:
        """
        Enregistre une entrée.

        Args:
            niveau: Niveau de log
            message: Message
            source: Source du log
            theorie: Théorie concernée (optionnel)
            theoreme: Théorème concerné (optionnel)
            duree_ms: Durée en millisecondes (optionnel)
            **metadata: Métadonnées supplémentaires
        """
        entree = EntreeJournal(
            timestamp=datetime.now(),
            niveau=niveau,
            message=message,
            source=source,
            theorie=theorie,
            theoreme=theoreme,
            duree_ms=duree_ms,
            metadata=metadata
        )

        prefixes = [f"[{source}]"]
        if theorie:
            prefixes.append(f"[{theorie}{'/' + theoreme if theoreme else ''}]")
        getattr(self.logger, niveau.value.lower())(" ".join(prefixes + [message]))

        self._write_json(entree)

    def debug(self, message: str, source: str = "holcheck", **kwargs) -> None:
        self._log(NiveauLog.DEBUG, message, source, **kwargs)

    def info(self, message: str, source: str = "holcheck", **kwargs) -> None:
        self._log(NiveauLog.INFO, message, source, **kwargs)

    def warning(self, message: str, source: str = "holcheck", **kwargs) -> None:
        self._log(NiveauLog.WARNING, message, source, **kwargs)

    def error(self, message: str, source: str = "holcheck", **kwargs) -> None:
        self._log(NiveauLog.ERROR, message, source, **kwargs)

    # =========================================================================
    # Logs spécialisés
    # =========================================================================

    def log_theory_loaded(self, theorie: str, chemin: str, nb_elements: int, duree_ms: int) -> None:
        """Log le chargement d'une théorie."""
        self.info(
            f"Chargée: {chemin} ({nb_elements} éléments, {duree_ms}ms)",
            source="loader",
            theorie=theorie,
            duree_ms=duree_ms,
            chemin=chemin,
            nb_elements=nb_elements
        )

    def log_theorem_checked(
        self,
        theorie: str,
        theoreme: str,
        statut: str,
        etapes: int,
        duree_ms: int,
        erreur: Optional[str] = None
    ) -> None:
        """Log la vérification d'un théorème ; un échec est un avertissement."""
        niveau = NiveauLog.WARNING if statut == "failed" else NiveauLog.INFO
        self._log(
            niveau,
            f"{statut} ({etapes} étapes, {duree_ms}ms)" + (f" - {erreur}" if erreur else ""),
            source="checker",
            theorie=theorie,
            theoreme=theoreme,
            duree_ms=duree_ms,
            statut=statut,
            etapes=etapes
        )

    def log_theory_checked(
        self,
        theorie: str,
        nb_theoremes: int,
        nb_echecs: int,
        nb_gaps: int,
        duree_ms: int
    ) -> None:
        """Log le bilan de la vérification d'une théorie."""
        niveau = NiveauLog.INFO if nb_echecs == 0 else NiveauLog.WARNING
        self._log(
            niveau,
            f"{nb_theoremes} théorèmes, {nb_echecs} échecs, {nb_gaps} avec trous ({duree_ms}ms)",
            source="checker",
            theorie=theorie,
            duree_ms=duree_ms,
            nb_theoremes=nb_theoremes,
            nb_echecs=nb_echecs,
            nb_gaps=nb_gaps
        )

    def log_expansion(self, theorie: str, theoreme: str, etapes_avant: int, etapes_apres: int) -> None:
        """Log l'expansion complète d'une preuve."""
        self.info(
            f"Expansée: {etapes_avant} -> {etapes_apres} éléments",
            source="expand",
            theorie=theorie,
            theoreme=theoreme,
            etapes_avant=etapes_avant,
            etapes_apres=etapes_apres
        )

    def close(self) -> None:
        """Ferme le fichier JSON et détache les handlers."""
        if self._json_file is not None:
            self._json_file.close()
            self._json_file = None
        for handler in list(self.logger.handlers):
            handler.close()
            self.logger.removeHandler(handler)
