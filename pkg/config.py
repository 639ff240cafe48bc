"""
Configuration globale du vérificateur de théories.

Les valeurs par défaut sont lues dans l'environnement (éventuellement
chargé depuis un fichier .env par main.py) ; les options de la ligne de
commande les remplacent.
"""
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name, "").strip()
    if not value:
        return default
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"Variable {name} invalide (entier attendu): {value!r}")


def _env_path(name: str) -> Optional[Path]:
    value = os.getenv(name, "").strip()
    return Path(value) if value else None


def split_search_path(value: str) -> List[Path]:
    """Découpe une liste de répertoires séparés par le séparateur de la plateforme."""
    return [Path(p) for p in value.split(os.pathsep) if p.strip()]


@dataclass
class CheckerConfig:
    """Configuration de la vérification."""
    # Les macros de niveau <= trust sont acceptées sans expansion
    trust: int = field(default_factory=lambda: _env_int("HOLCHECK_TRUST", 0))

    # Nombre maximal de réécritures par parcours de conversion
    step_budget: int = field(default_factory=lambda: _env_int("HOLCHECK_BUDGET", 100000))

    no_gaps: bool = False
    fail_fast: bool = False
    with_imports: bool = False


@dataclass
class PathConfig:
    """Chemins de recherche des théories importées."""
    search_path: List[Path] = field(
        default_factory=lambda: split_search_path(os.getenv("HOLCHECK_PATH", ""))
    )


@dataclass
class LoggingConfig:
    """Configuration de la journalisation."""
    level: str = field(default_factory=lambda: os.getenv("HOLCHECK_LOG_LEVEL", "WARNING"))
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    file_path: Optional[Path] = field(default_factory=lambda: _env_path("HOLCHECK_LOG_FILE"))
    json_path: Optional[Path] = field(default_factory=lambda: _env_path("HOLCHECK_LOG_JSON"))
    max_file_size: int = 10 * 1024 * 1024  # 10 MB
    backup_count: int = 5


@dataclass
class Config:
    """Configuration principale."""
    base_path: Path = field(default_factory=lambda: Path(__file__).parent)

    checker: CheckerConfig = field(default_factory=CheckerConfig)
    paths: PathConfig = field(default_factory=PathConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)

    @property
    def theories_path(self) -> Path:
        """Répertoire des théories livrées avec l'outil."""
        return self.base_path / "theories"


# Instance globale de configuration
_config: Optional[Config] = None


def get_config() -> Config:
    """Retourne l'instance de configuration globale."""
    global _config
    if _config is None:
        _config = Config()
    return _config


def set_config(config: Config) -> None:
    """Définit l'instance de configuration globale."""
    global _config
    _config = config


def reset_config() -> None:
    """Oublie la configuration courante (relue depuis l'environnement au prochain accès)."""
    global _config
    _config = None
