"""
Chargement des fichiers de théorie, résolution des imports et écriture canonique.
"""
import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

from .errors import ImportCycle, ImportNotFound, SchemaError
from .models import TheoryFile, document_to_dict, parse_document
from .theory import Theory

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

THEORY_SUFFIX = ".json"


class TheoryLoader:
    """
    Charge des théories et leurs imports ; chaque théorie est chargée une
    seule fois (cache par nom).

    Un import « nat » est cherché sous la forme nat.json dans le chemin de
    recherche, puis dans le répertoire du fichier qui l'importe.
    """

    def __init__(self, search_path: Sequence[PathLike] = ()):
        self.search_path: List[Path] = [Path(p) for p in search_path]
        self._cache: Dict[str, Theory] = {}
        self._loading: List[str] = []

    @property
    def loaded(self) -> Dict[str, Theory]:
        return dict(self._cache)

    def resolve(self, name: str, base_dir: Optional[Path] = None) -> Path:
        """
        Raises:
            ImportNotFound: aucun fichier <name>.json dans les répertoires
        """
        directories = list(self.search_path)
        if base_dir is not None:
            directories.append(base_dir)
        for directory in directories:
            candidate = directory / f"{name}{THEORY_SUFFIX}"
            if candidate.is_file():
                return candidate
        raise ImportNotFound(name, [str(d) for d in directories])

    def load(self, name: str, base_dir: Optional[Path] = None) -> Theory:
        """Charge la théorie nommée (recherche dans le chemin)."""
        if name in self._cache:
            return self._cache[name]
        if name in self._loading:
            raise ImportCycle(self._loading[self._loading.index(name):] + [name])
        return self.load_file(self.resolve(name, base_dir))

    def load_file(self, path: PathLike) -> Theory:
        """
        Raises:
            SchemaError, UnsupportedItem: document invalide
            ImportCycle, ImportNotFound: imports non résolus
            ItemError, DuplicateName, DefinitionError: éléments refusés
        """
        path = Path(path)
        document = read_document(path)
        cached = self._cache.get(document.name)
        if cached is not None:
            return cached
        if document.name in self._loading:
            raise ImportCycle(self._loading[self._loading.index(document.name):] + [document.name])

        self._loading.append(document.name)
        try:
            parents = [self.load(name, path.parent) for name in document.imports]
        finally:
            self._loading.pop()
        theory = Theory(document, parents)
        self._cache[document.name] = theory
        logger.info(f"Théorie chargée: {document.name} ({path})")
        return theory


def read_document(path: PathLike) -> TheoryFile:
    """Lit et valide un fichier sans résoudre ses imports."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise SchemaError(f"JSON invalide ligne {e.lineno}, colonne {e.colno}: {e.msg}") from e
    return parse_document(data)


def load_theory(path: PathLike, search_path: Sequence[PathLike] = ()) -> Theory:
    """Charge un fichier de théorie et ses imports."""
    return TheoryLoader(search_path).load_file(path)


def dump_document(document: TheoryFile) -> str:
    """Texte canonique : indentation de 2, UTF-8 sans échappement, saut de ligne final."""
    return json.dumps(document_to_dict(document), indent=2, ensure_ascii=False) + "\n"


def save_document(document: TheoryFile, path: PathLike) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_document(document), encoding="utf-8")


def save_theory(thy: Theory, path: PathLike) -> None:
    """Écrit la théorie sous forme canonique."""
    save_document(thy.document, path)
