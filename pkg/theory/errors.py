"""
Exceptions du chargement et de la vérification des théories.
"""
from typing import List, Sequence, Union

PathElement = Union[str, int]


class TheoryError(Exception):
    """Erreur de base des théories."""


def format_path(path: Sequence[PathElement]) -> str:
    """Chemin dans le document JSON : content[3].proof[0].args"""
    text = ""
    for element in path:
        text += f"[{element}]" if isinstance(element, int) else (f".{element}" if text else str(element))
    return text


class SchemaError(TheoryError):
    """Document non conforme au format des fichiers de théorie."""

    def __init__(self, message: str, path: Sequence[PathElement] = ()):
        self.path: List[PathElement] = list(path)
        self.reason = message
        where = f" ({format_path(self.path)})" if self.path else ""
        super().__init__(f"Format de théorie invalide{where}: {message}")


class UnsupportedItem(TheoryError):
    """Type d'élément reconnu mais non pris en charge (types inductifs...)."""

    def __init__(self, ty: str, index: int):
        self.ty = ty
        self.index = index
        super().__init__(
            f"Élément content[{index}] de type « {ty} » non pris en charge : "
            f"axiomatiser avec type.ax, def.ax et thm.ax"
        )


class ImportCycle(TheoryError):
    def __init__(self, chain: Sequence[str]):
        self.chain = list(chain)
        super().__init__(f"Cycle d'imports: {' -> '.join(self.chain)}")


class ImportNotFound(TheoryError):
    def __init__(self, name: str, searched: Sequence[str] = ()):
        self.name = name
        self.searched = list(searched)
        where = f" (cherché dans: {', '.join(self.searched)})" if self.searched else ""
        super().__init__(f"Théorie importée introuvable: {name}{where}")


class DuplicateName(TheoryError):
    def __init__(self, name: str, theory: str = ""):
        self.name = name
        self.theory = theory
        origin = f" (déjà défini dans {theory})" if theory else ""
        super().__init__(f"Nom déjà utilisé: {name}{origin}")


class DefinitionError(TheoryError):
    """Définition refusée par les contrôles syntaxiques de conservativité."""

    def __init__(self, name: str, reason: str):
        self.name = name
        self.reason = reason
        super().__init__(f"Définition {name} refusée: {reason}")


class ItemError(TheoryError):
    """Énoncé d'un élément illisible (erreur de syntaxe, de type ou de signature)."""

    def __init__(self, theory: str, index: int, name: str, cause: Exception):
        self.theory = theory
        self.index = index
        self.name = name
        self.cause = cause
        super().__init__(f"{theory}: content[{index}] {name}: {cause}")

