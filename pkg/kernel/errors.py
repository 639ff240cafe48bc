"""
Exceptions du noyau logique.
"""
from typing import Optional, Sequence, Tuple


class KernelError(Exception):
    """Erreur de base du noyau."""


class SignatureError(KernelError):
    """Redéclaration incompatible d'un constructeur de type ou d'une constante."""


class HolTypeError(KernelError):
    """Terme mal typé (application incorrecte, constante inconnue, indice hors bornes)."""

    def __init__(self, message: str, path: Sequence[str] = ()):
        self.path: Tuple[str, ...] = tuple(path)
        where = "/".join(self.path) or "racine"
        super().__init__(f"{message} (à {where})")


class InstantiationTypeMismatch(KernelError):
    """Le terme affecté à une variable schématique n'a pas le bon type."""

    def __init__(self, name: str, message: str = ""):
        self.name = name
        super().__init__(f"Instanciation mal typée pour ?{name}" + (f": {message}" if message else ""))


class MatchFailure(KernelError):
    """Aucune extension de l'instanciation ne rend le motif égal à la cible."""

    def __init__(
        self,
        message: str,
        path: Sequence[str] = (),
        index: Optional[int] = None
    ):
        self.path: Tuple[str, ...] = tuple(path)
        self.index = index
        self.reason = message
        super().__init__(self._format())

    def _format(self) -> str:
        where = "/".join(self.path) or "racine"
        prefix = f"[{self.index}] " if self.index is not None else ""
        return f"{prefix}Échec du filtrage: {self.reason} (à {where})"

    def with_index(self, index: int) -> "MatchFailure":
        """Retourne la même erreur annotée avec la position dans la liste."""
        self.index = index
        self.args = (self._format(),)
        return self


class ConflictingAssignment(MatchFailure):
    """Une variable schématique reçoit deux valeurs différentes."""

    def __init__(self, name: str, path: Sequence[str] = ()):
        self.name = name
        super().__init__(f"affectations incompatibles pour ?{name}", path)


class LengthMismatch(KernelError):
    """Listes de motifs et de cibles de longueurs différentes."""

    def __init__(self, expected: int, got: int):
        self.expected = expected
        self.got = got
        super().__init__(f"Longueurs différentes: {expected} motifs pour {got} cibles")


class RuleMismatch(KernelError):
    """Règle appliquée avec une mauvaise arité, une mauvaise forme ou une condition violée."""

    def __init__(self, rule: str, reason: str):
        self.rule = rule
        self.reason = reason
        super().__init__(f"Règle {rule}: {reason}")


class UnknownTheorem(KernelError):
    """Théorème absent de l'environnement."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Théorème inconnu: {name}")
