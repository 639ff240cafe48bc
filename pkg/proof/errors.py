"""
Exceptions de la vérification des preuves.
"""
from typing import Tuple

ItemId = Tuple[int, ...]


def format_id(item_id: ItemId) -> str:
    """Rend un identifiant pointé « n1.n2...nk »."""
    return ".".join(str(n) for n in item_id)


class CheckFailure(Exception):
    """Élément de preuve refusé."""

    def __init__(self, item_id: ItemId, reason: str):
        self.item_id = tuple(item_id)
        self.reason = reason
        super().__init__(f"Élément {format_id(self.item_id)}: {reason}")


class NoExpansion(Exception):
    """La macro ne sait pas produire de preuve détaillée."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"La macro {name} ne fournit pas d'expansion")


class ExpansionMismatch(Exception):
    """L'expansion d'une macro ne prouve pas le séquent annoncé."""

    def __init__(self, name: str, reason: str = ""):
        self.name = name
        super().__init__(f"Expansion de {name} incorrecte" + (f": {reason}" if reason else ""))
