"""
Exceptions de la syntaxe concrète.
"""
from typing import Optional


class ParseError(Exception):
    """Texte non conforme à la grammaire."""

    def __init__(self, message: str, position: Optional[int] = None, expected: str = ""):
        self.position = position
        self.expected = expected
        self.reason = message
        where = f" (position {position})" if position is not None else ""
        hint = f", attendu: {expected}" if expected else ""
        super().__init__(f"{message}{where}{hint}")


class TypeInferenceError(Exception):
    """Types ambigus ou contradictoires lors de l'élaboration d'un terme."""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        self.reason = message
        where = f" (position {position})" if position is not None else ""
        super().__init__(f"Inférence de types: {message}{where}")
