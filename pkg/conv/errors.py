"""
Exceptions des conversions.
"""


class ConversionError(Exception):
    """Échec d'une conversion ; récupérable par les combinateurs, sauf BudgetExceeded."""


class ShapeMismatch(ConversionError):
    """Le terme n'a pas la forme attendue (application, abstraction, opérateur binaire)."""

    def __init__(self, conv_name: str, expected: str):
        self.conv_name = conv_name
        self.expected = expected
        super().__init__(f"{conv_name}: {expected} attendu")


class NotAnEquation(ConversionError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Le théorème {name} n'est pas une égalité")


class BudgetExceeded(ConversionError):
    def __init__(self, limit: int):
        self.limit = limit
        super().__init__(f"Budget de {limit} étapes de réécriture dépassé")
