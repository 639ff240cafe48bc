"""
Classe abstraite de base des macros de preuve, registre et politique de confiance.
"""
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, Dict, List, Optional, Sequence

from kernel.rules import ArgKind
from kernel.sequent import Sequent

if TYPE_CHECKING:
    from kernel.rules import TheoryEnv
    from proof.proofterm import ProofNode

logger = logging.getLogger(__name__)


# =============================================================================
# Exceptions
# =============================================================================

class MacroError(Exception):
    """Erreur de base des macros."""


class UnknownMacro(MacroError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Règle ou macro inconnue: {name}")


class RegistryFrozen(MacroError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Registre des macros figé, impossible d'enregistrer {name}")


class NotClosedArithmetic(MacroError):
    """Le terme n'est pas une expression close sur les numéraux, + et *."""

    def __init__(self, term_text: str):
        self.term_text = term_text
        super().__init__(f"Expression arithmétique close attendue: {term_text}")


class NormalizationMismatch(MacroError):
    """Les deux membres n'ont pas la même forme polynomiale canonique."""

    def __init__(self, lhs: str, rhs: str):
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(f"Formes normales différentes: {lhs} <> {rhs}")


class MissingLemma(MacroError):
    """Lemme requis par une expansion absent de la théorie."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Lemme requis absent de la théorie: {name}")


# =============================================================================
# Macros
# =============================================================================

class ProofMacro(ABC):
    """
    Règle de preuve dérivée.

    eval calcule directement le séquent conclusion ; get_proof_term, quand il
    est fourni, construit une preuve du même séquent en règles plus simples.
    Plus le niveau est bas, plus la macro est digne de confiance.
    """

    name: str = ""
    level: int = 1
    arg_kind: ArgKind = ArgKind.NONE

    @abstractmethod
    def eval(self, thy: "TheoryEnv", args: Any, prevs: Sequence[Sequent]) -> Sequent:
        """
        Calcule la conclusion.

        Args:
            thy: Environnement de théorie
            args: Arguments déjà lus (forme arg_kind)
            prevs: Séquents prémisses

        Returns:
            Le séquent conclusion
        """

    def get_proof_term(
        self,
        thy: "TheoryEnv",
        args: Any,
        prevs: Sequence["ProofNode"]
    ) -> Optional["ProofNode"]:
        """Preuve détaillée de la conclusion de eval ; None si la macro ne sait pas s'expanser."""
        return None

    @property
    def can_expand(self) -> bool:
        return type(self).get_proof_term is not ProofMacro.get_proof_term

    def get_description(self) -> str:
        return (self.__doc__ or self.name).strip().splitlines()[0]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "level": self.level,
            "arg_kind": self.arg_kind.value,
            "expandable": self.can_expand,
            "description": self.get_description(),
        }


@dataclass(frozen=True)
class TrustPolicy:
    """Les macros de niveau inférieur ou égal au seuil sont acceptées sans expansion."""
    threshold: int = 0

    def __post_init__(self) -> None:
        if self.threshold < 0:
            raise ValueError(f"Seuil de confiance négatif: {self.threshold}")

    def trusts(self, macro: ProofMacro) -> bool:
        return macro.level <= self.threshold


class MacroRegistry:
    """Table nom -> macro, figée avant toute vérification."""

    def __init__(self):
        self._macros: Dict[str, ProofMacro] = {}
        self._frozen = False

    def register(self, macro: ProofMacro) -> None:
        if self._frozen:
            raise RegistryFrozen(macro.name)
        if macro.name in self._macros:
            raise MacroError(f"Macro déjà enregistrée: {macro.name}")
        self._macros[macro.name] = macro
        logger.debug(f"Macro enregistrée: {macro.name} (niveau {macro.level})")

    def freeze(self) -> None:
        self._frozen = True

    @property
    def frozen(self) -> bool:
        return self._frozen

    def get(self, name: str) -> ProofMacro:
        macro = self._macros.get(name)
        if macro is None:
            raise UnknownMacro(name)
        return macro

    def __contains__(self, name: object) -> bool:
        return name in self._macros

    def names(self) -> List[str]:
        return sorted(self._macros)


_registry: Optional[MacroRegistry] = None


def get_registry() -> MacroRegistry:
    """Registre global : les macros intégrées y sont enregistrées une fois, puis il est figé."""
    global _registry
    if _registry is None:
        from .apply_theorem import ApplyTheoremMacro
        from .nat_arith import NatArithEvalMacro
        from .nat_poly import NatNormPolyMacro

        registry = MacroRegistry()
        for macro in (ApplyTheoremMacro(), NatArithEvalMacro(), NatNormPolyMacro()):
            registry.register(macro)
        registry.freeze()
        _registry = registry
    return _registry
