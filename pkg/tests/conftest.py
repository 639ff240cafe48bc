"""
Fixtures partagées : théories livrées, signatures et lecture de termes.
"""
import sys
from pathlib import Path

import pytest

# Rendre la racine du projet importable
PROJECT_ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

THEORIES_DIR = PROJECT_ROOT / "theories"
GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture(autouse=True)
def _isolated_config(monkeypatch):
    """Chaque test relit une configuration sans variables HOLCHECK_*."""
    from config import reset_config

    for name in ("HOLCHECK_TRUST", "HOLCHECK_BUDGET", "HOLCHECK_PATH", "HOLCHECK_LOG_LEVEL",
                 "HOLCHECK_LOG_FILE", "HOLCHECK_LOG_JSON"):
        monkeypatch.delenv(name, raising=False)
    reset_config()
    yield
    reset_config()


@pytest.fixture(scope="session")
def loader():
    from theory.loader import TheoryLoader

    return TheoryLoader([THEORIES_DIR])


@pytest.fixture(scope="session")
def logic_thy(loader):
    return loader.load("logic_base")


@pytest.fixture(scope="session")
def nat_thy(loader):
    return loader.load("nat")


@pytest.fixture(scope="session")
def sig(nat_thy):
    """Signature complète : bool, nat, connecteurs et arithmétique."""
    return nat_thy.signature


@pytest.fixture(scope="session")
def ctx():
    """Variables libres usuelles des tests."""
    from kernel.hol_type import BoolType, NatType, TypeVariable, fun_type

    return {
        "A": BoolType, "B": BoolType, "C": BoolType,
        "x": NatType, "y": NatType, "z": NatType,
        "f": fun_type(NatType, NatType),
        "P": fun_type(NatType, BoolType),
        "u": TypeVariable("a"), "v": TypeVariable("a"),
    }


@pytest.fixture(scope="session")
def term(sig, ctx):
    """Lit un terme dans la signature complète, avec le contexte ctx."""
    from syntax.parser import parse_term

    def read(text: str):
        return parse_term(text, ctx, sig)

    return read


@pytest.fixture(scope="session")
def seq(sig, ctx):
    from syntax.parser import parse_sequent

    def read(text: str):
        return parse_sequent(text, ctx, sig)

    return read
