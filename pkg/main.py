#!/usr/bin/env python3
"""
Point d'entrée du vérificateur de théories holcheck.

Usage:
    python main.py check theories/logic_base.json
    python main.py check --trust 1 --report json theories/nat.json
    python main.py expand theories/nat.json add_2_3 --out /tmp/nat.json
    python main.py stats theories/nat.json --bench-bits 4,8,16,32,64

Pour plus d'options: python main.py --help
"""
import sys
from pathlib import Path

# Ajouter le répertoire courant au path pour les imports
sys.path.insert(0, str(Path(__file__).parent))

# Charger les variables d'environnement depuis .env
from dotenv import load_dotenv
load_dotenv()

from interface.cli import cli


def main():
    """Point d'entrée principal."""
    try:
        cli()
    except KeyboardInterrupt:
        print("\nInterruption par l'utilisateur", file=sys.stderr)
        sys.exit(130)


if __name__ == "__main__":
    main()
