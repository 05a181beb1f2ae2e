#!/usr/bin/env python3
# arglogic_toolbox.py
# Point d'entrée principal de la boîte à outils arglogic.
"""
Point d'entrée principal de la boîte à outils arglogic.

Sous-commandes: semantics, encode, models, solve, verify.
Codes de sortie: 0 succès, 1 contre-exemple, 2 entrée invalide,
3 limite de ressources dépassée, 4 singularité du système géométrique.
"""
import argparse
import logging
import sys

from cli_modules import COMMANDS
from cli_modules.common import EXIT_INPUT_ERROR, run_guarded


def build_parser() -> argparse.ArgumentParser:
    """Construit le parseur avec une sous-parseur par commande."""
    parser = argparse.ArgumentParser(
        prog='arglogic_toolbox',
        description="Encodage des frameworks d'argumentation en logiques multivaluées et floues",
    )
    subparsers = parser.add_subparsers(dest='command', metavar='COMMANDE')
    subparsers.required = True
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def configure_logging(verbose: bool):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
    )


def main(argv=None) -> int:
    """Fonction principale."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse sort avec 2 sur option invalide, 0 sur --help
        return EXIT_INPUT_ERROR if e.code else 0
    configure_logging(args.verbose)
    return run_guarded(args.handler, args)


if __name__ == "__main__":
    sys.exit(main())
