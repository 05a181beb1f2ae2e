# cli_modules/common.py
"""
Fonctions utilitaires partagées par les sous-commandes de la ligne de commande.
"""
import argparse
import json
import logging
import sys
from typing import Any, Callable, Iterable, Optional

from arglogic.converters import load_framework
from arglogic.exceptions import ArgLogicError, GeometricalSingularityError, ResourceLimitError
from arglogic.models.framework import ArgumentationFramework
from arglogic.utils.config_manager import Limits, get_limits, load_config

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_LIMIT = 3
EXIT_SINGULARITY = 4


def positive_int(text: str) -> int:
    """Type argparse: entier strictement positif."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"entier attendu: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"entier >= 1 attendu: {value}")
    return value


def add_input_argument(parser: argparse.ArgumentParser, optional: bool = False):
    """Ajoute l'argument d'entrée (chemin ou '-') et son format."""
    parser.add_argument('input', nargs='?' if optional else None,
                        help="Fichier APX/TGF, ou '-' pour l'entrée standard")
    parser.add_argument('--format', choices=['apx', 'tgf', 'auto'], default='auto',
                        help="Format d'entrée (auto: selon l'extension, APX par défaut)")


def add_common_arguments(parser: argparse.ArgumentParser):
    """Options communes à toutes les sous-commandes."""
    parser.add_argument('--output', choices=['json', 'text'], default='json', help='Format de sortie')
    parser.add_argument('--max-args', type=positive_int, help="Nombre maximal d'arguments énumérés")
    parser.add_argument('--max-grid-points', type=positive_int, help='Nombre maximal de points de grille')
    parser.add_argument('--config', help='Fichier de configuration INI')
    parser.add_argument('--verbose', '-v', action='store_true', help='Journalisation détaillée')


def get_config(args: argparse.Namespace):
    """Charge (une seule fois) la configuration désignée par --config."""
    if getattr(args, '_config', None) is None:
        args._config = load_config(args.config)
    return args._config


def get_cli_limits(args: argparse.Namespace) -> Limits:
    """Limites effectives: options, puis ARGLOGIC_MAX_ARGS, puis configuration."""
    return get_limits(get_config(args), max_args=args.max_args, max_grid_points=args.max_grid_points)


def read_framework(args: argparse.Namespace, stdin=None) -> ArgumentationFramework:
    af = load_framework(args.input, args.format, stdin=stdin)
    logger.debug(f"Framework chargé: {len(af)} argument(s), {len(af.attacks)} attaque(s)")
    return af


def emit(args: argparse.Namespace, data: Any, text_lines: Optional[Iterable[str]] = None):
    """Affiche le résultat en JSON (clés stables, fractions en chaînes) ou en texte."""
    if args.output == 'json' or text_lines is None:
        print(json.dumps(data, indent=2, ensure_ascii=False))
    else:
        for line in text_lines:
            print(line)


def run_guarded(handler: Callable[[argparse.Namespace], int], args: argparse.Namespace) -> int:
    """
    Exécute une sous-commande en traduisant les erreurs en codes de sortie.

    Returns:
        int: 0 succès, 1 contre-exemple, 2 entrée invalide, 3 limite dépassée, 4 singularité
    """
    try:
        return handler(args)
    except ResourceLimitError as e:
        print(f"Erreur: {e}", file=sys.stderr)
        return EXIT_RESOURCE_LIMIT
    except GeometricalSingularityError as e:
        print(f"Erreur: {e}", file=sys.stderr)
        return EXIT_SINGULARITY
    except ArgLogicError as e:
        print(f"Erreur: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
