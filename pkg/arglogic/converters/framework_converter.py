# arglogic/converters/framework_converter.py
"""
Convertisseur pour les frameworks d'argumentation.

Ce module convertit les frameworks entre leur représentation objet et leurs
représentations dictionnaire (JSON), APX, TGF et networkx.
"""
import logging
import os
import sys
from typing import Any, Dict, Optional

import networkx as nx

from ..exceptions import ParsingError
from ..models.framework import ArgumentationFramework
from ..parsers import parse_apx, parse_tgf

logger = logging.getLogger(__name__)

FORMATS = ('apx', 'tgf')


class FrameworkConverter:
    """Classe pour convertir les frameworks d'argumentation."""

    @staticmethod
    def to_dict(af: ArgumentationFramework) -> Dict[str, Any]:
        """
        Convertit un framework en dictionnaire sérialisable.

        Args:
            af: Framework à convertir

        Returns:
            {"arguments": [...], "attacks": [[x, y], ...]} avec les attaques triées
        """
        return {
            'arguments': list(af.names),
            'attacks': [[x, y] for x, y in af.attack_names()],
        }

    @staticmethod
    def from_dict(data: Dict[str, Any]) -> ArgumentationFramework:
        """
        Crée un framework depuis sa forme dictionnaire.

        Args:
            data: Dictionnaire {"arguments": [...], "attacks": [[x, y], ...]}

        Returns:
            Instance d'ArgumentationFramework

        Raises:
            ParsingError: Si la structure est invalide
            UndeclaredArgumentError: Si une attaque référence un argument inconnu
        """
        if not isinstance(data, dict):
            raise ParsingError("Dictionnaire de framework attendu")
        arguments = data.get('arguments', [])
        attacks = data.get('attacks', [])
        try:
            pairs = [(str(x), str(y)) for x, y in attacks]
        except (TypeError, ValueError) as e:
            raise ParsingError(f"Attaques mal formées: {e}") from e
        return ArgumentationFramework.from_names([str(name) for name in arguments], pairs)

    @staticmethod
    def to_apx(af: ArgumentationFramework) -> str:
        """Sérialise au format APX (arguments dans l'ordre canonique, attaques triées)."""
        lines = [f"arg({name})." for name in af.names]
        lines.extend(f"att({x},{y})." for x, y in af.attack_names())
        return '\n'.join(lines) + ('\n' if lines else '')

    @staticmethod
    def to_tgf(af: ArgumentationFramework) -> str:
        """Sérialise au format TGF."""
        lines = list(af.names)
        lines.append('#')
        lines.extend(f"{x} {y}" for x, y in af.attack_names())
        return '\n'.join(lines) + '\n'

    @staticmethod
    def to_networkx(af: ArgumentationFramework) -> nx.DiGraph:
        return af.to_networkx()

    @staticmethod
    def from_networkx(graph: nx.DiGraph) -> ArgumentationFramework:
        return ArgumentationFramework.from_networkx(graph)

    @staticmethod
    def detect_format(path: Optional[str], fmt: str = 'auto') -> str:
        """
        Détermine le format d'entrée.

        Args:
            path: Chemin du fichier (ou None / '-' pour l'entrée standard)
            fmt: 'apx', 'tgf' ou 'auto' (déduit de l'extension, APX par défaut)

        Returns:
            str: 'apx' ou 'tgf'
        """
        if fmt in FORMATS:
            return fmt
        if path and path != '-':
            extension = os.path.splitext(path)[1].lower().lstrip('.')
            if extension in FORMATS:
                return extension
        return 'apx'

    @staticmethod
    def from_text(text: str, fmt: str = 'apx') -> ArgumentationFramework:
        """
        Parse un texte dans le format indiqué.

        Raises:
            FrameworkSyntaxError: Erreur de syntaxe
            UndeclaredArgumentError: Argument non déclaré
        """
        if fmt == 'tgf':
            return parse_tgf(text)
        if fmt == 'apx':
            return parse_apx(text)
        raise ParsingError(f"Format inconnu: {fmt}")


def serialize_apx(af: ArgumentationFramework) -> str:
    return FrameworkConverter.to_apx(af)


def serialize_tgf(af: ArgumentationFramework) -> str:
    return FrameworkConverter.to_tgf(af)


def framework_to_dict(af: ArgumentationFramework) -> Dict[str, Any]:
    return FrameworkConverter.to_dict(af)


def framework_from_dict(data: Dict[str, Any]) -> ArgumentationFramework:
    return FrameworkConverter.from_dict(data)


def load_framework(path: str, fmt: str = 'auto', stdin=None) -> ArgumentationFramework:
    """
    Charge un framework depuis un fichier, ou depuis l'entrée standard si `path` vaut '-'.

    Args:
        path: Chemin du fichier ou '-'
        fmt: 'apx', 'tgf' ou 'auto'
        stdin: Flux à lire quand path vaut '-' (sys.stdin par défaut)

    Returns:
        ArgumentationFramework

    Raises:
        ParsingError: Fichier illisible ou contenu invalide
    """
    resolved = FrameworkConverter.detect_format(path, fmt)
    if path == '-':
        if stdin is None:
            stdin = sys.stdin
        try:
            text = stdin.read()
        except UnicodeDecodeError as e:
            raise ParsingError(f"Entrée standard non UTF-8 à l'octet {e.start}") from e
    else:
        try:
            with open(path, 'r', encoding='utf-8') as f:
                text = f.read()
        except UnicodeDecodeError as e:
            raise ParsingError(f"{path} n'est pas en UTF-8 (octet {e.start})") from e
        except OSError as e:
            raise ParsingError(f"Impossible de lire {path}: {e}") from e

    logger.debug(f"Lecture de {path} au format {resolved}")
    return FrameworkConverter.from_text(text, resolved)
