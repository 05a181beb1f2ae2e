#arglogic/parsers/apx_parser.py
"""
Parseur spécialisé pour le format APX.

Un fichier APX est une suite de faits `arg(<nom>).` et `att(<x>,<y>).`;
`%` ouvre un commentaire jusqu'à la fin de la ligne et les espaces sont libres.
Un argument doit être déclaré par `arg` avant d'apparaître dans un `att`.
"""
import logging
import re
from typing import Dict, List, Set, Tuple

from ..exceptions import FrameworkSyntaxError, UndeclaredArgumentError
from ..models.framework import ArgumentationFramework

logger = logging.getLogger(__name__)

_NAME = r'[A-Za-z0-9_]+'
_SKIP = re.compile(r'(?:\s+|%[^\n]*)+')
_FACT = re.compile(
    r'(?P<kind>arg|att)\s*\(\s*(?P<first>' + _NAME + r')\s*'
    r'(?:,\s*(?P<second>' + _NAME + r')\s*)?\)\s*\.'
)


class ApxParser:
    """Classe pour parser les frameworks au format APX."""

    @staticmethod
    def position(text: str, offset: int) -> Tuple[int, int]:
        """
        Convertit un offset en (ligne, colonne), toutes deux à partir de 1.

        Args:
            text: Texte complet
            offset: Position dans le texte

        Returns:
            Tuple (ligne, colonne)
        """
        line = text.count('\n', 0, offset) + 1
        line_start = text.rfind('\n', 0, offset) + 1
        return line, offset - line_start + 1

    @staticmethod
    def parse(text: str) -> ArgumentationFramework:
        """
        Parse un texte APX.

        Args:
            text: Contenu APX

        Returns:
            ArgumentationFramework avec les arguments dans l'ordre de première déclaration

        Raises:
            FrameworkSyntaxError: Si le texte ne respecte pas la grammaire
            UndeclaredArgumentError: Si une attaque utilise un argument non déclaré
        """
        names: List[str] = []
        declared: Set[str] = set()
        attacks: Dict[Tuple[str, str], None] = {}

        offset = 0
        length = len(text)
        while True:
            skipped = _SKIP.match(text, offset)
            if skipped:
                offset = skipped.end()
            if offset >= length:
                break

            match = _FACT.match(text, offset)
            if not match:
                line, col = ApxParser.position(text, offset)
                raise FrameworkSyntaxError(line, col, f"fait APX attendu près de {text[offset:offset + 20]!r}")

            kind, first, second = match.group('kind', 'first', 'second')
            if kind == 'arg':
                if second is not None:
                    line, col = ApxParser.position(text, match.start())
                    raise FrameworkSyntaxError(line, col, "arg() attend un seul nom")
                if first not in declared:
                    declared.add(first)
                    names.append(first)
            else:
                if second is None:
                    line, col = ApxParser.position(text, match.start())
                    raise FrameworkSyntaxError(line, col, "att() attend deux noms")
                for endpoint in (first, second):
                    if endpoint not in declared:
                        raise UndeclaredArgumentError(endpoint)
                attacks[(first, second)] = None

            offset = match.end()

        logger.debug(f"APX: {len(names)} arguments, {len(attacks)} attaques")
        return ArgumentationFramework.from_names(names, attacks.keys())


def parse_apx(text: str) -> ArgumentationFramework:
    """Parse un texte APX (voir ApxParser.parse)."""
    return ApxParser.parse(text)
