#arglogic/parsers/tgf_parser.py
"""
Parseur spécialisé pour le format TGF (Trivial Graph Format).

Les lignes de nœuds `<id>` précèdent une ligne `#`, suivie des lignes
d'arêtes `<src> <dst>`. Un libellé éventuel après l'identifiant est ignoré.
"""
import logging
from typing import Dict, List, Set, Tuple

from ..exceptions import FrameworkSyntaxError, UndeclaredArgumentError
from ..models.framework import ArgumentId, ArgumentationFramework

logger = logging.getLogger(__name__)


class TgfParser:
    """Classe pour parser les frameworks au format TGF."""

    @staticmethod
    def _check_name(name: str, line_number: int, col: int) -> str:
        if not ArgumentId.NAME_PATTERN.fullmatch(name):
            raise FrameworkSyntaxError(line_number, col, f"identifiant invalide {name!r}")
        return name

    @staticmethod
    def parse(text: str) -> ArgumentationFramework:
        """
        Parse un texte TGF.

        Args:
            text: Contenu TGF

        Returns:
            ArgumentationFramework (même contrat que le parseur APX)

        Raises:
            FrameworkSyntaxError: Si une ligne est mal formée
            UndeclaredArgumentError: Si une arête utilise un nœud non déclaré
        """
        names: List[str] = []
        declared: Set[str] = set()
        attacks: Dict[Tuple[str, str], None] = {}
        in_edges = False

        for line_number, raw_line in enumerate(text.splitlines(), 1):
            line = raw_line.strip()
            if not line:
                continue
            col = raw_line.find(line) + 1

            if line == '#':
                if in_edges:
                    raise FrameworkSyntaxError(line_number, col, "séparateur '#' répété")
                in_edges = True
                continue

            tokens = line.split()
            if not in_edges:
                name = TgfParser._check_name(tokens[0], line_number, col)
                if name not in declared:
                    declared.add(name)
                    names.append(name)
                continue

            if len(tokens) < 2:
                raise FrameworkSyntaxError(line_number, col, "arête attendue: '<src> <dst>'")
            source = TgfParser._check_name(tokens[0], line_number, col)
            target = TgfParser._check_name(tokens[1], line_number, col)
            for endpoint in (source, target):
                if endpoint not in declared:
                    raise UndeclaredArgumentError(endpoint)
            attacks[(source, target)] = None

        logger.debug(f"TGF: {len(names)} arguments, {len(attacks)} attaques")
        return ArgumentationFramework.from_names(names, attacks.keys())


def parse_tgf(text: str) -> ArgumentationFramework:
    """Parse un texte TGF (voir TgfParser.parse)."""
    return TgfParser.parse(text)
