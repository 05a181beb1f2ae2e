# arglogic/formatters/formula_formatter.py
"""
Formatter pour les formules propositionnelles.

Ce module produit la forme texte parenthésée et la forme JSON des formules.
"""
from typing import Any, Dict

from ..exceptions import ValidationError
from ..models.formula import And, Atom, Bottom, Formula, Iff, Implies, Not, Or, Top

_BINARY_SYMBOLS = {And: ' & ', Or: ' | '}


class FormulaFormatter:
    """Classe pour formater les formules."""

    @staticmethod
    def to_text(f: Formula) -> str:
        """
        Rendu texte: T, F, nom d'atome, (~x), (x & y), (x | y), (x -> y), (x <-> y).

        Args:
            f: Formule à rendre

        Returns:
            Chaîne entièrement parenthésée
        """
        if isinstance(f, Atom):
            return f.name
        if isinstance(f, Top):
            return 'T'
        if isinstance(f, Bottom):
            return 'F'
        if isinstance(f, Not):
            return f"(~{FormulaFormatter.to_text(f.child)})"
        if isinstance(f, (And, Or)):
            symbol = _BINARY_SYMBOLS[type(f)]
            return '(' + symbol.join(FormulaFormatter.to_text(c) for c in f.children) + ')'
        if isinstance(f, Implies):
            return f"({FormulaFormatter.to_text(f.lhs)} -> {FormulaFormatter.to_text(f.rhs)})"
        if isinstance(f, Iff):
            return f"({FormulaFormatter.to_text(f.lhs)} <-> {FormulaFormatter.to_text(f.rhs)})"
        raise ValidationError(f"Nœud de formule inconnu: {f!r}")

    @staticmethod
    def to_json(f: Formula) -> Dict[str, Any]:
        """
        Rendu JSON: {"op": "atom", "name": ...}, {"op": "top"}, {"op": "and", "args": [...]}...

        Args:
            f: Formule à rendre

        Returns:
            Dictionnaire sérialisable
        """
        if isinstance(f, Atom):
            return {'op': 'atom', 'name': f.name}
        if isinstance(f, Top):
            return {'op': 'top'}
        if isinstance(f, Bottom):
            return {'op': 'bottom'}
        if isinstance(f, Not):
            return {'op': 'not', 'args': [FormulaFormatter.to_json(f.child)]}
        if isinstance(f, And):
            return {'op': 'and', 'args': [FormulaFormatter.to_json(c) for c in f.children]}
        if isinstance(f, Or):
            return {'op': 'or', 'args': [FormulaFormatter.to_json(c) for c in f.children]}
        if isinstance(f, Implies):
            return {'op': 'implies', 'args': [FormulaFormatter.to_json(f.lhs), FormulaFormatter.to_json(f.rhs)]}
        if isinstance(f, Iff):
            return {'op': 'iff', 'args': [FormulaFormatter.to_json(f.lhs), FormulaFormatter.to_json(f.rhs)]}
        raise ValidationError(f"Nœud de formule inconnu: {f!r}")


def render_text(f: Formula) -> str:
    return FormulaFormatter.to_text(f)


def render_json(f: Formula) -> Dict[str, Any]:
    return FormulaFormatter.to_json(f)
