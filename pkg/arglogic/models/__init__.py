"""
Package de modèles de données pour arglogic.

Ce package contient des classes de modèles typés pour représenter
les frameworks d'argumentation et les formules propositionnelles.
"""

from .framework import ArgumentId, ArgumentationFramework, empty_framework
from .formula import (
    Formula,
    Top,
    Bottom,
    Atom,
    Not,
    And,
    Or,
    Implies,
    Iff,
    TOP,
    BOTTOM,
    conj,
    disj,
    atoms_of,
    formula_size,
)

__all__ = [
    'ArgumentId',
    'ArgumentationFramework',
    'empty_framework',
    'Formula',
    'Top',
    'Bottom',
    'Atom',
    'Not',
    'And',
    'Or',
    'Implies',
    'Iff',
    'TOP',
    'BOTTOM',
    'conj',
    'disj',
    'atoms_of',
    'formula_size',
]
