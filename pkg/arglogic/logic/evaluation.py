# arglogic/logic/evaluation.py
"""
Évaluation des formules et test de modèle.
"""
from typing import Optional

from ..exceptions import ValidationError
from ..models.formula import And, Atom, Bottom, Formula, Iff, Implies, Not, Or, Top
from .system import LogicSystem
from .truth import ONE, ZERO, Assignment, Number


def evaluate(f: Formula, v: Assignment, ls: LogicSystem, grid: Optional[int] = None) -> Number:
    """
    Évalue une formule sous une assignation dans un système logique.

    Args:
        f: Formule
        v: Assignation couvrant les atomes de f
        ls: Système logique
        grid: Résolution de la grille active (résidus des t-normes utilisateur)

    Returns:
        Valeur de vérité

    Raises:
        DomainViolationError: Si une valeur est hors du domaine de ls, ou un atome non assigné
    """
    for name, value in v.items():
        ls.check_value(name, value)
    return _evaluate(f, v, ls, grid)


def _evaluate(f: Formula, v: Assignment, ls: LogicSystem, grid: Optional[int]) -> Number:
    if isinstance(f, Atom):
        return v[f.name]
    if isinstance(f, Top):
        return ONE
    if isinstance(f, Bottom):
        return ZERO
    if isinstance(f, Not):
        return ls.neg(_evaluate(f.child, v, ls, grid))
    if isinstance(f, And):
        return ls.conj([_evaluate(c, v, ls, grid) for c in f.children])
    if isinstance(f, Or):
        return ls.disj([_evaluate(c, v, ls, grid) for c in f.children])
    if isinstance(f, Implies):
        return ls.implies(_evaluate(f.lhs, v, ls, grid), _evaluate(f.rhs, v, ls, grid), grid)
    if isinstance(f, Iff):
        return ls.iff(_evaluate(f.lhs, v, ls, grid), _evaluate(f.rhs, v, ls, grid), grid)
    raise ValidationError(f"Nœud de formule inconnu: {f!r}")


def is_model(f: Formula, v: Assignment, ls: LogicSystem, grid: Optional[int] = None) -> bool:
    """Vrai si et seulement si f s'évalue exactement à 1 sous v."""
    return evaluate(f, v, ls, grid) == ONE
