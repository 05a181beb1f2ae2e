# arglogic/logic/enumeration.py
"""
Énumération exhaustive des assignations et recherche de modèles.

L'ordre est lexicographique selon l'ordre canonique des arguments, les
valeurs étant parcourues par ordre croissant.
"""
import logging
from itertools import product
from typing import Iterator, List, Optional, Sequence

from ..exceptions import ResourceLimitError, UnsupportedConfigurationError, ValidationError
from ..models.formula import Formula, atoms_of
from ..models.framework import ArgumentationFramework
from ..utils.config_manager import Limits, get_limits
from .evaluation import is_model
from .system import LogicSystem
from .truth import Assignment, grid_values

logger = logging.getLogger(__name__)


def iter_assignments(af: ArgumentationFramework, values: Sequence) -> Iterator[Assignment]:
    """Toutes les assignations de `af` à valeurs dans `values`, sans contrôle de taille."""
    names = af.names
    for combination in product(values, repeat=len(names)):
        yield Assignment(names, combination)


def finite_assignments(af: ArgumentationFramework, values: Sequence,
                       limits: Optional[Limits] = None) -> Iterator[Assignment]:
    """
    Assignations sur un domaine fini, bornées par le nombre d'arguments.

    Raises:
        ResourceLimitError: Si |A| dépasse limits.max_args
    """
    limits = limits or get_limits()
    if len(af) > limits.max_args:
        raise ResourceLimitError(len(af), limits.max_args, "nombre d'arguments")
    logger.debug(f"Énumération de {len(values)}^{len(af)} assignations")
    return iter_assignments(af, values)


def grid_assignments(af: ArgumentationFramework, k: int,
                     limits: Optional[Limits] = None) -> Iterator[Assignment]:
    """
    Assignations sur la grille {0, 1/k, ..., 1}.

    Raises:
        ResourceLimitError: Si (k+1)^|A| dépasse limits.max_grid_points
    """
    limits = limits or get_limits()
    points = grid_values(k)
    size = len(points) ** len(af)
    if size > limits.max_grid_points:
        raise ResourceLimitError(size, limits.max_grid_points, "points de grille")
    logger.debug(f"Parcours de la grille k={k}: {size} points")
    return iter_assignments(af, points)


def _check_atoms(f: Formula, af: ArgumentationFramework):
    unknown = atoms_of(f) - set(af.names)
    if unknown:
        raise ValidationError(f"Atomes hors du framework: {sorted(unknown)}")


def enumerate_models(f: Formula, af: ArgumentationFramework, ls: LogicSystem,
                     limits: Optional[Limits] = None) -> List[Assignment]:
    """
    Tous les modèles de f sur le domaine fini de ls.

    Args:
        f: Formule sur les arguments de af
        af: Framework fournissant l'ordre canonique
        ls: PL2, PL3K ou PL3L
        limits: Limites d'énumération (configuration par défaut si None)

    Returns:
        Liste des modèles dans l'ordre lexicographique

    Raises:
        UnsupportedConfigurationError: Si ls est un système flou
        ResourceLimitError: Si le framework est trop grand
    """
    if not ls.is_finite:
        raise UnsupportedConfigurationError(f"Énumération impossible sur le domaine infini de {ls}")
    _check_atoms(f, af)
    return [v for v in finite_assignments(af, ls.domain, limits) if is_model(f, v, ls)]


def grid_models(f: Formula, af: ArgumentationFramework, ls: LogicSystem, k: int,
                limits: Optional[Limits] = None) -> List[Assignment]:
    """
    Modèles exacts de f dont toutes les valeurs sont sur la grille de résolution k.

    Raises:
        UnsupportedConfigurationError: Si ls n'est pas flou
        ResourceLimitError: Si la grille est trop grande
    """
    if ls.is_finite:
        raise UnsupportedConfigurationError(f"La recherche sur grille requiert un système flou, pas {ls}")
    _check_atoms(f, af)
    return [v for v in grid_assignments(af, k, limits) if is_model(f, v, ls, grid=k)]
