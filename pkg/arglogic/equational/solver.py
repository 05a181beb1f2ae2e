# arglogic/equational/solver.py
"""
Résolution des systèmes équationnels: vérification, recherche sur grille et
itération de Jacobi.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..exceptions import ValidationError
from ..logic.enumeration import grid_assignments
from ..logic.truth import Assignment, Number
from ..models.framework import ArgumentationFramework
from ..utils.config_manager import Limits, get_iteration_settings
from .systems import EquationalSystem

logger = logging.getLogger(__name__)

MODES = ('exact', 'float')


def satisfies(sys: EquationalSystem, af: ArgumentationFramework, v: Assignment) -> bool:
    """
    Vrai si v(a) = rhs(a) exactement pour chaque argument.

    Tous les membres droits sont évalués avant la comparaison, de sorte qu'une
    singularité du système géométrique est signalée quel que soit l'ordre des arguments.
    """
    expected = [sys.rhs(af, v, a) for a in af.arguments]
    return all(v[a] == value for a, value in zip(af.arguments, expected))


def grid_solutions(sys: EquationalSystem, af: ArgumentationFramework, k: int,
                   limits: Optional[Limits] = None) -> List[Assignment]:
    """
    Solutions exactes situées sur la grille {0, 1/k, ..., 1}.

    Ce n'est pas l'ensemble complet des solutions, qui peut être un continuum.

    Raises:
        ResourceLimitError: Si la grille est trop grande
        GeometricalSingularityError: Si le système géométrique est évalué hors domaine
    """
    solutions = [v for v in grid_assignments(af, k, limits) if satisfies(sys, af, v)]
    logger.debug(f"{sys}: {len(solutions)} solution(s) sur la grille k={k}")
    return solutions


@dataclass(frozen=True)
class IterationOutcome:
    """
    Résultat d'une itération: point fixe ou non-convergence.

    Pour une non-convergence, `period` vaut 2 si un cycle d'ordre 2 a été
    détecté et `cycle` contient alors les deux états.
    """
    converged: bool
    assignment: Assignment
    iterations: int
    last_step: Number
    period: Optional[int] = None
    cycle: Tuple[Assignment, ...] = ()

    @property
    def fixed_point(self) -> Optional[Assignment]:
        return self.assignment if self.converged else None


def _step(sys: EquationalSystem, af: ArgumentationFramework, v: Assignment, mode: str) -> Assignment:
    values = [sys.rhs(af, v, a) for a in af.arguments]
    if mode == 'float':
        values = [float(x) for x in values]
    return v.with_values(values)


def _distance(u: Assignment, v: Assignment) -> Number:
    return max((abs(x - y) for x, y in zip(u.values, v.values)), default=0)


def iterate(sys: EquationalSystem, af: ArgumentationFramework, start: Assignment,
            max_iters: Optional[int] = None, mode: str = 'exact',
            tol: Optional[float] = None, config=None) -> IterationOutcome:
    """
    Itération simultanée v <- rhs(v) à partir de `start`.

    Args:
        sys: Système équationnel
        af: Framework
        start: Assignation initiale
        max_iters: Nombre maximal de mises à jour (configuration si None)
        mode: 'exact' (arrêt sur un pas nul) ou 'float' (arrêt sur un pas <= tol)
        tol: Tolérance du mode 'float' (configuration si None)
        config: Configuration déjà chargée

    Returns:
        IterationOutcome

    Raises:
        ValidationError: Si le mode est inconnu ou le budget négatif
        GeometricalSingularityError: Propagée depuis le système
    """
    if mode not in MODES:
        raise ValidationError(f"Mode d'itération inconnu: {mode}")
    if max_iters is None or (mode == 'float' and tol is None):
        default_iters, default_tol = get_iteration_settings(config)
        max_iters = default_iters if max_iters is None else max_iters
        tol = default_tol if tol is None else tol
    if max_iters < 0:
        raise ValidationError(f"Nombre d'itérations invalide: {max_iters}")
    threshold = 0 if mode == 'exact' else tol

    current = start if mode == 'exact' else start.with_values(float(x) for x in start.values)
    previous: Optional[Assignment] = None

    # t mises à jour effectuées; l'état courant est testé même quand le budget est épuisé
    for t in range(max_iters + 1):
        following = _step(sys, af, current, mode)
        step = _distance(following, current)
        if step <= threshold:
            logger.debug(f"{sys}: point fixe après {t} itération(s)")
            return IterationOutcome(True, following, t, step)
        if t == max_iters:
            break
        if mode == 'exact' and previous is not None and following == previous:
            logger.debug(f"{sys}: cycle d'ordre 2 détecté à l'itération {t}")
            return IterationOutcome(False, following, t + 1, step, 2, (previous, current))
        previous, current = current, following

    period, cycle = None, ()
    if previous is not None and _distance(following, previous) <= threshold:
        period, cycle = 2, (previous, current)
    logger.info(f"{sys}: pas de convergence après {max_iters} itération(s) (dernier pas {step})")
    return IterationOutcome(False, current, max_iters, step, period, cycle)
