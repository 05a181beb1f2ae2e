# arglogic/verify/context.py
"""
Contexte de vérification d'un framework: mémorise les ensembles énumérés
partagés par plusieurs vérificateurs.
"""
import logging
from functools import cached_property
from typing import Dict, List, Optional, Tuple

from ..encoders import encode_normal, encode_regular
from ..equational.solver import grid_solutions
from ..equational.systems import EquationalSystem
from ..logic.enumeration import enumerate_models
from ..logic.system import LogicSystem
from ..logic.truth import Assignment
from ..models.formula import Formula
from ..models.framework import ArgumentationFramework
from ..semantics.labelling import SemanticsName, complete_labellings, dung_labellings
from .theorems import VerificationParams

logger = logging.getLogger(__name__)


def fitting_resolution(n: int, k: int, budget: int, even: bool = False) -> Optional[int]:
    """
    Plus grande résolution r <= k telle que (r+1)^n <= budget.

    Args:
        n: Nombre d'arguments
        k: Résolution demandée
        budget: Nombre maximal de points de grille
        even: N'accepter que des résolutions paires

    Returns:
        La résolution retenue, ou None si aucune ne convient
    """
    for r in range(k, 0, -1):
        if even and r % 2:
            continue
        if (r + 1) ** n <= budget:
            return r
    return None


class FrameworkContext:
    """Ensembles de modèles et d'étiquetages d'un framework, calculés à la demande."""

    def __init__(self, af: ArgumentationFramework, params: VerificationParams):
        self.af = af
        self.params = params
        self._models: Dict[Tuple[str, LogicSystem], List[Assignment]] = {}
        self._solutions: Dict[Tuple[str, int], List[Assignment]] = {}

    @cached_property
    def ec1(self) -> Formula:
        return encode_normal(self.af)

    @cached_property
    def ec2(self) -> Formula:
        return encode_regular(self.af)

    @cached_property
    def complete(self) -> List[Assignment]:
        return complete_labellings(self.af, self.params.limits)

    @cached_property
    def stable(self) -> List[Assignment]:
        return dung_labellings(self.af, SemanticsName.STABLE, self.params.limits)

    @cached_property
    def grounded(self) -> List[Assignment]:
        return dung_labellings(self.af, SemanticsName.GROUNDED, self.params.limits)

    @cached_property
    def preferred(self) -> List[Assignment]:
        return dung_labellings(self.af, SemanticsName.PREFERRED, self.params.limits)

    def models(self, encoding: str, ls: LogicSystem) -> List[Assignment]:
        """Modèles de ec1 ('normal') ou ec2 ('regular') dans un système fini."""
        key = (encoding, ls)
        if key not in self._models:
            formula = self.ec1 if encoding == 'normal' else self.ec2
            self._models[key] = enumerate_models(formula, self.af, ls, self.params.limits)
        return self._models[key]

    def solutions(self, sys: EquationalSystem, k: int) -> List[Assignment]:
        key = (sys.name, k)
        if key not in self._solutions:
            self._solutions[key] = grid_solutions(sys, self.af, k, self.params.limits)
        return self._solutions[key]

    def resolution(self, even: bool = False) -> Optional[int]:
        """Résolution de grille compatible avec le budget par instance."""
        return fitting_resolution(len(self.af), self.params.grid_resolution,
                                  self.params.max_grid_points, even)
