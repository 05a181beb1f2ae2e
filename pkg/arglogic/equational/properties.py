# arglogic/equational/properties.py
"""
Vérification des propriétés des fonctions équationnelles et des t-normes
sur une grille rationnelle exhaustive.
"""
import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, product
from typing import Any, Dict, Optional, Tuple

from ..exceptions import GeometricalSingularityError, UnsupportedConfigurationError, ValidationError
from ..logic.tnorm import TNorm
from ..logic.truth import HALF, ONE, ZERO, grid_values
from .systems import EquationalSystem

logger = logging.getLogger(__name__)

# Permutations aléatoires testées par tuple, en plus des transpositions
SYMMETRY_SAMPLES = 2


class EquationalFunctionProperty(Enum):
    DECREASING_MONOTONICITY = 'decreasing-monotonicity'
    BOUNDARY_ZERO_TO_ONE = 'boundary-zero-to-one'
    BOUNDARY_ONE_KILLS = 'boundary-one-kills'
    SYMMETRY = 'symmetry'
    HALF_IDEMPOTENT_TNORM = 'half-idempotent-tnorm'
    ZERO_DIVISOR_FREE_TNORM = 'zero-divisor-free-tnorm'
    ENCODABLE_WITH_STANDARD_NEGATION = 'encodable-with-standard-negation'


@dataclass
class PropertyReport:
    """Verdict d'une vérification de propriété."""
    prop: EquationalFunctionProperty
    subject: str
    passed: bool = True
    counterexample: Optional[Dict[str, Any]] = None
    checked: int = 0
    skipped: int = 0

    def fail(self, **witness) -> 'PropertyReport':
        self.passed = False
        self.counterexample = witness
        return self

    def to_dict(self) -> Dict[str, Any]:
        return {
            'property': self.prop.value,
            'subject': self.subject,
            'pass': self.passed,
            'counterexample': {k: str(v) for k, v in self.counterexample.items()} if self.counterexample else None,
            'checked': self.checked,
            'skipped': self.skipped,
        }


def _safe_h(sys: EquationalSystem, xs) -> Optional[Any]:
    try:
        return sys.h(xs)
    except GeometricalSingularityError:
        return None


def _check_monotonicity(sys, arity, points, report):
    successor = dict(zip(points, points[1:]))
    for xs in product(points, repeat=arity):
        base = _safe_h(sys, xs)
        if base is None:
            report.skipped += 1
            continue
        for i, x in enumerate(xs):
            if x == ONE:
                continue
            raised = xs[:i] + (successor[x],) + xs[i + 1:]
            value = _safe_h(sys, raised)
            if value is None:
                report.skipped += 1
                continue
            report.checked += 1
            if value > base:
                return report.fail(lower=xs, upper=raised, h_lower=base, h_upper=value)
    return report


def _check_zero_to_one(sys, arity, report):
    xs = (ZERO,) * arity
    report.checked = 1
    value = sys.h(xs)
    if value != ONE:
        return report.fail(args=xs, h=value)
    return report


def _check_one_kills(sys, arity, points, report):
    for xs in product(points, repeat=arity):
        if ONE not in xs:
            continue
        value = _safe_h(sys, xs)
        if value is None:
            report.skipped += 1
            continue
        report.checked += 1
        if value != ZERO:
            return report.fail(args=xs, h=value)
    return report


def _check_symmetry(sys, arity, points, report, seed):
    rng = random.Random(seed)
    for xs in product(points, repeat=arity):
        base = _safe_h(sys, xs)
        if base is None:
            report.skipped += 1
            continue
        variants = []
        for i, j in combinations(range(arity), 2):
            swapped = list(xs)
            swapped[i], swapped[j] = swapped[j], swapped[i]
            variants.append(tuple(swapped))
        for _ in range(SYMMETRY_SAMPLES if arity > 2 else 0):
            shuffled = list(xs)
            rng.shuffle(shuffled)
            variants.append(tuple(shuffled))
        for permuted in variants:
            report.checked += 1
            if sys.h(permuted) != base:
                return report.fail(args=xs, permuted=permuted, h=base, h_permuted=sys.h(permuted))
    return report


def _tnorm_of(sys: EquationalSystem) -> TNorm:
    tnorm = sys.associated_tnorm
    if tnorm is None:
        raise UnsupportedConfigurationError(f"Le système {sys} n'a pas de t-norme associée")
    return tnorm


def check_tnorm_property(tnorm: TNorm, prop: EquationalFunctionProperty, k: int = 4) -> PropertyReport:
    """
    Vérifie la ½-idempotence ou l'absence de diviseurs de zéro d'une t-norme.

    Pour l'absence de diviseurs de zéro, les paires de (0, 1]² sont parcourues
    par min(x, y) décroissant: le témoin retenu est le plus fort.
    """
    report = PropertyReport(prop, tnorm.name)
    if prop is EquationalFunctionProperty.HALF_IDEMPOTENT_TNORM:
        report.checked = 1
        value = tnorm(HALF, HALF)
        if value != HALF:
            report.fail(x=HALF, y=HALF, t=value)
        return report
    if prop is EquationalFunctionProperty.ZERO_DIVISOR_FREE_TNORM:
        positive = [p for p in grid_values(k) if p > 0]
        pairs = sorted(product(positive, repeat=2), key=lambda pair: (-min(pair), pair))
        for x, y in pairs:
            report.checked += 1
            value = tnorm(x, y)
            if value == 0:
                return report.fail(x=x, y=y, t=value)
        return report
    raise ValidationError(f"{prop.value} n'est pas une propriété de t-norme")


def is_half_idempotent(tnorm: TNorm) -> bool:
    return check_tnorm_property(tnorm, EquationalFunctionProperty.HALF_IDEMPOTENT_TNORM).passed


def is_zero_divisor_free(tnorm: TNorm, k: int = 4) -> bool:
    return check_tnorm_property(tnorm, EquationalFunctionProperty.ZERO_DIVISOR_FREE_TNORM, k).passed


def _check_encodable(sys, points, report):
    """
    Tente de retrouver (N, T) standard: N(x) = h(x) doit valoir 1 - x et
    x ⊛ y = h(1 - x, 1 - y) doit être une t-norme sur la grille.
    """
    for x in points:
        report.checked += 1
        value = _safe_h(sys, (x,))
        if value != 1 - x:
            return report.fail(law='negation', x=x, h=value)

    def star(x, y):
        return _safe_h(sys, (1 - x, 1 - y))

    for x in points:
        value = star(x, ONE)
        if value is None:
            report.skipped += 1
            continue
        report.checked += 1
        if value != x:
            return report.fail(law='unit', x=x, y=ONE, star=value)

    for x, y in product(points, repeat=2):
        left, right = star(x, y), star(y, x)
        if left is None or right is None:
            report.skipped += 1
            continue
        report.checked += 1
        if left != right:
            return report.fail(law='commutativity', x=x, y=y, star=left, star_swapped=right)

    for x, (y1, y2) in product(points, zip(points, points[1:])):
        low, high = star(x, y1), star(x, y2)
        if low is None or high is None:
            report.skipped += 1
            continue
        report.checked += 1
        if low > high:
            return report.fail(law='monotonicity', x=x, y=y1, y_next=y2)

    for x, y, z in product(points, repeat=3):
        xy, yz = star(x, y), star(y, z)
        if xy is None or yz is None:
            report.skipped += 1
            continue
        left, right = star(xy, z), star(x, yz)
        if left is None or right is None:
            report.skipped += 1
            continue
        report.checked += 1
        if left != right:
            return report.fail(law='associativity', x=x, y=y, z=z)
    return report


def check_function_property(sys: EquationalSystem, prop: EquationalFunctionProperty,
                            arity: int, k: int, seed: int = 0) -> PropertyReport:
    """
    Vérifie exhaustivement une propriété de h sur la grille (k+1)^arity.

    Args:
        sys: Système équationnel
        prop: Propriété à vérifier
        arity: Nombre d'attaquants (>= 1)
        k: Résolution de la grille
        seed: Graine des permutations échantillonnées (symétrie)

    Returns:
        PropertyReport avec le premier contre-exemple trouvé le cas échéant

    Raises:
        ValidationError: Si l'arité est invalide
        UnsupportedConfigurationError: Propriété de t-norme sur un système sans t-norme
    """
    if arity < 1:
        raise ValidationError(f"Arité invalide: {arity}")
    points = grid_values(k)
    report = PropertyReport(prop, sys.name)

    if prop is EquationalFunctionProperty.DECREASING_MONOTONICITY:
        _check_monotonicity(sys, arity, points, report)
    elif prop is EquationalFunctionProperty.BOUNDARY_ZERO_TO_ONE:
        _check_zero_to_one(sys, arity, report)
    elif prop is EquationalFunctionProperty.BOUNDARY_ONE_KILLS:
        _check_one_kills(sys, arity, points, report)
    elif prop is EquationalFunctionProperty.SYMMETRY:
        _check_symmetry(sys, arity, points, report, seed)
    elif prop is EquationalFunctionProperty.ENCODABLE_WITH_STANDARD_NEGATION:
        _check_encodable(sys, points, report)
    else:
        tnorm_report = check_tnorm_property(_tnorm_of(sys), prop, k)
        report.passed = tnorm_report.passed
        report.counterexample = tnorm_report.counterexample
        report.checked = tnorm_report.checked

    if report.skipped:
        logger.debug(f"{sys} / {prop.value}: {report.skipped} point(s) singulier(s) ignoré(s)")
    return report
