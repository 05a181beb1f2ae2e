# arglogic/equational/systems.py
"""
Systèmes équationnels sur [0, 1].

Chaque système est défini par sa fonction équationnelle h appliquée aux
valeurs des attaquants d'un argument; un argument non attaqué vaut 1.
"""
import math
from abc import ABC, abstractmethod
from typing import Optional, Sequence

from ..exceptions import GeometricalSingularityError, ValidationError
from ..logic.negation import STANDARD_NEGATION, Negation, parse_negation
from ..logic.tnorm import GOEDEL, LUKASIEWICZ, PRODUCT, TNorm, get_tnorm
from ..logic.truth import ONE, ZERO, Assignment, Number
from ..models.framework import ArgumentationFramework

SYSTEM_NAMES = ('encoded:<negation>:<tnorm>', 'max', 'inverse', 'luka', 'geometrical')


class EquationalSystem(ABC):
    """Système équationnel générique."""

    name: str = 'system'

    def h(self, xs: Sequence[Number]) -> Number:
        """
        Fonction équationnelle.

        Args:
            xs: Valeurs des attaquants (h de la séquence vide vaut 1)

        Raises:
            GeometricalSingularityError: Si h n'est pas définie en xs
        """
        xs = tuple(xs)
        if not xs:
            return ONE
        return self._h(xs)

    @abstractmethod
    def _h(self, xs: Sequence[Number]) -> Number:
        pass

    @property
    def associated_tnorm(self) -> Optional[TNorm]:
        return None

    def rhs(self, af: ArgumentationFramework, v: Assignment, a) -> Number:
        """Membre droit de l'équation de l'argument `a` sous l'assignation v."""
        name = getattr(a, 'name', a)
        try:
            return self.h(v[b] for b in af.attackers_of(name))
        except GeometricalSingularityError as e:
            raise GeometricalSingularityError(name) from e

    def __eq__(self, other) -> bool:
        return isinstance(other, EquationalSystem) and other.name == self.name

    def __hash__(self) -> int:
        return hash(self.name)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name})"

    def __str__(self) -> str:
        return self.name


class EncodedSystem(EquationalSystem):
    """h(x1..xk) = N(x1) T ... T N(xk), issu de l'encodage normal flou."""

    def __init__(self, negation: Negation = STANDARD_NEGATION, tnorm: TNorm = GOEDEL):
        self.negation = negation
        self.tnorm = tnorm
        self.name = f"encoded:{negation.name}:{tnorm.name}"

    def _h(self, xs):
        return self.tnorm.fold(self.negation(x) for x in xs)

    @property
    def associated_tnorm(self):
        return self.tnorm


class MaxSystem(EquationalSystem):
    """h = 1 - max(xi)."""

    name = 'max'

    def _h(self, xs):
        return 1 - max(xs)

    @property
    def associated_tnorm(self):
        return GOEDEL


class InverseSystem(EquationalSystem):
    """h = prod(1 - xi)."""

    name = 'inverse'

    def _h(self, xs):
        return math.prod((1 - x for x in xs), start=ONE)

    @property
    def associated_tnorm(self):
        return PRODUCT


class LukaClosedSystem(EquationalSystem):
    """h = 0 si sum(xi) >= 1, sinon 1 - sum(xi)."""

    name = 'luka'

    def _h(self, xs):
        total = sum(xs, ZERO)
        return ZERO if total >= 1 else 1 - total

    @property
    def associated_tnorm(self):
        return LUKASIEWICZ


class GeometricalSystem(EquationalSystem):
    """h = prod(1 - xi) / (prod(1 - xi) + prod(xi)); non définie si les deux produits sont nuls."""

    name = 'geometrical'

    def _h(self, xs):
        keep = math.prod((1 - x for x in xs), start=ONE)
        kill = math.prod(xs, start=ONE)
        if keep + kill == 0:
            raise GeometricalSingularityError()
        return keep / (keep + kill)


def luka_nary(xs: Sequence[Number]) -> Number:
    """
    Forme close de la t-norme de Łukasiewicz n-aire: max(0, somme - (n - 1)).

    Raises:
        ValidationError: Si la liste est vide
    """
    xs = tuple(xs)
    if not xs:
        raise ValidationError("luka_nary requiert au moins une valeur")
    return max(ZERO, sum(xs, ZERO) - (len(xs) - 1))


def parse_system_spec(spec: str) -> EquationalSystem:
    """
    Construit un système équationnel depuis son nom.

    Args:
        spec: 'encoded:<négation>:<t-norme>', 'max', 'inverse', 'luka' ou 'geometrical'

    Returns:
        EquationalSystem

    Raises:
        ValidationError: Si le nom est inconnu
    """
    text = (spec or '').strip().lower()
    named = {
        'max': MaxSystem,
        'inverse': InverseSystem,
        'luka': LukaClosedSystem,
        'lukasiewicz': LukaClosedSystem,
        'geometrical': GeometricalSystem,
    }
    if text in named:
        return named[text]()
    if text == 'encoded' or text.startswith('encoded:'):
        parts = text.split(':')
        if len(parts) > 3:
            raise ValidationError(f"Système équationnel mal formé: {spec!r}")
        negation = parse_negation(parts[1]) if len(parts) > 1 else STANDARD_NEGATION
        tnorm = get_tnorm(parts[2]) if len(parts) > 2 else GOEDEL
        return EncodedSystem(negation, tnorm)
    raise ValidationError(f"Système équationnel inconnu: {spec!r} (attendu: {', '.join(SYSTEM_NAMES)})")
