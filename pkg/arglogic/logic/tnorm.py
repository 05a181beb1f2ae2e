# arglogic/logic/tnorm.py
"""
Normes triangulaires (t-normes) et leurs implications résiduelles.

Les trois t-normes nommées (Gödel, Łukasiewicz, produit) ont un résidu en
forme close. Une t-norme utilisateur est une fonction Python continue à
gauche; son résidu sup{z | T(x, z) <= y} est calculé par dichotomie exacte.
"""
import logging
from abc import ABC, abstractmethod
from fractions import Fraction
from functools import reduce
from itertools import product
from typing import Callable, Dict, Iterable, Optional

from ..exceptions import InvalidTNormError, NonLeftContinuousError, ValidationError
from .truth import ONE, ZERO, Number, grid_values, snap_to_grid

logger = logging.getLogger(__name__)

# Largeur finale de l'intervalle de dichotomie
BISECTION_WIDTH = Fraction(1, 2 ** 64)
# Grille d'échantillonnage des axiomes à la construction
CHECK_RESOLUTION = 8


class TNorm(ABC):
    """T-norme: commutative, associative, croissante, d'élément neutre 1."""

    name: str = 'tnorm'

    @abstractmethod
    def __call__(self, x: Number, y: Number) -> Number:
        """Applique la t-norme."""

    @abstractmethod
    def residuum(self, x: Number, y: Number, grid: Optional[int] = None) -> Number:
        """
        Implication résiduelle I(x, y) = sup{z | T(x, z) <= y}.

        Args:
            x: Antécédent
            y: Conséquent
            grid: Résolution de la grille active (t-normes utilisateur uniquement)
        """

    def fold(self, values: Iterable[Number]) -> Number:
        """Pli à gauche T(...T(T(x1, x2), x3)...); le pli vide vaut 1."""
        return reduce(self, values, ONE)

    def __eq__(self, other) -> bool:
        return isinstance(other, TNorm) and type(other) is type(self) and other.name == self.name

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.name))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name})"


class GoedelTNorm(TNorm):
    """T(x, y) = min(x, y)."""

    name = 'goedel'

    def __call__(self, x, y):
        return min(x, y)

    def residuum(self, x, y, grid=None):
        return ONE if x <= y else y


class LukasiewiczTNorm(TNorm):
    """T(x, y) = max(0, x + y - 1)."""

    name = 'lukasiewicz'

    def __call__(self, x, y):
        return max(ZERO, x + y - 1)

    def residuum(self, x, y, grid=None):
        return min(ONE, 1 - x + y)


class ProductTNorm(TNorm):
    """T(x, y) = x * y."""

    name = 'product'

    def __call__(self, x, y):
        return x * y

    def residuum(self, x, y, grid=None):
        return ONE if x <= y else y / x


class UserTNorm(TNorm):
    """
    T-norme fournie par une fonction.

    Les axiomes sont échantillonnés sur la grille {0, 1/8, ..., 1} à la
    construction, ainsi que l'atteinte du résidu (continuité à gauche).
    """

    def __init__(self, name: str, function: Callable[[Number, Number], Number],
                 check_resolution: int = CHECK_RESOLUTION):
        self.name = name
        self.function = function
        self._validate(check_resolution)

    def __call__(self, x, y):
        return self.function(x, y)

    def _validate(self, k: int):
        points = grid_values(k)
        for x, y in product(points, repeat=2):
            value = self(x, y)
            if not ZERO <= value <= ONE:
                raise InvalidTNormError(self.name, 'range', (x, y))
            if self(y, x) != value:
                raise InvalidTNormError(self.name, 'commutativity', (x, y))
        for x in points:
            if self(x, ONE) != x:
                raise InvalidTNormError(self.name, 'unit', (x,))
        for x, (y1, y2) in product(points, zip(points, points[1:])):
            if self(x, y1) > self(x, y2):
                raise InvalidTNormError(self.name, 'monotonicity', (x, y1, y2))
        for x, y, z in product(points, repeat=3):
            if self(self(x, y), z) != self(x, self(y, z)):
                raise InvalidTNormError(self.name, 'associativity', (x, y, z))
        for x, y in product(points, repeat=2):
            self.residuum(x, y)
        logger.debug(f"T-norme utilisateur '{self.name}' validée sur la grille k={k}")

    def residuum(self, x, y, grid=None):
        """
        Résidu par dichotomie jusqu'à une largeur de 2^-64.

        Le point limite de l'intervalle doit vérifier T(x, z) <= y, sinon la
        t-norme n'est pas continue à gauche. Avec une grille active, le sup
        est ramené au point de grille le plus proche; s'il tombe entre deux
        points, on garde le plus grand point de grille qui convient.

        Raises:
            NonLeftContinuousError: Si le sup n'est pas atteint
        """
        x, y = Fraction(x), Fraction(y)
        if self(x, ONE) <= y:
            return ONE
        lo, hi = ZERO, ONE
        while hi - lo > BISECTION_WIDTH:
            mid = (lo + hi) / 2
            if self(x, mid) <= y:
                lo = mid
            else:
                hi = mid

        if grid is not None:
            snapped = snap_to_grid(lo, grid)
            if abs(snapped - lo) <= BISECTION_WIDTH:
                if self(x, snapped) > y:
                    raise NonLeftContinuousError(self.name, x, y)
                return snapped
            floor = Fraction(int(lo * grid), grid)
            return floor

        candidate = lo.limit_denominator(2 ** 32)
        if lo <= candidate <= hi:
            if self(x, candidate) > y:
                raise NonLeftContinuousError(self.name, x, y)
            return candidate
        return lo


def _nilpotent_minimum(x, y):
    return min(x, y) if x + y > 1 else ZERO


GOEDEL = GoedelTNorm()
LUKASIEWICZ = LukasiewiczTNorm()
PRODUCT = ProductTNorm()

_ALIASES: Dict[str, str] = {
    'goedel': 'goedel',
    'godel': 'goedel',
    'gödel': 'goedel',
    'min': 'goedel',
    'lukasiewicz': 'lukasiewicz',
    'luka': 'lukasiewicz',
    'product': 'product',
    'prod': 'product',
    'nilpotent-minimum': 'nilpotent-minimum',
    'nm': 'nilpotent-minimum',
}

_registry: Dict[str, TNorm] = {
    'goedel': GOEDEL,
    'lukasiewicz': LUKASIEWICZ,
    'product': PRODUCT,
}

NAMED_TNORMS = ('goedel', 'lukasiewicz', 'product')


def get_tnorm(name: str) -> TNorm:
    """
    Retourne la t-norme nommée.

    Args:
        name: goedel (godel, min), lukasiewicz (luka), product ou nilpotent-minimum

    Returns:
        TNorm

    Raises:
        ValidationError: Si le nom est inconnu
    """
    key = _ALIASES.get((name or '').strip().lower())
    if key is None:
        raise ValidationError(f"T-norme inconnue: {name!r}")
    if key not in _registry:
        # Validation coûteuse, faite une seule fois
        _registry[key] = UserTNorm(key, _nilpotent_minimum)
    return _registry[key]
