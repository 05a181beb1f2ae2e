# arglogic/logic/negation.py
"""
Négations floues: la négation standard et les négations linéaires par morceaux.
"""
import re
from abc import ABC, abstractmethod
from bisect import bisect_right
from fractions import Fraction
from typing import Sequence, Tuple

from ..exceptions import InvalidNegationError, ValidationError
from .truth import ONE, ZERO, Number, parse_truth_value


class Negation(ABC):
    """Négation N: N(0)=1, N(1)=0, non croissante."""

    name: str = 'negation'

    @abstractmethod
    def __call__(self, x: Number) -> Number:
        """Applique la négation."""

    @property
    def is_standard(self) -> bool:
        return False

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name})"


class StandardNegation(Negation):
    """N(x) = 1 - x."""

    name = 'standard'

    def __call__(self, x: Number) -> Number:
        return 1 - x

    @property
    def is_standard(self) -> bool:
        return True

    def __eq__(self, other) -> bool:
        return isinstance(other, StandardNegation)

    def __hash__(self) -> int:
        return hash(self.name)


class TableNegation(Negation):
    """
    Négation linéaire par morceaux définie par des points d'appui (x, N(x)).

    Les abscisses doivent être strictement croissantes de 0 à 1; les ordonnées
    partent de 1, finissent à 0 et ne croissent jamais.
    """

    def __init__(self, breakpoints: Sequence[Tuple[Number, Number]]):
        points = tuple((parse_truth_value(x), parse_truth_value(y)) for x, y in breakpoints)
        if len(points) < 2:
            raise InvalidNegationError("Au moins deux points d'appui sont nécessaires")
        xs = [x for x, _ in points]
        ys = [y for _, y in points]
        if xs[0] != ZERO or xs[-1] != ONE:
            raise InvalidNegationError("Les points d'appui doivent couvrir [0, 1]")
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise InvalidNegationError("Abscisses non strictement croissantes")
        if ys[0] != ONE or ys[-1] != ZERO:
            raise InvalidNegationError("Il faut N(0) = 1 et N(1) = 0")
        if any(b > a for a, b in zip(ys, ys[1:])):
            raise InvalidNegationError("La négation doit être non croissante")
        self.breakpoints = points
        self._xs = xs
        self.name = 'table(' + ','.join(f"{x}={y}" for x, y in points) + ')'

    def __call__(self, x: Number) -> Number:
        if x >= 1:
            return self.breakpoints[-1][1] if isinstance(x, Fraction) else float(self.breakpoints[-1][1])
        i = bisect_right(self._xs, x) - 1
        (x0, y0), (x1, y1) = self.breakpoints[i], self.breakpoints[i + 1]
        if not isinstance(x, Fraction):
            x0, y0, x1, y1 = float(x0), float(y0), float(x1), float(y1)
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0)

    @property
    def is_standard(self) -> bool:
        return all(y == 1 - x for x, y in self.breakpoints)

    def __eq__(self, other) -> bool:
        return isinstance(other, TableNegation) and other.breakpoints == self.breakpoints

    def __hash__(self) -> int:
        return hash(self.breakpoints)


STANDARD_NEGATION = StandardNegation()

_TABLE_PATTERN = re.compile(r'table\((?P<body>[^)]*)\)')


def parse_negation(spec: str) -> Negation:
    """
    Construit une négation depuis sa description textuelle.

    Args:
        spec: 'standard' ou 'table(0=1,1/2=1/4,1=0)'

    Returns:
        Negation

    Raises:
        ValidationError: Si la description est invalide
    """
    spec = (spec or '').strip().lower()
    if spec in ('standard', 'std', ''):
        return STANDARD_NEGATION
    match = _TABLE_PATTERN.fullmatch(spec)
    if not match:
        raise ValidationError(f"Négation inconnue: {spec!r}")
    points = []
    for item in match.group('body').split(','):
        if '=' not in item:
            raise ValidationError(f"Point d'appui mal formé: {item!r}")
        x, y = item.split('=', 1)
        points.append((x, y))
    return TableNegation(points)
