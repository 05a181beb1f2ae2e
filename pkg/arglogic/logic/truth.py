# arglogic/logic/truth.py
"""
Valeurs de vérité et assignations.

Les valeurs de vérité sont des rationnels exacts (fractions.Fraction) dans [0, 1].
Une assignation associe une valeur à chaque argument d'un framework, dans
l'ordre canonique des arguments.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

from ..exceptions import DomainViolationError, ValidationError
from ..models.framework import ArgumentId, ArgumentationFramework

TruthValue = Fraction
Number = Union[Fraction, float]

ZERO = Fraction(0)
HALF = Fraction(1, 2)
ONE = Fraction(1)

BINARY_VALUES: Tuple[Fraction, ...] = (ZERO, ONE)
TERNARY_VALUES: Tuple[Fraction, ...] = (ZERO, HALF, ONE)


def parse_truth_value(value) -> Fraction:
    """
    Convertit une valeur ('1/2', '0.25', 1, Fraction...) en valeur de vérité exacte.

    Args:
        value: Chaîne, entier, flottant ou Fraction

    Returns:
        Fraction dans [0, 1]

    Raises:
        ValidationError: Si la valeur est illisible ou hors de [0, 1]
    """
    try:
        if isinstance(value, float):
            result = Fraction(str(value))
        else:
            result = Fraction(value.strip() if isinstance(value, str) else value)
    except (ValueError, TypeError, ZeroDivisionError) as e:
        raise ValidationError(f"Valeur de vérité illisible: {value!r}") from e
    if not ZERO <= result <= ONE:
        raise ValidationError(f"Valeur de vérité hors de [0, 1]: {value!r}")
    return result


def format_truth_value(value: Number) -> str:
    """Représentation textuelle: fraction exacte 'p/q', ou flottant en mode approché."""
    if isinstance(value, Fraction):
        return str(value)
    return repr(float(value))


def grid_values(k: int) -> Tuple[Fraction, ...]:
    """Points de grille {0, 1/k, ..., 1}."""
    if k < 1:
        raise ValidationError(f"Résolution de grille invalide: {k}")
    return tuple(Fraction(i, k) for i in range(k + 1))


def snap_to_grid(value: Fraction, k: int) -> Fraction:
    """Rationnel de la grille de résolution k le plus proche de `value`."""
    return Fraction(round(value * k), k)


@dataclass(frozen=True)
class Assignment:
    """Assignation totale argument -> valeur, alignée sur l'ordre canonique."""
    names: Tuple[str, ...]
    values: Tuple[Number, ...]

    def __post_init__(self):
        if len(self.names) != len(self.values):
            raise ValidationError(
                f"Assignation incohérente: {len(self.names)} noms pour {len(self.values)} valeurs"
            )

    @classmethod
    def of(cls, af: ArgumentationFramework, values: Sequence) -> 'Assignment':
        """Crée une assignation à partir des valeurs dans l'ordre canonique de `af`."""
        return cls(af.names, tuple(parse_truth_value(v) if not isinstance(v, Fraction) else v
                                   for v in values))

    @classmethod
    def from_mapping(cls, af: ArgumentationFramework, mapping: Mapping[str, object]) -> 'Assignment':
        """
        Crée une assignation à partir d'un dictionnaire nom -> valeur.

        Raises:
            ValidationError: Si le domaine du dictionnaire diffère des arguments de `af`
        """
        keys = {k.name if isinstance(k, ArgumentId) else k for k in mapping}
        if keys != set(af.names):
            missing = sorted(set(af.names) - keys)
            extra = sorted(keys - set(af.names))
            raise ValidationError(f"Domaine d'assignation invalide (manquants: {missing}, en trop: {extra})")
        normalized = {(k.name if isinstance(k, ArgumentId) else k): v for k, v in mapping.items()}
        return cls.of(af, [normalized[name] for name in af.names])

    @classmethod
    def constant(cls, af: ArgumentationFramework, value: Number) -> 'Assignment':
        return cls(af.names, tuple(value for _ in af.names))

    @cached_property
    def lookup(self) -> Dict[str, Number]:
        return dict(zip(self.names, self.values))

    def __getitem__(self, key: Union[str, ArgumentId]) -> Number:
        name = key.name if isinstance(key, ArgumentId) else key
        try:
            return self.lookup[name]
        except KeyError:
            raise DomainViolationError(name, None, "assignation") from None

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def items(self) -> Iterable[Tuple[str, Number]]:
        return zip(self.names, self.values)

    def with_values(self, values: Iterable[Number]) -> 'Assignment':
        return Assignment(self.names, tuple(values))

    def is_within(self, domain: Iterable[Number]) -> bool:
        allowed = set(domain)
        return all(v in allowed for v in self.values)

    def as_strings(self) -> Dict[str, str]:
        return {name: format_truth_value(value) for name, value in self.items()}

    def __str__(self) -> str:
        return '(' + ', '.join(f"{n}={format_truth_value(v)}" for n, v in self.items()) + ')'
