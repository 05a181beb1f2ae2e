# arglogic/logic/system.py
"""
Systèmes logiques propositionnels: PL2, PL3 de Kleene, PL3 de Łukasiewicz
et systèmes flous paramétrés par une négation et une t-norme.

Les implications des systèmes finis sont des tables littérales indexées par
le domaine; les formes closes ne servent qu'à les recouper dans les tests.
"""
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from ..exceptions import DomainViolationError, ValidationError
from .negation import STANDARD_NEGATION, Negation, parse_negation
from .tnorm import TNorm, get_tnorm
from .truth import BINARY_VALUES, HALF, ONE, TERNARY_VALUES, ZERO, Number

ImplicationTable = Tuple[Tuple[Fraction, ...], ...]

# Lignes: x, colonnes: y, dans l'ordre du domaine
CLASSICAL_IMPLICATION: ImplicationTable = (
    (ONE, ONE),
    (ZERO, ONE),
)

KLEENE_IMPLICATION: ImplicationTable = (
    (ONE, ONE, ONE),
    (HALF, HALF, ONE),
    (ZERO, HALF, ONE),
)

LUKASIEWICZ_IMPLICATION: ImplicationTable = (
    (ONE, ONE, ONE),
    (HALF, ONE, ONE),
    (ZERO, HALF, ONE),
)


class SystemKind(Enum):
    PL2 = 'pl2'
    PL3K = 'pl3k'
    PL3L = 'pl3l'
    FUZZY = 'fuzzy'


@dataclass(frozen=True)
class LogicSystem:
    """
    Système logique (domaine, connecteurs).

    Pour les systèmes finis, ¬ = 1 - x, ∧ = min, ∨ = max et → suit la table.
    Pour les systèmes flous, ¬ = N, ∧ = T, → = résidu de T, ∨ = max.
    """
    kind: SystemKind
    domain: Tuple[Fraction, ...] = ()
    implication_table: ImplicationTable = ()
    negation: Optional[Negation] = None
    tnorm: Optional[TNorm] = None

    def __post_init__(self):
        if self.kind is SystemKind.FUZZY:
            if self.negation is None or self.tnorm is None:
                raise ValidationError("Un système flou requiert une négation et une t-norme")
            return
        size = len(self.domain)
        if size == 0 or len(self.implication_table) != size or any(len(row) != size for row in self.implication_table):
            raise ValidationError(f"Table d'implication incohérente pour {self.kind.value}")

    @classmethod
    def pl2(cls) -> 'LogicSystem':
        return cls(SystemKind.PL2, BINARY_VALUES, CLASSICAL_IMPLICATION)

    @classmethod
    def pl3k(cls) -> 'LogicSystem':
        return cls(SystemKind.PL3K, TERNARY_VALUES, KLEENE_IMPLICATION)

    @classmethod
    def pl3l(cls) -> 'LogicSystem':
        return cls(SystemKind.PL3L, TERNARY_VALUES, LUKASIEWICZ_IMPLICATION)

    @classmethod
    def fuzzy(cls, negation: Negation = STANDARD_NEGATION, tnorm: TNorm = None) -> 'LogicSystem':
        return cls(SystemKind.FUZZY, negation=negation, tnorm=tnorm if tnorm is not None else get_tnorm('goedel'))

    @property
    def is_finite(self) -> bool:
        return self.kind is not SystemKind.FUZZY

    @property
    def name(self) -> str:
        if self.is_finite:
            return self.kind.value
        return f"fuzzy:{self.negation.name}:{self.tnorm.name}"

    def with_implication_cell(self, x: Number, y: Number, value: Number) -> 'LogicSystem':
        """Copie du système avec une cellule de la table d'implication remplacée."""
        if not self.is_finite:
            raise ValidationError("Seuls les systèmes finis ont une table d'implication")
        i, j = self._index(x), self._index(y)
        rows = [list(row) for row in self.implication_table]
        rows[i][j] = Fraction(value)
        return replace(self, implication_table=tuple(tuple(row) for row in rows))

    def _index(self, value: Number) -> int:
        try:
            return self.domain.index(value)
        except ValueError:
            raise DomainViolationError('?', value, self.name) from None

    def check_value(self, name: str, value: Number) -> Number:
        """
        Vérifie qu'une valeur appartient au domaine du système.

        Raises:
            DomainViolationError: Si la valeur est hors domaine
        """
        if self.is_finite:
            if value not in self.domain:
                raise DomainViolationError(name, value, self.name)
        elif not 0 <= value <= 1:
            raise DomainViolationError(name, value, self.name)
        return value

    # Connecteurs

    def neg(self, x: Number) -> Number:
        if self.is_finite:
            return 1 - x
        return self.negation(x)

    def conj(self, values: Sequence[Number]) -> Number:
        if self.is_finite:
            return min(values, default=ONE)
        return self.tnorm.fold(values)

    def disj(self, values: Sequence[Number]) -> Number:
        return max(values, default=ZERO)

    def implies(self, x: Number, y: Number, grid: Optional[int] = None) -> Number:
        if self.is_finite:
            return self.implication_table[self._index(x)][self._index(y)]
        return self.tnorm.residuum(x, y, grid)

    def iff(self, x: Number, y: Number, grid: Optional[int] = None) -> Number:
        forward = self.implies(x, y, grid)
        backward = self.implies(y, x, grid)
        if self.is_finite:
            return min(forward, backward)
        return self.tnorm(forward, backward)

    def __str__(self) -> str:
        return self.name


def parse_logic_spec(spec: str) -> LogicSystem:
    """
    Construit un système logique depuis sa description.

    Args:
        spec: 'pl2', 'pl3k', 'pl3l' ou 'fuzzy:<négation>:<t-norme>'
              ('fuzzy' seul vaut 'fuzzy:standard:goedel')

    Returns:
        LogicSystem

    Raises:
        ValidationError: Si la description est invalide
    """
    text = (spec or '').strip().lower()
    if text == 'pl2':
        return LogicSystem.pl2()
    if text == 'pl3k':
        return LogicSystem.pl3k()
    if text == 'pl3l':
        return LogicSystem.pl3l()
    if text == 'fuzzy' or text.startswith('fuzzy:'):
        parts = text.split(':')
        negation = parse_negation(parts[1]) if len(parts) > 1 else STANDARD_NEGATION
        tnorm = get_tnorm(parts[2]) if len(parts) > 2 else get_tnorm('goedel')
        if len(parts) > 3:
            raise ValidationError(f"Système logique mal formé: {spec!r}")
        return LogicSystem.fuzzy(negation, tnorm)
    raise ValidationError(f"Système logique inconnu: {spec!r}")
