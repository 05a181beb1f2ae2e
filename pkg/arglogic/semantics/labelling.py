# arglogic/semantics/labelling.py
"""
Sémantiques de Dung par vérification des définitions sur énumération exhaustive.

Les étiquetages sont numériques: 1 (in), 0 (out), 1/2 (undec).
"""
import logging
from enum import Enum
from typing import AbstractSet, FrozenSet, List, Optional

from ..exceptions import ValidationError
from ..logic.enumeration import finite_assignments
from ..logic.truth import BINARY_VALUES, HALF, ONE, TERNARY_VALUES, ZERO, Assignment
from ..models.framework import ArgumentationFramework
from ..utils.config_manager import Limits

logger = logging.getLogger(__name__)

Labelling = Assignment


class SemanticsName(Enum):
    CONFLICT_FREE = 'conflict-free'
    ADMISSIBLE = 'admissible'
    COMPLETE = 'complete'
    STABLE = 'stable'
    GROUNDED = 'grounded'
    PREFERRED = 'preferred'

    @classmethod
    def parse(cls, text: str) -> 'SemanticsName':
        key = (text or '').strip().lower().replace('_', '-')
        aliases = {'cf': 'conflict-free', 'adm': 'admissible', 'co': 'complete',
                   'st': 'stable', 'gr': 'grounded', 'pr': 'preferred'}
        key = aliases.get(key, key)
        for member in cls:
            if member.value == key:
                return member
        raise ValidationError(f"Sémantique inconnue: {text!r}")


def is_complete_labelling(af: ArgumentationFramework, lab: Labelling) -> bool:
    """
    Vérifie la condition d'étiquetage complet argument par argument.

    1 ssi tous les attaquants valent 0 (ou aucun attaquant); 0 ssi un attaquant
    vaut 1; 1/2 sinon.
    """
    for a in af.arguments:
        attacker_values = [lab[b] for b in af.attackers_of(a.name)]
        if all(x == ZERO for x in attacker_values):
            expected = ONE
        elif any(x == ONE for x in attacker_values):
            expected = ZERO
        else:
            expected = HALF
        if lab[a] != expected:
            return False
    return True


def extension_of(lab: Labelling) -> FrozenSet[str]:
    """Cœur de l'étiquetage: les arguments valant 1."""
    return frozenset(name for name, value in lab.items() if value == ONE)


def is_conflict_free(af: ArgumentationFramework, extension: AbstractSet[str]) -> bool:
    """Aucune attaque entre deux membres de l'extension."""
    return not any(af.attacks_between(x, y) for x in extension for y in extension)


def defends(af: ArgumentationFramework, extension: AbstractSet[str], name: str) -> bool:
    """Chaque attaquant de `name` est attaqué par un membre de l'extension."""
    return all(
        any(af.attacks_between(c, b) for c in extension)
        for b in af.attacker_names(name)
    )


def is_admissible(af: ArgumentationFramework, extension: AbstractSet[str]) -> bool:
    """Sans conflit et défendant chacun de ses membres."""
    return is_conflict_free(af, extension) and all(defends(af, extension, a) for a in extension)


def labelling_from_extension(af: ArgumentationFramework, extension: AbstractSet[str]) -> Labelling:
    """
    Étiquetage associé à une extension: 1 dans S, 0 pour les arguments attaqués
    par S, 1/2 sinon.
    """
    values = []
    for name in af.names:
        if name in extension:
            values.append(ONE)
        elif any(b in extension for b in af.attacker_names(name)):
            values.append(ZERO)
        else:
            values.append(HALF)
    return Assignment(af.names, tuple(values))


def complete_labellings(af: ArgumentationFramework, limits: Optional[Limits] = None) -> List[Labelling]:
    return [lab for lab in finite_assignments(af, TERNARY_VALUES, limits) if is_complete_labelling(af, lab)]


def _minimal(labellings: List[Labelling]) -> List[Labelling]:
    cores = [extension_of(lab) for lab in labellings]
    return [lab for lab, core in zip(labellings, cores) if not any(other < core for other in cores)]


def _maximal(labellings: List[Labelling]) -> List[Labelling]:
    cores = [extension_of(lab) for lab in labellings]
    return [lab for lab, core in zip(labellings, cores) if not any(core < other for other in cores)]


def dung_labellings(af: ArgumentationFramework, s: SemanticsName,
                    limits: Optional[Limits] = None) -> List[Labelling]:
    """
    Étiquetages d'une sémantique de Dung.

    Args:
        af: Framework
        s: Sémantique
        limits: Limites d'énumération

    Returns:
        Liste ordonnée lexicographiquement (0 < 1/2 < 1)

    Raises:
        ResourceLimitError: Si le framework dépasse la limite d'arguments
    """
    if s in (SemanticsName.CONFLICT_FREE, SemanticsName.ADMISSIBLE):
        check = is_conflict_free if s is SemanticsName.CONFLICT_FREE else is_admissible
        result = [lab for lab in finite_assignments(af, BINARY_VALUES, limits)
                  if check(af, extension_of(lab))]
    else:
        complete = complete_labellings(af, limits)
        if s is SemanticsName.COMPLETE:
            result = complete
        elif s is SemanticsName.STABLE:
            result = [lab for lab in complete if HALF not in lab.values]
        elif s is SemanticsName.GROUNDED:
            result = _minimal(complete)
        else:
            result = _maximal(complete)

    logger.debug(f"{s.value}: {len(result)} étiquetage(s) pour {len(af)} argument(s)")
    return result
