# arglogic/semantics/transforms.py
"""
Binarisation (totale) et ternarisation (partielle) des étiquetages numériques.
"""
from ..exceptions import PartialityError
from ..logic.truth import HALF, ONE, ZERO, Assignment
from ..models.framework import ArgumentationFramework


def binarize(v: Assignment) -> Assignment:
    """1 reste 1, toute autre valeur devient 0."""
    return v.with_values(ONE if x == ONE else ZERO for x in v.values)


def ternarize(af: ArgumentationFramework, v: Assignment) -> Assignment:
    """
    Ternarisation T_com.

    Par argument a: 1 si v(a) = 1; sinon 0 si un attaquant vaut 1; sinon 1/2.

    Raises:
        PartialityError: Si v(a) = 1 et qu'un attaquant de a vaut aussi 1
    """
    values = []
    for a in af.arguments:
        hit = next((b.name for b in af.attackers_of(a.name) if v[b] == ONE), None)
        if v[a] == ONE:
            if hit is not None:
                raise PartialityError(a.name, hit)
            values.append(ONE)
        elif hit is not None:
            values.append(ZERO)
        else:
            values.append(HALF)
    return Assignment(af.names, tuple(values))
