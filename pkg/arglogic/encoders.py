# arglogic/encoders.py
"""
Encodages des frameworks d'argumentation en formules propositionnelles.

- encodage normal: ⋀_a (a ↔ ⋀_{(b,a)} ¬b)
- encodage régulier: ⋀_a ((a → ⋀_{(b,a)} ¬b) ∧ (a ↔ ⋀_{(b,a)} ⋁_{(c,b)} c))

Toutes les conjonctions et disjonctions suivent l'ordre canonique des arguments.
"""
from typing import List

from .exceptions import ValidationError
from .models.formula import Atom, Formula, Iff, Implies, Not, conj, disj
from .models.framework import ArgumentationFramework

ENCODINGS = ('normal', 'regular')


def _attack_rejection(af: ArgumentationFramework, name: str) -> Formula:
    return conj(Not(Atom(b.name)) for b in af.attackers_of(name))


def encode_normal(af: ArgumentationFramework) -> Formula:
    """
    Encodage normal ec1.

    Un argument non attaqué donne (a ↔ ⊤); un framework vide donne ⊤.
    """
    return conj(Iff(Atom(a.name), _attack_rejection(af, a.name)) for a in af.arguments)


def encode_regular(af: ArgumentationFramework) -> Formula:
    """
    Encodage régulier ec2.

    Les deux conjoints de chaque argument sont mis à plat dans la conjonction externe.
    """
    conjuncts: List[Formula] = []
    for a in af.arguments:
        atom = Atom(a.name)
        defence = conj(
            disj(Atom(c.name) for c in af.attackers_of(b.name))
            for b in af.attackers_of(a.name)
        )
        conjuncts.append(Implies(atom, _attack_rejection(af, a.name)))
        conjuncts.append(Iff(atom, defence))
    return conj(conjuncts)


def encode(af: ArgumentationFramework, encoding: str) -> Formula:
    """Applique l'encodage nommé ('normal' ou 'regular')."""
    if encoding == 'normal':
        return encode_normal(af)
    if encoding == 'regular':
        return encode_regular(af)
    raise ValidationError(f"Encodage inconnu: {encoding}")
