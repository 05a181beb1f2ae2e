# arglogic/models/formula.py
"""
Modèles de données pour les formules propositionnelles.

Les atomes sont des noms d'arguments. Les conjonctions et disjonctions sont
n-aires; les constructeurs `conj` et `disj` normalisent la liste vide
(⊤ pour la conjonction, ⊥ pour la disjonction) et la liste à un élément.
"""
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple, Union


@dataclass(frozen=True)
class Top:
    """Constante ⊤."""


@dataclass(frozen=True)
class Bottom:
    """Constante ⊥."""


@dataclass(frozen=True)
class Atom:
    """Atome: un argument du framework."""
    name: str


@dataclass(frozen=True)
class Not:
    child: 'Formula'


@dataclass(frozen=True)
class And:
    """Conjonction n-aire (au moins un enfant)."""
    children: Tuple['Formula', ...]

    def __post_init__(self):
        if not self.children:
            raise ValueError("Une conjonction doit avoir au moins un enfant, utiliser conj()")


@dataclass(frozen=True)
class Or:
    """Disjonction n-aire (au moins un enfant)."""
    children: Tuple['Formula', ...]

    def __post_init__(self):
        if not self.children:
            raise ValueError("Une disjonction doit avoir au moins un enfant, utiliser disj()")


@dataclass(frozen=True)
class Implies:
    lhs: 'Formula'
    rhs: 'Formula'


@dataclass(frozen=True)
class Iff:
    """Biimplication, évaluée comme la conjonction des deux implications."""
    lhs: 'Formula'
    rhs: 'Formula'


Formula = Union[Top, Bottom, Atom, Not, And, Or, Implies, Iff]

TOP = Top()
BOTTOM = Bottom()


def conj(items: Iterable[Formula]) -> Formula:
    """Conjonction normalisée: vide -> ⊤, singleton -> l'élément lui-même."""
    items = tuple(items)
    if not items:
        return TOP
    if len(items) == 1:
        return items[0]
    return And(items)


def disj(items: Iterable[Formula]) -> Formula:
    """Disjonction normalisée: vide -> ⊥, singleton -> l'élément lui-même."""
    items = tuple(items)
    if not items:
        return BOTTOM
    if len(items) == 1:
        return items[0]
    return Or(items)


def children_of(f: Formula) -> Tuple[Formula, ...]:
    """Sous-formules directes de `f`."""
    if isinstance(f, Not):
        return (f.child,)
    if isinstance(f, (And, Or)):
        return f.children
    if isinstance(f, (Implies, Iff)):
        return (f.lhs, f.rhs)
    return ()


def atoms_of(f: Formula) -> FrozenSet[str]:
    """Ensemble exact des atomes apparaissant dans `f`."""
    atoms = set()
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            atoms.add(node.name)
        else:
            stack.extend(children_of(node))
    return frozenset(atoms)


def formula_size(f: Formula) -> int:
    """Nombre de nœuds de la formule."""
    size = 0
    stack = [f]
    while stack:
        node = stack.pop()
        size += 1
        stack.extend(children_of(node))
    return size
