# arglogic/models/framework.py
"""
Modèles de données pour les frameworks d'argumentation abstraits.

Ce module définit les classes de modèles typés pour représenter
les arguments et le graphe d'attaques d'un framework.
"""
import re
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import ClassVar, Dict, FrozenSet, Iterable, Iterator, Mapping, Pattern, Tuple

import networkx as nx

from ..exceptions import UndeclaredArgumentError, ValidationError


@dataclass(frozen=True, order=True)
class ArgumentId:
    """Représente un argument: position canonique et nom."""
    index: int
    name: str

    NAME_PATTERN: ClassVar[Pattern] = re.compile(r'[A-Za-z0-9_]+')

    def __post_init__(self):
        """Validation après initialisation."""
        if not self.NAME_PATTERN.fullmatch(self.name or ''):
            raise ValidationError(f"Nom d'argument invalide: {self.name!r}")

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class ArgumentationFramework:
    """
    Framework d'argumentation (A, R) fini.

    L'ordre des arguments est l'ordre de déclaration; toutes les énumérations
    et sorties en dérivent.
    """
    arguments: Tuple[ArgumentId, ...]
    attacks: FrozenSet[Tuple[ArgumentId, ArgumentId]]
    attackers_index: Mapping[str, Tuple[ArgumentId, ...]] = field(init=False, repr=False, compare=False)
    graph: nx.DiGraph = field(init=False, repr=False, compare=False)
    _by_name: Mapping[str, ArgumentId] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        by_name: Dict[str, ArgumentId] = {}
        for position, argument in enumerate(self.arguments):
            if argument.index != position:
                raise ValidationError(
                    f"Index incohérent pour '{argument.name}': {argument.index} != {position}"
                )
            if argument.name in by_name:
                raise ValidationError(f"Argument déclaré deux fois: {argument.name}")
            by_name[argument.name] = argument

        graph = nx.DiGraph()
        graph.add_nodes_from(argument.name for argument in self.arguments)
        for attacker, target in self.attacks:
            for endpoint in (attacker, target):
                if by_name.get(endpoint.name) != endpoint:
                    raise UndeclaredArgumentError(endpoint.name)
            graph.add_edge(attacker.name, target.name)

        attackers_index = {
            argument.name: tuple(sorted(by_name[b] for b in graph.predecessors(argument.name)))
            for argument in self.arguments
        }

        object.__setattr__(self, '_by_name', MappingProxyType(by_name))
        object.__setattr__(self, 'graph', nx.freeze(graph))
        object.__setattr__(self, 'attackers_index', MappingProxyType(attackers_index))

    @classmethod
    def from_names(cls,
                   names: Iterable[str],
                   attacks: Iterable[Tuple[str, str]] = ()) -> 'ArgumentationFramework':
        """
        Crée un framework à partir de noms d'arguments et de paires d'attaques.

        Args:
            names: Noms des arguments, dans l'ordre canonique
            attacks: Paires (attaquant, cible); les doublons sont fusionnés

        Returns:
            Instance d'ArgumentationFramework

        Raises:
            UndeclaredArgumentError: Si une extrémité d'attaque n'est pas déclarée
            ValidationError: Si un nom est invalide ou dupliqué
        """
        arguments = tuple(ArgumentId(index, name) for index, name in enumerate(names))
        by_name = {argument.name: argument for argument in arguments}
        resolved = set()
        for attacker, target in attacks:
            for endpoint in (attacker, target):
                if endpoint not in by_name:
                    raise UndeclaredArgumentError(endpoint)
            resolved.add((by_name[attacker], by_name[target]))
        return cls(arguments=arguments, attacks=frozenset(resolved))

    @classmethod
    def from_networkx(cls, graph: nx.DiGraph) -> 'ArgumentationFramework':
        """Crée un framework depuis un graphe orienté networkx (ordre des nœuds = ordre canonique)."""
        return cls.from_names([str(node) for node in graph.nodes],
                              [(str(u), str(v)) for u, v in graph.edges])

    def to_networkx(self) -> nx.DiGraph:
        """Retourne une copie modifiable du graphe d'attaques."""
        return nx.DiGraph(self.graph)

    @property
    def names(self) -> Tuple[str, ...]:
        """Noms des arguments dans l'ordre canonique."""
        return tuple(argument.name for argument in self.arguments)

    def argument(self, name: str) -> ArgumentId:
        """Retourne l'argument nommé `name`."""
        try:
            return self._by_name[name]
        except KeyError:
            raise UndeclaredArgumentError(name) from None

    def attackers_of(self, name: str) -> Tuple[ArgumentId, ...]:
        """Attaquants de `name`, dans l'ordre canonique."""
        try:
            return self.attackers_index[name]
        except KeyError:
            raise UndeclaredArgumentError(name) from None

    def attacker_names(self, name: str) -> Tuple[str, ...]:
        return tuple(b.name for b in self.attackers_of(name))

    def attacks_between(self, attacker: str, target: str) -> bool:
        return self.graph.has_edge(attacker, target)

    def attack_names(self) -> Tuple[Tuple[str, str], ...]:
        """Attaques sous forme de paires de noms, triées lexicographiquement."""
        return tuple(sorted((b.name, a.name) for b, a in self.attacks))

    def is_unattacked(self, name: str) -> bool:
        return not self.attackers_of(name)

    def __len__(self) -> int:
        return len(self.arguments)

    def __iter__(self) -> Iterator[ArgumentId]:
        return iter(self.arguments)

    def __contains__(self, name: object) -> bool:
        if isinstance(name, ArgumentId):
            name = name.name
        return name in self._by_name

    def __str__(self) -> str:
        attacks = ', '.join(f"({x},{y})" for x, y in self.attack_names())
        return f"AF({{{', '.join(self.names)}}}, {{{attacks}}})"


def empty_framework() -> ArgumentationFramework:
    """Framework sans argument."""
    return ArgumentationFramework.from_names([], [])
