# arglogic/verify/fixtures.py
"""
Frameworks de référence utilisés par la vérification et les tests.
"""
from typing import Dict

import networkx as nx

from ..models.framework import ArgumentationFramework, empty_framework


def _cycle(n: int) -> ArgumentationFramework:
    names = ['a', 'b', 'c', 'd', 'e', 'f'][:n]
    graph = nx.relabel_nodes(nx.cycle_graph(n, create_using=nx.DiGraph), dict(enumerate(names)))
    return ArgumentationFramework.from_networkx(graph)


def fixture_frameworks() -> Dict[str, ArgumentationFramework]:
    """
    Jeu de frameworks fixes, dans un ordre stable.

    Returns:
        Dictionnaire nom -> framework
    """
    return {
        'empty': empty_framework(),
        'single': ArgumentationFramework.from_names(['a'], []),
        'self-attacker': ArgumentationFramework.from_names(['a'], [('a', 'a')]),
        'chain': ArgumentationFramework.from_names(['a', 'b'], [('a', 'b')]),
        'mutual': ArgumentationFramework.from_names(['a', 'b'], [('a', 'b'), ('b', 'a')]),
        '3-cycle': _cycle(3),
        '4-cycle': _cycle(4),
        'mutual-plus-c': ArgumentationFramework.from_names(
            ['a', 'b', 'c'], [('a', 'b'), ('b', 'a'), ('b', 'c')]
        ),
    }
