# arglogic/generator.py
"""
Génération pseudo-aléatoire et déterministe de frameworks d'argumentation.
"""
import logging
import random

from .exceptions import ValidationError
from .models.framework import ArgumentationFramework

logger = logging.getLogger(__name__)


def random_af(n: int, p: float, seed: int) -> ArgumentationFramework:
    """
    Génère un framework aléatoire à arguments a0..a(n-1).

    Chaque paire ordonnée (boucles comprises) est une attaque, indépendamment,
    avec probabilité p. Le résultat ne dépend que de (n, p, seed).

    Args:
        n: Nombre d'arguments (n >= 0)
        p: Probabilité d'attaque (0 <= p <= 1)
        seed: Graine du générateur

    Returns:
        ArgumentationFramework

    Raises:
        ValidationError: Si n ou p sont hors bornes
    """
    if n < 0:
        raise ValidationError(f"Nombre d'arguments négatif: {n}")
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"Probabilité hors de [0, 1]: {p}")

    rng = random.Random(seed)
    names = [f"a{i}" for i in range(n)]
    # Un tirage par paire dans l'ordre (i, j), même pour p = 0 ou 1
    attacks = [(x, y) for x in names for y in names if rng.random() < p]

    logger.debug(f"random_af(n={n}, p={p}, seed={seed}): {len(attacks)} attaques")
    return ArgumentationFramework.from_names(names, attacks)
