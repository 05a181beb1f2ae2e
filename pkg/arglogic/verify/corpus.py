# arglogic/verify/corpus.py
"""
Campagnes de vérification sur un jeu de frameworks (fixtures ou corpus aléatoire).
"""
import logging
import random
from typing import Iterable, List, Optional, Sequence

from ..exceptions import ValidationError
from ..generator import random_af
from ..models.framework import ArgumentationFramework
from .checkers import verify_theorem
from .context import FrameworkContext
from .fixtures import fixture_frameworks
from .report import VerificationReport
from .theorems import TheoremId, VerificationParams

logger = logging.getLogger(__name__)

DEFAULT_P_LIST = (0.1, 0.25, 0.5)


def generate_corpus(seed: int, count: int, n_max: int,
                    p_list: Sequence[float] = DEFAULT_P_LIST) -> List[ArgumentationFramework]:
    """
    Génère un corpus déterministe de frameworks aléatoires.

    Args:
        seed: Graine du corpus
        count: Nombre de frameworks
        n_max: Nombre maximal d'arguments (n tiré dans [1, n_max])
        p_list: Probabilités d'attaque candidates

    Returns:
        Liste de frameworks, identique pour des entrées identiques

    Raises:
        ValidationError: Si les paramètres sont invalides
    """
    if count < 0 or n_max < 1 or (count and not p_list):
        raise ValidationError(f"Paramètres de corpus invalides: count={count}, n_max={n_max}, p={list(p_list)}")
    rng = random.Random(seed)
    corpus = []
    for _ in range(count):
        n = rng.randint(1, n_max)
        p = rng.choice(list(p_list))
        corpus.append(random_af(n, p, rng.randrange(2 ** 32)))
    return corpus


def verify_frameworks(ids: Iterable[TheoremId], frameworks: Iterable[ArgumentationFramework],
                      params: Optional[VerificationParams] = None) -> List[VerificationReport]:
    """
    Vérifie chaque théorème sur chaque framework et agrège par théorème.

    Les vérificateurs indépendants du framework ne s'exécutent qu'une fois.
    L'ordre des rapports suit celui de `ids`.
    """
    params = params or VerificationParams()
    ids = list(dict.fromkeys(ids))
    frameworks = list(frameworks)
    reports = {theorem: VerificationReport(theorem) for theorem in ids}

    for theorem in ids:
        if theorem.framework_independent:
            reports[theorem].absorb(verify_theorem(theorem, params=params))

    dependent = [theorem for theorem in ids if not theorem.framework_independent]
    if dependent:
        for index, af in enumerate(frameworks):
            ctx = FrameworkContext(af, params)
            for theorem in dependent:
                reports[theorem].absorb(verify_theorem(theorem, af, params, ctx))
            logger.debug(f"Framework {index + 1}/{len(frameworks)} vérifié ({len(af)} arguments)")

    result = [reports[theorem] for theorem in ids]
    failed = [r.theorem.value for r in result if not r.passed]
    logger.info(f"{len(result)} théorème(s) vérifié(s) sur {len(frameworks)} framework(s), échecs: {failed or 'aucun'}")
    for report in result:
        if report.skipped:
            logger.warning(f"{report.theorem.value}: {report.skipped} instance(s) ignorée(s) (budget de grille)")
    return result


def verify_fixtures(ids: Iterable[TheoremId],
                    params: Optional[VerificationParams] = None) -> List[VerificationReport]:
    """Vérifie les théorèmes sur le jeu de frameworks de référence."""
    return verify_frameworks(ids, fixture_frameworks().values(), params)


def verify_corpus(ids: Iterable[TheoremId], seed: int, count: int, n_max: int,
                  p_list: Sequence[float] = DEFAULT_P_LIST,
                  params: Optional[VerificationParams] = None) -> List[VerificationReport]:
    """
    Vérifie les théorèmes sur un corpus aléatoire déterministe.

    Args:
        ids: Théorèmes à vérifier (liste vide: aucun rapport)
        seed: Graine du corpus
        count: Nombre de frameworks
        n_max: Nombre maximal d'arguments
        p_list: Probabilités d'attaque
        params: Paramètres de vérification

    Returns:
        Un rapport agrégé par théorème, dans l'ordre de `ids`
    """
    ids = list(ids)
    if not ids:
        return []
    corpus = generate_corpus(seed, count, n_max, p_list)
    return verify_frameworks(ids, corpus, params)
