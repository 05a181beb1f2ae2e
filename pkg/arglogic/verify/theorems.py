# arglogic/verify/theorems.py
"""
Identifiants des théorèmes vérifiables et paramètres de vérification.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, List, Optional

from ..exceptions import ValidationError
from ..logic.negation import STANDARD_NEGATION, Negation
from ..logic.system import LogicSystem
from ..logic.tnorm import GOEDEL, TNorm
from ..utils.config_manager import Limits, get_limits, get_verify_settings


class TheoremId(Enum):
    """Un identifiant par vérificateur; la valeur est le nom utilisé en ligne de commande."""
    STABLE_EQ_EC1_K = 'stable-eq-ec1-k'
    COMPLETE_EQ_EC1_L = 'complete-eq-ec1-l'
    STABLE_EQ_EC1_PL2 = 'stable-eq-ec1-pl2'
    EC2_PL2_FWD = 'ec2-pl2-fwd'
    EC2_PL2_BWD = 'ec2-pl2-bwd'
    EC2_K_FWD = 'ec2-k-fwd'
    EC2_K_BWD = 'ec2-k-bwd'
    EC2_L_FWD = 'ec2-l-fwd'
    EC2_L_TCOM = 'ec2-l-tcom'
    EC2_L_COUNTEREXAMPLE = 'ec2-l-counterexample'
    EQ_EC1_IFF = 'eq-ec1-iff'
    EQMAX_IS_G = 'eqmax-is-g'
    EQINV_IS_P = 'eqinv-is-p'
    EQL_IS_L = 'eql-is-l'
    LUKA_NARY = 'luka-nary'
    H_MONOTONE = 'h-monotone'
    H_BOUNDARY_SYM = 'h-boundary-sym'
    ZDF_TCOM_COMPLETE = 'zdf-tcom-complete'
    IDEM_EMBED = 'idem-embed'
    COMPLETE_FUZZY_SET_EQ = 'complete-fuzzy-set-eq'
    TCOM_FIXES_COMPLETE = 'tcom-fixes-complete'
    GROUNDED_UNIQUE = 'grounded-unique'
    GEOMETRICAL_NOT_ENCODED = 'geometrical-not-encoded'

    @classmethod
    def parse(cls, text: str) -> 'TheoremId':
        """
        Retrouve un identifiant ('ec2-l-counterexample' ou 'EC2_L_COUNTEREXAMPLE').

        Raises:
            ValidationError: Si l'identifiant est inconnu
        """
        key = (text or '').strip().lower().replace('_', '-')
        for member in cls:
            if member.value == key:
                return member
        raise ValidationError(f"Théorème inconnu: {text!r}")

    @classmethod
    def all(cls) -> List['TheoremId']:
        return list(cls)

    @property
    def framework_independent(self) -> bool:
        return self in FRAMEWORK_INDEPENDENT


FRAMEWORK_INDEPENDENT: FrozenSet[TheoremId] = frozenset({
    TheoremId.LUKA_NARY,
    TheoremId.H_MONOTONE,
    TheoremId.H_BOUNDARY_SYM,
    TheoremId.EC2_L_COUNTEREXAMPLE,
    TheoremId.GEOMETRICAL_NOT_ENCODED,
})


@dataclass(frozen=True)
class VerificationParams:
    """
    Paramètres d'une campagne de vérification.

    Les systèmes pl2/pl3k/pl3l peuvent être remplacés par des copies altérées
    pour vérifier que les vérificateurs savent échouer.
    """
    grid_resolution: int = 4
    zdf_tnorm: TNorm = GOEDEL
    idem_tnorm: TNorm = GOEDEL
    negation: Negation = STANDARD_NEGATION
    pl2: LogicSystem = field(default_factory=LogicSystem.pl2)
    pl3k: LogicSystem = field(default_factory=LogicSystem.pl3k)
    pl3l: LogicSystem = field(default_factory=LogicSystem.pl3l)
    max_grid_points: int = 20000
    luka_samples: int = 10000
    seed: int = 7
    max_arity: int = 4
    limits: Limits = field(default_factory=Limits)

    def __post_init__(self):
        if self.grid_resolution < 1:
            raise ValidationError(f"Résolution de grille invalide: {self.grid_resolution}")
        if self.max_grid_points < 1 or self.luka_samples < 0 or self.max_arity < 1:
            raise ValidationError("Paramètres de vérification invalides")

    @classmethod
    def from_config(cls, config=None, limits: Optional[Limits] = None, **overrides) -> 'VerificationParams':
        """
        Construit les paramètres depuis la section [verify] de la configuration.

        Args:
            config: Configuration chargée (chargée si None)
            limits: Limites d'énumération (configuration si None)
            **overrides: Valeurs explicites prioritaires (None ignoré)
        """
        settings = get_verify_settings(config)
        values = {
            'grid_resolution': settings['grid_resolution'],
            'max_grid_points': settings['max_grid_points'],
            'luka_samples': settings['luka_samples'],
            'seed': settings['seed'],
            'limits': limits if limits is not None else get_limits(config),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)
