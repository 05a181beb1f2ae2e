# arglogic/utils/config_manager.py
"""
Chargement de la configuration INI et des limites de ressources.
"""
import os
import logging
import configparser
from dataclasses import dataclass
from typing import Optional

from arglogic.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

ENV_MAX_ARGS = 'ARGLOGIC_MAX_ARGS'

DEFAULTS = {
    'limits': {
        'max_args': '14',
        'max_grid_points': '1000000',
    },
    'equational': {
        'max_iters': '10000',
        'tolerance': '1e-9',
    },
    'verify': {
        'grid_resolution': '4',
        'max_grid_points': '20000',
        'luka_samples': '10000',
        'seed': '7',
    },
}


@dataclass(frozen=True)
class Limits:
    """Limites d'énumération (nombre d'arguments, taille des grilles)."""
    max_args: int = 14
    max_grid_points: int = 1_000_000

    def __post_init__(self):
        if self.max_args < 0 or self.max_grid_points < 1:
            raise ConfigurationError(
                f"Limites invalides: max_args={self.max_args}, max_grid_points={self.max_grid_points}"
            )


def default_config_file():
    """Chemin de config/config.ini à la racine du projet, à côté du paquet arglogic."""
    package_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    return os.path.join(os.path.dirname(package_dir), 'config', 'config.ini')


def load_config(config_file=None):
    """Charge la configuration depuis un fichier INI, en créant le fichier par défaut si besoin."""
    config_file = config_file or default_config_file()
    if not os.path.exists(config_file):
        create_default_config(config_file)
        logger.info(f"Fichier de configuration créé avec les valeurs par défaut: {config_file}")

    # RawConfigParser: pas d'interpolation des caractères spéciaux
    config = configparser.RawConfigParser()
    config.read_dict(DEFAULTS)
    config.read(config_file)
    return config


def create_default_config(config_file):
    """Crée un fichier de configuration par défaut."""
    directory = os.path.dirname(config_file)
    if directory:
        os.makedirs(directory, exist_ok=True)

    config = configparser.RawConfigParser()
    config.read_dict(DEFAULTS)

    with open(config_file, 'w') as f:
        config.write(f)


def _get_int(config, section, option):
    try:
        return config.getint(section, option)
    except ValueError as e:
        raise ConfigurationError(f"Valeur entière invalide pour [{section}] {option}: {e}") from e


def _get_float(config, section, option):
    try:
        return config.getfloat(section, option)
    except ValueError as e:
        raise ConfigurationError(f"Valeur réelle invalide pour [{section}] {option}: {e}") from e


def get_limits(config=None,
               max_args: Optional[int] = None,
               max_grid_points: Optional[int] = None) -> Limits:
    """
    Construit les limites d'énumération.

    Priorité: arguments explicites, puis variable d'environnement
    ARGLOGIC_MAX_ARGS (pour max_args), puis fichier de configuration.

    Args:
        config: Configuration déjà chargée (chargée si None)
        max_args: Surcharge explicite du nombre maximal d'arguments
        max_grid_points: Surcharge explicite du nombre maximal de points de grille

    Returns:
        Limits: Limites effectives

    Raises:
        ConfigurationError: Si une valeur est invalide
    """
    if max_args is None:
        env_value = os.environ.get(ENV_MAX_ARGS)
        if env_value:
            try:
                max_args = int(env_value)
            except ValueError as e:
                raise ConfigurationError(f"{ENV_MAX_ARGS} invalide: {env_value}") from e

    if max_args is None or max_grid_points is None:
        config = config if config is not None else load_config()
        if max_args is None:
            max_args = _get_int(config, 'limits', 'max_args')
        if max_grid_points is None:
            max_grid_points = _get_int(config, 'limits', 'max_grid_points')

    return Limits(max_args=max_args, max_grid_points=max_grid_points)


def get_iteration_settings(config=None):
    """Retourne (max_iters, tolerance) pour l'itération des systèmes équationnels."""
    config = config if config is not None else load_config()
    max_iters = _get_int(config, 'equational', 'max_iters')
    tolerance = _get_float(config, 'equational', 'tolerance')
    if max_iters < 0 or tolerance < 0:
        raise ConfigurationError(f"Paramètres d'itération invalides: {max_iters}, {tolerance}")
    return max_iters, tolerance


def get_verify_settings(config=None):
    """Retourne les paramètres par défaut de la vérification sous forme de dictionnaire."""
    config = config if config is not None else load_config()
    return {
        'grid_resolution': _get_int(config, 'verify', 'grid_resolution'),
        'max_grid_points': _get_int(config, 'verify', 'max_grid_points'),
        'luka_samples': _get_int(config, 'verify', 'luka_samples'),
        'seed': _get_int(config, 'verify', 'seed'),
    }
