"""
Utilities package for arglogic.
"""
from .config_manager import (
    Limits,
    load_config,
    create_default_config,
    get_limits,
    get_iteration_settings,
    get_verify_settings,
)

__all__ = [
    'Limits',
    'load_config',
    'create_default_config',
    'get_limits',
    'get_iteration_settings',
    'get_verify_settings',
]
