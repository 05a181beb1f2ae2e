# cli_modules/__init__.py
# Sous-commandes de la ligne de commande arglogic

from . import common
from . import semantics_command
from . import encode_command
from . import models_command
from . import solve_command
from . import verify_command

COMMANDS = [semantics_command, encode_command, models_command, solve_command, verify_command]

__all__ = [
    'common',
    'semantics_command',
    'encode_command',
    'models_command',
    'solve_command',
    'verify_command',
    'COMMANDS',
]
