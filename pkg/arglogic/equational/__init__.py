"""
Systèmes équationnels graduels sur [0, 1].
"""
from .systems import (
    EquationalSystem,
    EncodedSystem,
    MaxSystem,
    InverseSystem,
    LukaClosedSystem,
    GeometricalSystem,
    SYSTEM_NAMES,
    luka_nary,
    parse_system_spec,
)
from .solver import IterationOutcome, satisfies, grid_solutions, iterate
from .properties import (
    EquationalFunctionProperty,
    PropertyReport,
    check_function_property,
    check_tnorm_property,
    is_half_idempotent,
    is_zero_divisor_free,
)


def associated_tnorm(sys: EquationalSystem):
    """T-norme sous-jacente du système, ou None pour le système géométrique."""
    return sys.associated_tnorm


__all__ = [
    'EquationalSystem', 'EncodedSystem', 'MaxSystem', 'InverseSystem', 'LukaClosedSystem',
    'GeometricalSystem', 'SYSTEM_NAMES', 'luka_nary', 'parse_system_spec', 'associated_tnorm',
    'IterationOutcome', 'satisfies', 'grid_solutions', 'iterate',
    'EquationalFunctionProperty', 'PropertyReport', 'check_function_property',
    'check_tnorm_property', 'is_half_idempotent', 'is_zero_divisor_free',
]
