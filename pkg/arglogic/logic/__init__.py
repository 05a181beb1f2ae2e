"""
Algèbre des valeurs de vérité, évaluation des formules et recherche de modèles.
"""
from .truth import (
    TruthValue,
    ZERO,
    HALF,
    ONE,
    BINARY_VALUES,
    TERNARY_VALUES,
    Assignment,
    parse_truth_value,
    format_truth_value,
    grid_values,
    snap_to_grid,
)
from .negation import Negation, StandardNegation, TableNegation, STANDARD_NEGATION, parse_negation
from .tnorm import (
    TNorm,
    GoedelTNorm,
    LukasiewiczTNorm,
    ProductTNorm,
    UserTNorm,
    GOEDEL,
    LUKASIEWICZ,
    PRODUCT,
    NAMED_TNORMS,
    get_tnorm,
)
from .system import (
    SystemKind,
    LogicSystem,
    CLASSICAL_IMPLICATION,
    KLEENE_IMPLICATION,
    LUKASIEWICZ_IMPLICATION,
    parse_logic_spec,
)
from .evaluation import evaluate, is_model
from .enumeration import (
    iter_assignments,
    finite_assignments,
    grid_assignments,
    enumerate_models,
    grid_models,
)


def residuum(t: TNorm, x, y, grid=None):
    """I(x, y) pour la t-norme t."""
    return t.residuum(x, y, grid)


__all__ = [
    'TruthValue', 'ZERO', 'HALF', 'ONE', 'BINARY_VALUES', 'TERNARY_VALUES',
    'Assignment', 'parse_truth_value', 'format_truth_value', 'grid_values', 'snap_to_grid',
    'Negation', 'StandardNegation', 'TableNegation', 'STANDARD_NEGATION', 'parse_negation',
    'TNorm', 'GoedelTNorm', 'LukasiewiczTNorm', 'ProductTNorm', 'UserTNorm',
    'GOEDEL', 'LUKASIEWICZ', 'PRODUCT', 'NAMED_TNORMS', 'get_tnorm', 'residuum',
    'SystemKind', 'LogicSystem', 'CLASSICAL_IMPLICATION', 'KLEENE_IMPLICATION',
    'LUKASIEWICZ_IMPLICATION', 'parse_logic_spec',
    'evaluate', 'is_model',
    'iter_assignments', 'finite_assignments', 'grid_assignments', 'enumerate_models', 'grid_models',
]
