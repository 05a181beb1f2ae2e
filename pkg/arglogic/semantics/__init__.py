"""
Sémantiques d'argumentation et transformations d'étiquetages.
"""
from .labelling import (
    Labelling,
    SemanticsName,
    is_complete_labelling,
    extension_of,
    is_conflict_free,
    is_admissible,
    labelling_from_extension,
    complete_labellings,
    dung_labellings,
)
from .transforms import binarize, ternarize

__all__ = [
    'Labelling',
    'SemanticsName',
    'is_complete_labelling',
    'extension_of',
    'is_conflict_free',
    'is_admissible',
    'labelling_from_extension',
    'complete_labellings',
    'dung_labellings',
    'binarize',
    'ternarize',
]
