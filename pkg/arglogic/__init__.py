# arglogic/__init__.py
"""
Boîte à outils arglogic.

Encodage des frameworks d'argumentation abstraits dans des logiques
propositionnelles à 2, 3 valeurs et floues, calcul des sémantiques de Dung et
équationnelles, et vérification mécanique des théorèmes de correspondance.
"""
from .exceptions import (
    ArgLogicError,
    ConfigurationError,
    ParsingError,
    FrameworkSyntaxError,
    UndeclaredArgumentError,
    ValidationError,
    InvalidNegationError,
    InvalidTNormError,
    NonLeftContinuousError,
    UnsupportedConfigurationError,
    ResourceLimitError,
    EvaluationError,
    DomainViolationError,
    PartialityError,
    GeometricalSingularityError,
)
from .models import ArgumentId, ArgumentationFramework, empty_framework
from .parsers import parse_apx, parse_tgf
from .converters import (
    serialize_apx,
    serialize_tgf,
    framework_to_dict,
    framework_from_dict,
    load_framework,
)
from .encoders import encode_normal, encode_regular, encode
from .generator import random_af

__version__ = '1.0.0'

__all__ = [
    'ArgLogicError',
    'ConfigurationError',
    'ParsingError',
    'FrameworkSyntaxError',
    'UndeclaredArgumentError',
    'ValidationError',
    'InvalidNegationError',
    'InvalidTNormError',
    'NonLeftContinuousError',
    'UnsupportedConfigurationError',
    'ResourceLimitError',
    'EvaluationError',
    'DomainViolationError',
    'PartialityError',
    'GeometricalSingularityError',
    'ArgumentId',
    'ArgumentationFramework',
    'empty_framework',
    'parse_apx',
    'parse_tgf',
    'serialize_apx',
    'serialize_tgf',
    'framework_to_dict',
    'framework_from_dict',
    'load_framework',
    'encode_normal',
    'encode_regular',
    'encode',
    'random_af',
]
