"""
Package de convertisseurs pour arglogic.
"""

from .framework_converter import (
    FrameworkConverter,
    serialize_apx,
    serialize_tgf,
    framework_to_dict,
    framework_from_dict,
    load_framework,
)

__all__ = [
    'FrameworkConverter',
    'serialize_apx',
    'serialize_tgf',
    'framework_to_dict',
    'framework_from_dict',
    'load_framework',
]
