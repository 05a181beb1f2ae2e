#arglogic/parsers/__init__.py
"""
Package de parseurs pour arglogic.

Chaque parseur transforme un format texte de framework d'argumentation
(APX, TGF) en ArgumentationFramework.
"""

from .apx_parser import ApxParser, parse_apx
from .tgf_parser import TgfParser, parse_tgf

__all__ = [
    'ApxParser',
    'TgfParser',
    'parse_apx',
    'parse_tgf',
]
