"""
Package de formatters pour arglogic.

Ce package contient les formatters qui produisent les sorties texte et JSON
des formules, des assignations et des rapports de vérification.
"""

from .formula_formatter import FormulaFormatter, render_text, render_json
from .assignment_formatter import AssignmentFormatter
from .report_formatter import ReportFormatter

__all__ = [
    'FormulaFormatter',
    'render_text',
    'render_json',
    'AssignmentFormatter',
    'ReportFormatter',
]
