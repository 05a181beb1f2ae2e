# arglogic/formatters/assignment_formatter.py
"""
Formatter pour les assignations, étiquetages et résultats d'itération.
"""
from typing import Any, Dict, Iterable, List

from ..equational.solver import IterationOutcome
from ..logic.truth import Assignment, format_truth_value
from ..semantics.labelling import extension_of


class AssignmentFormatter:
    """Classe pour formater les assignations."""

    @staticmethod
    def to_json(v: Assignment) -> Dict[str, str]:
        """{"a": "1/2", ...} dans l'ordre canonique, valeurs en fractions exactes."""
        return v.as_strings()

    @staticmethod
    def to_text(v: Assignment) -> str:
        return str(v)

    @staticmethod
    def labellings_to_json(labellings: Iterable[Assignment]) -> Dict[str, Any]:
        """Étiquetages et extensions associées (tableaux de noms triés)."""
        labellings = list(labellings)
        return {
            'labellings': [v.as_strings() for v in labellings],
            'extensions': [sorted(extension_of(v)) for v in labellings],
        }

    @staticmethod
    def labellings_to_text(labellings: Iterable[Assignment]) -> List[str]:
        lines = []
        for v in labellings:
            extension = ', '.join(sorted(extension_of(v)))
            lines.append(f"{v}  {{{extension}}}")
        return lines

    @staticmethod
    def outcome_to_json(outcome: IterationOutcome) -> Dict[str, Any]:
        """Résultat d'itération: point fixe, ou non-convergence avec le cycle détecté."""
        data = {
            'converged': outcome.converged,
            'iterations': outcome.iterations,
            'last_step': format_truth_value(outcome.last_step) if outcome.last_step else '0',
            'assignment': outcome.assignment.as_strings(),
        }
        if not outcome.converged:
            data['period'] = outcome.period
            data['cycle'] = [state.as_strings() for state in outcome.cycle]
        return data

    @staticmethod
    def outcome_to_text(outcome: IterationOutcome) -> str:
        if outcome.converged:
            return f"Point fixe après {outcome.iterations} itération(s): {outcome.assignment}"
        text = f"Pas de convergence après {outcome.iterations} itération(s), dernier état {outcome.assignment}"
        if outcome.period:
            text += f"\nCycle d'ordre {outcome.period}: " + ' <-> '.join(str(s) for s in outcome.cycle)
        return text
