# arglogic/formatters/report_formatter.py
"""
Formatter pour les rapports de vérification.

La vue texte est un tableau récapitulatif construit avec pandas.
"""
from typing import Any, Dict, List, Sequence

import pandas as pd

from ..verify.report import VerificationReport


class ReportFormatter:
    """Classe pour formater les rapports de vérification."""

    @staticmethod
    def to_json(reports: Sequence[VerificationReport]) -> List[Dict[str, Any]]:
        return [report.to_dict() for report in reports]

    @staticmethod
    def summary_frame(reports: Sequence[VerificationReport]) -> pd.DataFrame:
        """
        Tableau récapitulatif, une ligne par théorème.

        Args:
            reports: Rapports agrégés

        Returns:
            pd.DataFrame: colonnes theorem, pass, instances, counterexamples, skipped, elapsed_ms
        """
        rows = [{
            'theorem': report.theorem.value,
            'pass': report.passed,
            'instances': report.instances,
            'counterexamples': len(report.counterexamples),
            'skipped': report.skipped,
            'elapsed_ms': round(report.elapsed_ms),
        } for report in reports]
        columns = ['theorem', 'pass', 'instances', 'counterexamples', 'skipped', 'elapsed_ms']
        return pd.DataFrame(rows, columns=columns)

    @staticmethod
    def to_text(reports: Sequence[VerificationReport]) -> str:
        """Tableau récapitulatif suivi du détail de chaque contre-exemple."""
        if not reports:
            return "Aucun théorème vérifié."
        lines = [ReportFormatter.summary_frame(reports).to_string(index=False)]
        for report in reports:
            for counterexample in report.counterexamples:
                data = counterexample.to_dict()
                lines.append(f"[{report.theorem.value}] {data['clause']}")
                if data['framework'] is not None:
                    lines.append(f"  framework: {data['framework']}")
                lines.append(f"  témoin: {data['witness']}")
            witness = report.metadata.get('witness')
            if witness is not None and report.passed:
                lines.append(f"[{report.theorem.value}] témoin: {witness}")
        return '\n'.join(lines)
