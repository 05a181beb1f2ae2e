# arglogic/verify/report.py
"""
Rapports de vérification.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..converters.framework_converter import framework_to_dict
from ..logic.truth import Assignment
from ..models.framework import ArgumentationFramework
from .theorems import TheoremId


def witness_to_json(witness: Any) -> Any:
    """Sérialise un témoin: assignations en fractions exactes, collections récursivement."""
    if isinstance(witness, Assignment):
        return witness.as_strings()
    if isinstance(witness, (list, tuple, set, frozenset)):
        items = [witness_to_json(w) for w in witness]
        return sorted(items, key=str) if isinstance(witness, (set, frozenset)) else items
    if isinstance(witness, dict):
        return {str(k): witness_to_json(v) for k, v in witness.items()}
    if isinstance(witness, (str, int, bool)) or witness is None:
        return witness
    return str(witness)


@dataclass
class Counterexample:
    """Contre-exemple: framework, témoin(s) et clause violée."""
    framework: Optional[ArgumentationFramework]
    witness: Any
    clause: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            'framework': framework_to_dict(self.framework) if self.framework is not None else None,
            'witness': witness_to_json(self.witness),
            'clause': self.clause,
        }


@dataclass
class VerificationReport:
    """Résultat d'un vérificateur sur une ou plusieurs instances."""
    theorem: TheoremId
    instances: int = 0
    counterexamples: List[Counterexample] = field(default_factory=list)
    elapsed_ms: float = 0.0
    skipped: int = 0
    frameworks: int = 0
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def add_counterexample(self, framework: Optional[ArgumentationFramework], witness: Any, clause: str):
        self.counterexamples.append(Counterexample(framework, witness, clause))

    def absorb(self, other: 'VerificationReport') -> 'VerificationReport':
        """Agrège le rapport d'une autre instance du même théorème."""
        self.instances += other.instances
        self.counterexamples.extend(other.counterexamples)
        self.elapsed_ms += other.elapsed_ms
        self.skipped += other.skipped
        self.frameworks += other.frameworks
        for key, value in other.metadata.items():
            if key == 'resolutions':
                self.metadata[key] = sorted(set(self.metadata.get(key, [])) | set(value))
            else:
                self.metadata.setdefault(key, value)
        return self

    def to_dict(self) -> Dict[str, Any]:
        return {
            'theorem': self.theorem.value,
            'instances': self.instances,
            'pass': self.passed,
            'counterexamples': [c.to_dict() for c in self.counterexamples],
            'elapsed_ms': round(self.elapsed_ms),
            'skipped': self.skipped,
            'frameworks': self.frameworks,
            'metadata': witness_to_json(self.metadata),
        }
