"""
Vérification mécanique des théorèmes de correspondance entre sémantiques.
"""
from .theorems import TheoremId, VerificationParams, FRAMEWORK_INDEPENDENT
from .report import Counterexample, VerificationReport
from .context import FrameworkContext, fitting_resolution
from .checkers import verify_theorem
from .fixtures import fixture_frameworks
from .corpus import generate_corpus, verify_frameworks, verify_fixtures, verify_corpus

__all__ = [
    'TheoremId',
    'VerificationParams',
    'FRAMEWORK_INDEPENDENT',
    'Counterexample',
    'VerificationReport',
    'FrameworkContext',
    'fitting_resolution',
    'verify_theorem',
    'fixture_frameworks',
    'generate_corpus',
    'verify_frameworks',
    'verify_fixtures',
    'verify_corpus',
]
