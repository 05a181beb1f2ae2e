# tests/conftest.py
import pytest

from arglogic.models.framework import ArgumentationFramework
from arglogic.utils.config_manager import Limits
from arglogic.verify import VerificationParams


@pytest.fixture(autouse=True)
def _no_env_override(monkeypatch):
    monkeypatch.delenv('ARGLOGIC_MAX_ARGS', raising=False)


@pytest.fixture
def limits():
    return Limits(max_args=10, max_grid_points=50_000)


@pytest.fixture
def mutual():
    return ArgumentationFramework.from_names(['a', 'b'], [('a', 'b'), ('b', 'a')])


@pytest.fixture
def chain():
    return ArgumentationFramework.from_names(['a', 'b'], [('a', 'b')])


@pytest.fixture
def self_attacker():
    return ArgumentationFramework.from_names(['a'], [('a', 'a')])


@pytest.fixture
def three_cycle():
    return ArgumentationFramework.from_names(['a', 'b', 'c'], [('a', 'b'), ('b', 'c'), ('c', 'a')])


@pytest.fixture
def single():
    return ArgumentationFramework.from_names(['a'], [])


@pytest.fixture
def params(limits):
    """Paramètres de vérification réduits pour garder les tests rapides."""
    return VerificationParams(luka_samples=300, max_grid_points=5000, max_arity=3, limits=limits)
