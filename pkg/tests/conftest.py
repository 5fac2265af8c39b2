"""Shared fixtures for the test suites"""

import random
import sys
from pathlib import Path

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from config.settings import AppConfig
from fixtures.fixture_manager import get_fixture_manager
from orbits.pairs import SymmetricPair, Theory
from orbits.upsilon import compute_all


@pytest.fixture
def rng():
    return random.Random(AppConfig.RANDOM_SEED)


@pytest.fixture(scope="session")
def golden():
    return get_fixture_manager()


@pytest.fixture(scope="session")
def o4_table():
    return compute_all(SymmetricPair.orthogonal(4), Theory.COHOMOLOGY)


@pytest.fixture(scope="session")
def sp6_table():
    return compute_all(SymmetricPair.symplectic(6), Theory.COHOMOLOGY)


@pytest.fixture(scope="session")
def sp6_k_table():
    return compute_all(SymmetricPair.symplectic(6), Theory.KTHEORY)


@pytest.fixture
def reports_dir(tmp_path, monkeypatch):
    monkeypatch.setattr(AppConfig, "REPORTS_DIR", tmp_path)
    return tmp_path
