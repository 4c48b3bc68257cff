import pytest
import sys
import os

# Add the parent directory to sys.path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import numpy as np

from qec_erasure import builtin_code, reset_settings


@pytest.fixture(autouse=True)
def fresh_settings():
    """Re-read settings so environment overrides from one test never leak"""
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def rng():
    """Seeded generator for property tests"""
    return np.random.default_rng(20240601)


@pytest.fixture
def four_qubit_code():
    return builtin_code("FourQubit_K1")


@pytest.fixture
def four_qubit_code_k2():
    return builtin_code("FourQubit_K2")


@pytest.fixture
def steane():
    return builtin_code("Steane7")
