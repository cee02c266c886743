"""
Shared test fixtures for the typeb-fock test suite.

This conftest.py provides reusable fixtures following the testing standards
defined in docs/TESTING_STANDARDS.md. Every randomized fixture is seeded so a
failing test reproduces exactly.
"""

from dataclasses import dataclass

import numpy as np
import pytest

from typeb_fock.config import reset_config
from typeb_fock.fock import DeformParams, InvolutiveSpace, clear_cache


# ============= TEST DATA MODELS =============


@dataclass
class KnownValues:
    """
    Hand-checked values used across modules.

    m4 is the fourth moment of G(x) for a unit self-dual x:
    (1+alpha)(2 + alpha + q + alpha q + alpha q^2).
    """

    catalan: tuple = (1, 1, 2, 5, 14)
    semicircle_peak: float = 1 / np.pi
    q_number_3_half: float = 1.75

    @staticmethod
    def m4(alpha: float, q: float) -> float:
        return (1 + alpha) * (2 + alpha + q + alpha * q + alpha * q * q)


# Parameter grid of the positivity and commutation checks
GRID_VALUES = (-0.9, -0.5, 0.0, 0.5, 0.9)
PARAMETER_GRID = [DeformParams(alpha=a, q=q) for a in GRID_VALUES for q in GRID_VALUES]

# A smaller grid for the more expensive cross-route tests
SAMPLE_PARAMS = [
    DeformParams(alpha=0.0, q=0.0),
    DeformParams(alpha=0.5, q=0.0),
    DeformParams(alpha=-0.4, q=0.3),
    DeformParams(alpha=0.7, q=-0.6),
    DeformParams(alpha=-0.8, q=0.9),
]


# ============= SESSION-SCOPED FIXTURES =============


@pytest.fixture(scope="session")
def known() -> KnownValues:
    return KnownValues()


# ============= FUNCTION-SCOPED FIXTURES =============


@pytest.fixture(autouse=True)
def fresh_state():
    """Each test starts from default configuration and empty operator caches."""
    reset_config()
    yield
    reset_config()
    clear_cache()


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator; draws are identical on every run."""
    return np.random.default_rng(20140101)


@pytest.fixture
def identity_space() -> InvolutiveSpace:
    return InvolutiveSpace.identity(2)


@pytest.fixture
def swap_space() -> InvolutiveSpace:
    """C^2 with J swapping the two basis vectors."""
    return InvolutiveSpace.basis_swap(2, [(1, 2)])


@pytest.fixture
def mixed_space() -> InvolutiveSpace:
    """C^2 with J = diag(1, -1)."""
    return InvolutiveSpace.diagonal([1, -1])


# ============= PARAMETRIZED TEST DATA =============


@pytest.fixture(params=SAMPLE_PARAMS, ids=str)
def params(request) -> DeformParams:
    """
    Deformation parameters covering q = 0, q < 0, q > 0 and both signs of alpha.

    Example:
        def test_something(params):
            assert params.q < 1
    """
    return request.param


@pytest.fixture(params=["identity", "swap", "mixed"])
def space(request) -> InvolutiveSpace:
    """Each named involution form on C^2."""
    if request.param == "identity":
        return InvolutiveSpace.identity(2)
    if request.param == "swap":
        return InvolutiveSpace.basis_swap(2, [(1, 2)])
    return InvolutiveSpace.diagonal([1, -1])


# ============= MARKER CONFIGURATION =============

# Markers are registered in pyproject.toml:
# - @pytest.mark.unit: Unit tests (isolated components, hand-checked values)
# - @pytest.mark.integration: Integration tests (modules working together)
# - @pytest.mark.property: Two independent routes compared
# - @pytest.mark.slow: Tests taking >1 second
# - @pytest.mark.cli: Command-line surface
# - @pytest.mark.serialization: CSV/JSON output
