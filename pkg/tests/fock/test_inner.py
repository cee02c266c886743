"""
Unit tests for the deformed inner product.
"""

import numpy as np
import pytest

from typeb_fock.errors import ArgumentError
from typeb_fock.fock import (
    DeformParams,
    FockVector,
    InvolutiveSpace,
    inner_aq,
    norm_aq,
    tensor_power_norm,
)
from typeb_fock.qsymbols import q_factorial


class TestInnerProduct:
    """Tests for <f, g>_{alpha,q}."""

    @pytest.mark.unit
    def test_vacuum_norm(self, params, space):
        omega = FockVector.vacuum(2)
        assert inner_aq(omega, omega, params, space) == pytest.approx(1.0)

    @pytest.mark.unit
    def test_self_dual_unit_vector(self, params, identity_space):
        """<x, x> = 1 + alpha for a unit x with xbar = x."""
        x = FockVector.tensor_power([1.0, 0.0], 1)
        assert inner_aq(x, x, params, identity_space).real == pytest.approx(1 + params.alpha)

    @pytest.mark.unit
    def test_levels_are_orthogonal(self, params, swap_space):
        f = FockVector.tensor_power([1.0, 0.5], 1)
        g = FockVector.tensor_power([1.0, 0.5], 2)
        assert abs(inner_aq(f, g, params, swap_space)) < 1e-14

    @pytest.mark.property
    def test_conjugate_symmetry(self, params, space, rng):
        f = FockVector.random(rng, 2, 3)
        g = FockVector.random(rng, 2, 3)
        left = inner_aq(f, g, params, space)
        right = inner_aq(g, f, params, space)
        assert left == pytest.approx(right.conjugate(), abs=1e-10)

    @pytest.mark.property
    def test_norm_positive(self, params, space, rng):
        f = FockVector.random(rng, 2, 3)
        assert norm_aq(f, params, space) > 0.0

    @pytest.mark.unit
    def test_dimension_mismatch(self, params, identity_space):
        with pytest.raises(ArgumentError):
            inner_aq(FockVector.vacuum(3), FockVector.vacuum(3), params, identity_space)


class TestTensorPowerNorm:
    """Closed form for ||x^(x)n||^2."""

    @pytest.mark.unit
    def test_level_one(self, params, identity_space):
        assert tensor_power_norm([1.0, 0.0], 1, params, identity_space) == pytest.approx(
            1 + params.alpha
        )

    @pytest.mark.unit
    def test_anti_self_dual(self, mixed_space):
        """x with xbar = -x: [n]_q! (alpha; q)_n."""
        params = DeformParams(alpha=0.5, q=0.5)
        value = tensor_power_norm([0.0, 1.0], 2, params, mixed_space)
        assert value == pytest.approx(q_factorial(2, 0.5) * (1 - 0.5) * (1 - 0.25))

    @pytest.mark.integration
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_matches_inner_product(self, n, params, space):
        x = np.array([0.8, -0.3 + 0.2j])
        power = FockVector.tensor_power(x, n)
        direct = inner_aq(power, power, params, space).real
        assert tensor_power_norm(x, n, params, space) == pytest.approx(direct, rel=1e-9)

    @pytest.mark.unit
    def test_zero_vector_rejected(self, params, identity_space):
        with pytest.raises(ArgumentError):
            tensor_power_norm([0.0, 0.0], 2, params, identity_space)

    @pytest.mark.unit
    def test_one_dimensional(self):
        space = InvolutiveSpace.identity(1)
        params = DeformParams(alpha=0.0, q=0.0)
        assert tensor_power_norm([2.0], 3, params, space) == pytest.approx(64.0)
