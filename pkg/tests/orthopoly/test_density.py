"""
Unit tests for the closed-form density.

Tests verify normalization, moments and orthogonality against the
recurrence, and the q = 0 free Meixner form.
"""

import logging
import math
import warnings

import numpy as np
import pytest
from pydantic import ValidationError
from scipy.integrate import IntegrationWarning, trapezoid

from typeb_fock.errors import ArgumentError, DomainError
from typeb_fock.orthopoly import (
    DensitySpec,
    density,
    density_curve,
    density_mass,
    density_moment,
    free_meixner_density,
    inner_product_integral,
    moments_from_jacobi,
    pair_factor,
    pair_factor_complex,
    polynomial_norms,
)


SPECS = [
    DensitySpec(alpha=0.0, q=0.0),
    DensitySpec(alpha=0.5, q=0.3),
    DensitySpec(alpha=-0.6, q=-0.4),
    DensitySpec(alpha=0.7, q=0.6),
]

# alpha in {-0.4, 0, 0.7} x q in {-0.7, 0, 0.5, 0.95}
MOMENT_GRID = [
    DensitySpec(alpha=alpha, q=q)
    for alpha in (-0.4, 0.0, 0.7)
    for q in (-0.7, 0.0, 0.5, 0.95)
]


class TestDensitySpec:
    """Parameter validation."""

    @pytest.mark.unit
    def test_support_radius(self):
        assert DensitySpec(alpha=0.0, q=0.75).support_radius == pytest.approx(4.0)

    @pytest.mark.unit
    @pytest.mark.parametrize("alpha,q", [(0.5, 1.0), (0.5, -1.0), (-1.0, 0.2)])
    def test_rejected(self, alpha, q):
        with pytest.raises(ValidationError):
            DensitySpec(alpha=alpha, q=q)

    @pytest.mark.unit
    def test_atoms_beyond_alpha_one(self):
        with pytest.raises(DomainError):
            density(0.0, DensitySpec(alpha=1.5, q=0.2))


class TestDensityValues:
    """Point values and shape."""

    @pytest.mark.unit
    def test_semicircle_peak(self, known):
        assert density(0.0, SPECS[0]) == pytest.approx(known.semicircle_peak)

    @pytest.mark.unit
    def test_zero_outside_support(self):
        spec = SPECS[1]
        values = density(np.array([-5.0, spec.support_radius, 5.0]), spec)
        assert np.all(values == 0.0)

    @pytest.mark.unit
    def test_array_and_scalar(self):
        spec = SPECS[1]
        values = density(np.array([0.1, 0.2]), spec)
        assert values.shape == (2,)
        assert values[0] == pytest.approx(density(0.1, spec))

    @pytest.mark.unit
    @pytest.mark.parametrize("alpha", [-0.5, 0.0, 0.5, 1.0])
    def test_free_meixner_at_q_zero(self, alpha):
        spec = DensitySpec(alpha=alpha, q=0.0)
        ts = np.linspace(-1.9, 1.9, 9)
        assert np.allclose(density(ts, spec), free_meixner_density(ts, alpha))

    @pytest.mark.unit
    def test_free_meixner_rejects_alpha(self):
        with pytest.raises(ArgumentError):
            free_meixner_density(0.0, -1.0)

    @pytest.mark.unit
    @pytest.mark.parametrize("b", [0.5, -0.5])
    def test_pair_factor_forms(self, b):
        for k in range(3):
            real = pair_factor(0.7, b, 0.4, k)
            assert pair_factor_complex(0.7, b, 0.4, k) == pytest.approx(real)

    @pytest.mark.unit
    def test_curve(self):
        spec = SPECS[2]
        ts, values = density_curve(spec, 200)
        assert ts.shape == values.shape == (200,)
        assert np.all(np.abs(ts) < spec.support_radius)
        assert np.all(values > 0)
        with pytest.raises(ArgumentError):
            density_curve(spec, 1)


class TestIntegrals:
    """Quadrature against the recurrence."""

    @pytest.mark.integration
    @pytest.mark.parametrize("spec", SPECS, ids=str)
    def test_mass(self, spec):
        assert density_mass(spec) == pytest.approx(1.0, abs=1e-8)

    @pytest.mark.integration
    @pytest.mark.slow
    @pytest.mark.parametrize("spec", MOMENT_GRID, ids=str)
    def test_moments_match_jacobi(self, spec):
        """Moments up to order 8; the q = 0.95 density is steep, so 1e-4 there."""
        tol = 1e-4 if spec.q > 0.9 else 1e-6
        moments = moments_from_jacobi(spec.jacobi(), 8)
        for k in range(1, 9):
            assert density_moment(k, spec) == pytest.approx(moments[k], abs=tol), f"k={k}"

    @pytest.mark.integration
    @pytest.mark.parametrize("alpha", [0.5, 0.95])
    def test_steep_density_quadrature_is_clean(self, alpha, caplog):
        """q = 0.95 integrates without IntegrationWarning or a logged fallback."""
        spec = DensitySpec(alpha=alpha, q=0.95)
        with warnings.catch_warnings():
            warnings.simplefilter("error", IntegrationWarning)
            with caplog.at_level(logging.WARNING, logger="typeb_fock.orthopoly.density"):
                mass = density_mass(spec)
                fourth = density_moment(4, spec)
        assert not caplog.records
        assert mass == pytest.approx(1.0, abs=1e-6)
        assert fourth == pytest.approx(moments_from_jacobi(spec.jacobi(), 4)[4], abs=1e-4)

    @pytest.mark.integration
    def test_orthogonality(self):
        spec = SPECS[1]
        norms = polynomial_norms(spec.jacobi(), 3)
        assert inner_product_integral(1, 3, spec) == pytest.approx(0.0, abs=1e-8)
        assert inner_product_integral(2, 2, spec) == pytest.approx(norms[2], rel=1e-7)

    @pytest.mark.unit
    def test_trapezoid_mass(self):
        spec = SPECS[1]
        ts, values = density_curve(spec, 2000)
        assert float(trapezoid(values, ts)) == pytest.approx(1.0, abs=5e-3)

    @pytest.mark.unit
    def test_negative_order(self):
        with pytest.raises(ArgumentError):
            density_moment(-1, SPECS[0])

    @pytest.mark.unit
    def test_second_moment_closed_form(self):
        spec = DensitySpec(alpha=0.5, q=0.3)
        assert density_moment(2, spec) == pytest.approx(1.5, abs=1e-8)
        assert math.isclose(density_moment(1, spec), 0.0, abs_tol=1e-10)
