"""
Unit tests for the three-term recurrence, Jacobi moments and Gauss rules.
"""

from fractions import Fraction

import numpy as np
import pytest

from typeb_fock.config import FockConfig, set_config
from typeb_fock.errors import ArgumentError, ResourceLimitError
from typeb_fock.orthopoly import (
    JacobiParams,
    gauss_quadrature,
    moments_from_jacobi,
    polynomial_norms,
    polynomials_from_jacobi,
    qmp_polynomials,
)

from tests.conftest import SAMPLE_PARAMS


class TestJacobiParams:
    """Recurrence coefficients of the q-Meixner-Pollaczek family."""

    @pytest.mark.unit
    def test_first_coefficients(self):
        params = JacobiParams.q_meixner_pollaczek(0.5, 0.25, size=3)
        assert params.gamma[0] == pytest.approx(1.5)
        assert params.gamma[1] == pytest.approx(1.25 * 1.125)
        assert params.tail == pytest.approx(4 / 3)
        assert params.radius == pytest.approx(2 / np.sqrt(0.75))

    @pytest.mark.unit
    def test_endpoints_have_no_support_radius(self):
        assert JacobiParams.q_meixner_pollaczek(0.5, 1.0, size=3).radius is None
        assert JacobiParams.q_meixner_pollaczek(0.5, -1.0, size=3).gamma[1] == 0

    @pytest.mark.unit
    def test_q_outside_closed_interval(self):
        with pytest.raises(ArgumentError):
            JacobiParams.q_meixner_pollaczek(0.5, 1.5)

    @pytest.mark.unit
    def test_exact_coefficients(self):
        params = JacobiParams.q_meixner_pollaczek(0.5, 0.25, size=2, exact=True)
        assert params.gamma == (Fraction(3, 2), Fraction(45, 32))


class TestPolynomials:
    """Monic polynomials from the recurrence."""

    @pytest.mark.unit
    def test_second_polynomial(self):
        """P_2 = t^2 - (1 + alpha c)."""
        assert np.allclose(qmp_polynomials(0.5, 0.0, N=2)[2].coef, [-1.5, 0.0, 1.0])
        assert np.allclose(qmp_polynomials(0.5, 0.2, c=-1.0, N=2)[2].coef, [-0.5, 0.0, 1.0])

    @pytest.mark.unit
    def test_parity(self):
        polys = qmp_polynomials(0.3, 0.4, N=5)
        assert np.allclose(polys[5].coef[::2], 0.0)
        assert np.allclose(polys[4].coef[1::2], 0.0)

    @pytest.mark.unit
    def test_negative_degree(self):
        with pytest.raises(ArgumentError):
            polynomials_from_jacobi(JacobiParams.from_gammas([1.0]), -1)


class TestMoments:
    """Moments read off the Jacobi matrix."""

    @pytest.mark.unit
    def test_semicircle_catalan(self, known):
        params = JacobiParams.from_gammas([1] * 8)
        moments = moments_from_jacobi(params, 8)
        assert moments[::2] == list(known.catalan)
        assert moments[1::2] == [0, 0, 0, 0]

    @pytest.mark.unit
    @pytest.mark.parametrize("deform", SAMPLE_PARAMS, ids=str)
    def test_fourth_moment(self, deform, known):
        params = JacobiParams.q_meixner_pollaczek(deform.alpha, deform.q)
        moments = moments_from_jacobi(params, 4)
        assert moments[2] == pytest.approx(1 + deform.alpha)
        assert moments[4] == pytest.approx(known.m4(deform.alpha, deform.q))

    @pytest.mark.unit
    def test_exact_fourth_moment(self):
        params = JacobiParams.q_meixner_pollaczek(0.5, 0.25, size=4, exact=True)
        assert moments_from_jacobi(params, 4)[4] == Fraction(279, 64)

    @pytest.mark.unit
    def test_order_cap(self):
        set_config(FockConfig(max_order=6))
        with pytest.raises(ResourceLimitError):
            moments_from_jacobi(JacobiParams.from_gammas([1] * 8), 8)

    @pytest.mark.unit
    def test_negative_gamma_rejected(self):
        params = JacobiParams.q_meixner_pollaczek(-1.5, 0.2, size=4)
        with pytest.raises(ArgumentError):
            moments_from_jacobi(params, 4)

    @pytest.mark.unit
    def test_too_few_coefficients_rejected(self):
        """m_4 needs gamma_0 and gamma_1; one coefficient is not enough."""
        params = JacobiParams.q_meixner_pollaczek(0.5, 0.3, size=1)
        with pytest.raises(ArgumentError):
            moments_from_jacobi(params, 4)

    @pytest.mark.unit
    def test_minimal_coefficients_suffice(self):
        """gamma_0 .. gamma_{K/2-1} determine m_K; m_4 = gamma_0 (gamma_0 + gamma_1)."""
        params = JacobiParams.q_meixner_pollaczek(0.5, 0.3, size=2)
        g0, g1 = params.gamma
        assert moments_from_jacobi(params, 4)[4] == pytest.approx(g0 * (g0 + g1))
        assert moments_from_jacobi(params, 5)[4] == pytest.approx(g0 * (g0 + g1))
        assert moments_from_jacobi(JacobiParams.from_gammas([1]), 2) == [1, 0, 1]

    @pytest.mark.unit
    def test_short_diagonal_rejected(self):
        params = JacobiParams(gamma=(1, 1, 1), beta=(0,))
        with pytest.raises(ArgumentError):
            moments_from_jacobi(params, 4)

    @pytest.mark.unit
    def test_polynomial_norms(self):
        params = JacobiParams.q_meixner_pollaczek(0.5, 0.0, size=4)
        assert polynomial_norms(params, 3) == pytest.approx([1.0, 1.5, 1.5, 1.5])


class TestGaussQuadrature:
    """n-point rules integrate degree <= 2n-1 exactly."""

    @pytest.mark.property
    def test_reproduces_moments(self):
        params = JacobiParams.q_meixner_pollaczek(0.4, -0.3, size=16)
        nodes, weights = gauss_quadrature(params, 5)
        moments = moments_from_jacobi(params, 9)
        for k in range(10):
            assert float(np.sum(weights * nodes**k)) == pytest.approx(moments[k], abs=1e-10)

    @pytest.mark.unit
    def test_weights_sum_to_one(self):
        params = JacobiParams.q_meixner_pollaczek(0.4, 0.3, size=8)
        _, weights = gauss_quadrature(params, 6)
        assert float(np.sum(weights)) == pytest.approx(1.0)

    @pytest.mark.unit
    def test_single_node(self):
        nodes, weights = gauss_quadrature(JacobiParams.from_gammas([1.0]), 1)
        assert nodes.tolist() == [0.0]
        assert weights.tolist() == [1.0]

    @pytest.mark.unit
    def test_needs_a_node(self):
        with pytest.raises(ArgumentError):
            gauss_quadrature(JacobiParams.from_gammas([1.0]), 0)
