"""
Unit tests for vacuum expectations and the trace defect.
"""

import numpy as np
import pytest

from typeb_fock.errors import ArgumentError
from typeb_fock.fock import DeformParams
from typeb_fock.operators import (
    apply_epsilon_word,
    cyclic_defect,
    mixed_vacuum_moment,
    single_vector_moments,
    trace_defect,
    trace_defect_closed_form,
    vacuum_moment,
)
from typeb_fock.types import AnnihilationRoute


E1 = np.array([1.0, 0.0])
E2 = np.array([0.0, 1.0])


class TestMixedMoments:
    """<Omega, B^eps(n)(x_n) ... B^eps(1)(x_1) Omega>."""

    @pytest.mark.unit
    def test_create_then_annihilate(self, params, identity_space):
        value = mixed_vacuum_moment("*1", [E1, E1], params, identity_space)
        assert value == pytest.approx(1 + params.alpha)

    @pytest.mark.unit
    def test_annihilate_first_vanishes(self, params, identity_space):
        assert mixed_vacuum_moment("1*", [E1, E1], params, identity_space) == 0.0

    @pytest.mark.unit
    def test_swap_pairs_with_partner(self, swap_space):
        params = DeformParams(alpha=0.4, q=0.0)
        value = mixed_vacuum_moment("*1", [E1, E2], params, swap_space)
        assert value == pytest.approx(0.4)

    @pytest.mark.unit
    def test_length_mismatch(self, params, identity_space):
        with pytest.raises(ArgumentError):
            apply_epsilon_word("**", [E1], params, identity_space)

    @pytest.mark.unit
    def test_invalid_letter(self, params, identity_space):
        with pytest.raises(ArgumentError):
            apply_epsilon_word("*x", [E1, E1], params, identity_space)

    @pytest.mark.unit
    def test_word_keeps_upper_levels(self, params, identity_space):
        state = apply_epsilon_word("**", [E1, E2], params, identity_space)
        assert state.max_degree == 2
        assert np.allclose(state.level(2), np.kron(E1, E2))


class TestGaussianMoments:
    """Moments of G(x)."""

    @pytest.mark.unit
    def test_single_vector_moments(self, params, identity_space, known):
        moments = single_vector_moments(E1, 4, params, identity_space)
        assert moments[0] == 1.0
        assert moments[1] == pytest.approx(0.0)
        assert moments[2] == pytest.approx(1 + params.alpha)
        assert moments[3] == pytest.approx(0.0)
        assert moments[4] == pytest.approx(known.m4(params.alpha, params.q))

    @pytest.mark.unit
    def test_vacuum_moment_matches_single_vector(self, params, space):
        x = np.array([0.6, 0.8])
        moments = single_vector_moments(x, 4, params, space)
        assert vacuum_moment([x] * 4, params, space).real == pytest.approx(moments[4])

    @pytest.mark.property
    def test_routes_agree(self, params, mixed_space):
        word = [E1, E2, E1 + E2, E2, E1, E1]
        via_r = vacuum_moment(word, params, mixed_space, AnnihilationRoute.VIA_R)
        via_number = vacuum_moment(word, params, mixed_space, AnnihilationRoute.VIA_NUMBER)
        assert via_r == pytest.approx(via_number, abs=1e-10)

    @pytest.mark.unit
    def test_undeformed_semicircle(self, identity_space, known):
        """alpha = q = 0 gives the Catalan numbers."""
        params = DeformParams(alpha=0.0, q=0.0)
        moments = single_vector_moments(E1, 8, params, identity_space)
        assert [round(m) for m in moments[::2]] == list(known.catalan)


class TestTraceDefect:
    """The vacuum state is not tracial once alpha != 0 and q^2 != 1."""

    @pytest.mark.unit
    def test_example_value(self):
        assert trace_defect(DeformParams(alpha=0.5, q=0.0), 1, 1) == pytest.approx(3.0)

    @pytest.mark.unit
    @pytest.mark.parametrize("s", [1, -1])
    @pytest.mark.parametrize("t", [1, -1])
    def test_closed_form(self, params, s, t):
        numeric = trace_defect(params, s, t)
        assert numeric == pytest.approx(trace_defect_closed_form(params, s, t), abs=1e-10)

    @pytest.mark.unit
    def test_tracial_without_alpha(self, identity_space):
        params = DeformParams(alpha=0.0, q=0.6)
        word = [E1, E1, E2, E2]
        assert abs(cyclic_defect(word, params, identity_space)) < 1e-12

    @pytest.mark.unit
    def test_rejects_non_sign(self):
        with pytest.raises(ArgumentError):
            trace_defect(DeformParams(alpha=0.5, q=0.0), 2, 1)
