"""
Unit tests for the Wick expansion and the pair-partition moment formulas.

Tests verify that the colored and uncolored forms agree exactly, that the
expansion reproduces the operator calculus and the hand-computed moments.
"""

import itertools
from fractions import Fraction

import numpy as np
import pytest

from typeb_fock.errors import ArgumentError
from typeb_fock.fock import DeformParams, FockVector
from typeb_fock.operators import apply_epsilon_word, mixed_vacuum_moment, vacuum_moment
from typeb_fock.partitions import (
    mixed_moment_pair_sum,
    moment_pair_sum,
    t_moment_sum,
    wick_coefficients,
    wick_vector,
)


E1 = np.array([1.0, 0.0])
RATIONAL = [
    [Fraction(1, 2), Fraction(1, 3)],
    [Fraction(-1, 4), Fraction(2, 5)],
    [Fraction(3, 7), Fraction(-1, 2)],
    [Fraction(1, 1), Fraction(1, 6)],
]


def _patterns(max_length):
    for n in range(1, max_length + 1):
        for letters in itertools.product("*1", repeat=n):
            yield "".join(letters)


class TestWickCoefficients:
    """Colored and uncolored forms of the expansion."""

    @pytest.mark.property
    def test_exact_agreement(self, swap_space):
        params = DeformParams(alpha=0.5, q=0.25)
        for eps in _patterns(4):
            expansion = wick_coefficients(
                eps, RATIONAL[: len(eps)], params, swap_space, exact=True
            )
            assert expansion.agrees(), eps

    @pytest.mark.unit
    def test_exact_rejects_complex(self, swap_space):
        params = DeformParams(alpha=0.5, q=0.25)
        with pytest.raises(ArgumentError):
            wick_coefficients("*1", [[1j, 0], [1, 0]], params, swap_space, exact=True)

    @pytest.mark.unit
    def test_length_mismatch(self, params, identity_space):
        with pytest.raises(ArgumentError):
            wick_coefficients("*1", [E1], params, identity_space)

    @pytest.mark.unit
    def test_single_pair(self, params, identity_space):
        expansion = wick_coefficients("*1", [E1, E1], params, identity_space)
        assert expansion.total() == pytest.approx(1 + params.alpha)


class TestWickVector:
    """The expansion reproduces B^eps(n)(x_n) ... B^eps(1)(x_1) Omega."""

    @pytest.mark.unit
    def test_single_creation(self, params, swap_space):
        result = wick_vector("*", [E1], params, swap_space)
        assert np.allclose(result.level(1), E1)

    @pytest.mark.property
    def test_matches_operators(self, params, space, rng):
        vectors = [rng.standard_normal(2) for _ in range(5)]
        for eps in _patterns(5):
            chosen = vectors[: len(eps)]
            expected = apply_epsilon_word(eps, chosen, params, space)
            result = wick_vector(eps, chosen, params, space)
            assert result.max_abs_diff(expected) < 1e-10, eps

    @pytest.mark.unit
    def test_inadmissible_pattern_is_zero(self, params, identity_space):
        result = wick_vector("1*", [E1, E1], params, identity_space)
        assert result.max_abs_diff(FockVector.zeros(2)) == 0.0


class TestMomentSums:
    """Vacuum moments as sums over pair partitions."""

    @pytest.mark.unit
    def test_fourth_moment_exact(self, identity_space):
        params = DeformParams(alpha=0.5, q=0.25)
        alpha, q = Fraction(1, 2), Fraction(1, 4)
        expected = (1 + q) * (1 + alpha) ** 2 + (1 + alpha) * (1 + alpha * q * q)
        value = moment_pair_sum([[1, 0]] * 4, params, identity_space, exact=True)
        assert value == expected == Fraction(279, 64)

    @pytest.mark.unit
    def test_fourth_moment_float(self, params, identity_space, known):
        value = moment_pair_sum([E1] * 4, params, identity_space)
        assert value == pytest.approx(known.m4(params.alpha, params.q))

    @pytest.mark.unit
    def test_odd_moment_vanishes(self, params, identity_space):
        assert moment_pair_sum([E1] * 3, params, identity_space) == 0.0

    @pytest.mark.property
    def test_matches_operator_moment(self, params, space, rng):
        vectors = [rng.standard_normal(2) for _ in range(6)]
        expected = vacuum_moment(vectors, params, space)
        assert moment_pair_sum(vectors, params, space) == pytest.approx(expected, abs=1e-10)

    @pytest.mark.property
    @pytest.mark.parametrize("eps", ["*1", "**11", "*1*1", "**1*11"])
    def test_mixed_moment_matches_operators(self, eps, params, swap_space, rng):
        vectors = [rng.standard_normal(2) for _ in eps]
        expected = mixed_vacuum_moment(eps, vectors, params, swap_space)
        value = mixed_moment_pair_sum(eps, vectors, params, swap_space)
        assert value == pytest.approx(expected, abs=1e-10)

    @pytest.mark.unit
    def test_mixed_moment_unbalanced(self, params, identity_space):
        assert mixed_moment_pair_sum("**1", [E1] * 3, params, identity_space) == 0.0


class TestTMoments:
    """Noncrossing sums weighted by t per inner block."""

    @pytest.mark.unit
    def test_four_unit_vectors(self):
        assert t_moment_sum([E1] * 4, 2.0) == pytest.approx(3.0)

    @pytest.mark.unit
    def test_empty_word(self):
        assert t_moment_sum([], 0.5) == 1.0

    @pytest.mark.unit
    def test_six_unit_vectors(self):
        """NC_2(6): two partitions with two inner blocks, two with one, one with none."""
        t = 0.5
        assert t_moment_sum([E1] * 6, t) == pytest.approx(1 + 2 * t + 2 * t * t)

    @pytest.mark.unit
    @pytest.mark.parametrize("t", [0.0, -1.0])
    def test_nonpositive_t(self, t):
        with pytest.raises(ArgumentError):
            t_moment_sum([E1] * 2, t)
