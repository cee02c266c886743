"""
Tests for the minimal coset representatives w(k) and the coset decomposition.

Decompositions read sigma = embed(sigma') o w(k), w(k) acting first.
"""

import pytest

from typeb_fock.coxeter import (
    SignedPermutation,
    compose,
    coset_decompose,
    embed,
    enumerate_group,
    generator,
    group_order,
    identity,
    length_stats,
    stumbo_reps,
    stumbo_word,
)
from typeb_fock.errors import ArgumentError


class TestRepresentatives:
    """Tests for the prefixes of pi_{n-1} ... pi_0 ... pi_{n-1}."""

    @pytest.mark.unit
    def test_rank_one(self):
        assert [str(w) for w in stumbo_reps(1)] == ["e", "pi0"]

    @pytest.mark.unit
    def test_rank_two(self):
        assert [str(w) for w in stumbo_reps(2)] == ["e", "pi1", "pi1pi0", "pi1pi0pi1"]

    @pytest.mark.unit
    def test_rank_three_w4(self):
        assert stumbo_word(3, 4).letters == (2, 1, 0, 1)

    @pytest.mark.unit
    def test_representatives_are_reduced(self):
        for n in range(1, 5):
            for k, rep in enumerate(stumbo_reps(n)):
                assert length_stats(rep.evaluate()).length == k

    @pytest.mark.unit
    def test_invalid_arguments(self):
        with pytest.raises(ArgumentError):
            stumbo_reps(0)
        with pytest.raises(ArgumentError):
            stumbo_word(2, 4)


class TestCosetDecompose:
    """Tests for sigma -> (sigma', k)."""

    @pytest.mark.unit
    def test_identity(self):
        lower, k = coset_decompose(identity(3))
        assert lower == identity(2)
        assert k == 0

    @pytest.mark.unit
    def test_representative_itself(self):
        for k, rep in enumerate(stumbo_reps(3)):
            lower, found = coset_decompose(rep.evaluate())
            assert lower.is_identity
            assert found == k

    @pytest.mark.unit
    def test_rank_two_examples(self):
        """[-2,1] is w(2) itself; [2,-1] is pi_0 after w(1)."""
        assert coset_decompose(SignedPermutation(2, (-2, 1))) == (identity(1), 2)
        assert coset_decompose(SignedPermutation(2, (2, -1))) == (generator(1, 0), 1)

    @pytest.mark.unit
    def test_rank_one_against_trivial_group(self):
        lower, k = coset_decompose(generator(1, 0))
        assert lower.n == 0
        assert k == 1

    @pytest.mark.property
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_bijection_and_length_additivity(self, n):
        reps = stumbo_reps(n)
        seen = set()
        for sigma in enumerate_group(n):
            lower, k = coset_decompose(sigma)
            seen.add((lower.window, k))
            assert compose(embed(lower, n), reps[k].evaluate()) == sigma
            if lower.n:
                part = length_stats(lower)
                whole = length_stats(sigma)
                assert whole.l1 == part.l1 + reps[k].l1
                assert whole.l2 == part.l2 + reps[k].l2
        assert len(seen) == group_order(n)
