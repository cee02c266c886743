"""
Unit and property tests for the (l1, l2) length statistics.
"""

import pytest

from typeb_fock.coxeter import (
    SignedPermutation,
    enumerate_group,
    generator,
    identity,
    length_stats,
    length_stats_closed_form,
    length_table,
    reduced_word_stats,
    word,
    word_stats,
)


class TestLengthStats:
    """Tests for lengths read off the BFS table."""

    @pytest.mark.unit
    def test_identity_and_generator(self):
        assert length_stats(identity(2)) == length_stats_closed_form(identity(2))
        assert (length_stats(identity(3)).l1, length_stats(identity(3)).l2) == (0, 0)
        assert (length_stats(generator(2, 0)).l1, length_stats(generator(2, 0)).l2) == (
            1,
            0,
        )

    @pytest.mark.unit
    def test_pi1_pi0_pi1(self):
        """[1,-2] = pi1 pi0 pi1 has one sign flip and two transpositions."""
        stats = length_stats(SignedPermutation(2, (1, -2)))
        assert (stats.l1, stats.l2) == (1, 2)
        assert stats.length == 3

    @pytest.mark.unit
    def test_longest_element(self):
        """-identity is the longest element with length n^2."""
        stats = length_stats(SignedPermutation(3, (-1, -2, -3)))
        assert stats.length == 9
        assert stats.l1 == 3

    @pytest.mark.unit
    def test_word_stats_counts_letters(self):
        stats = word_stats(word(3, [2, 1, 0, 1]))
        assert (stats.l1, stats.l2) == (1, 3)


class TestLengthTable:
    """Tests for the memoized Cayley-graph search."""

    @pytest.mark.unit
    def test_table_covers_group(self):
        assert len(length_table(3)) == 48

    @pytest.mark.unit
    def test_descents_shorten(self):
        table = length_table(3)
        for sigma in enumerate_group(3):
            for i in table.descents(sigma):
                assert table[sigma].length > 0

    @pytest.mark.unit
    def test_reduced_words_evaluate_back(self):
        table = length_table(3)
        sigma = SignedPermutation(3, (-3, 1, -2))
        words = table.reduced_words(sigma)
        assert words
        for letters in words:
            assert len(letters) == table[sigma].length
            assert word(3, letters).evaluate() == sigma


class TestLengthProperties:
    """Two routes for (l1, l2) and well-definedness over reduced words."""

    @pytest.mark.property
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_closed_form_matches_search(self, n):
        for sigma in enumerate_group(n):
            assert length_stats(sigma) == length_stats_closed_form(sigma)

    @pytest.mark.property
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_every_reduced_word_has_same_stats(self, n):
        for sigma in enumerate_group(n):
            assert len(reduced_word_stats(sigma)) == 1
