"""
Unit tests for signed permutations and generator words.

Tests verify window conventions, composition, embedding and the Coxeter
relations of type B.
"""

import pytest

from typeb_fock.config import FockConfig, set_config
from typeb_fock.coxeter import (
    GeneratorWord,
    SignedPermutation,
    braid_relations,
    compose,
    embed,
    enumerate_group,
    generator,
    group_order,
    identity,
    restrict,
    word,
)
from typeb_fock.errors import ArgumentError, ConstructionError, ResourceLimitError


class TestSignedPermutationConstruction:
    """Tests for window validation and evaluation."""

    @pytest.mark.unit
    def test_generators_have_expected_windows(self):
        """pi_0 flips 1, pi_i swaps i and i+1."""
        assert generator(2, 0).window == (-1, 2)
        assert generator(2, 1).window == (2, 1)
        assert generator(3, 2).window == (1, 3, 2)

    @pytest.mark.unit
    def test_invalid_window_rejected(self):
        with pytest.raises(ConstructionError):
            SignedPermutation(2, (1, 1))
        with pytest.raises(ConstructionError):
            SignedPermutation(2, (1,))

    @pytest.mark.unit
    def test_generator_index_out_of_range(self):
        with pytest.raises(ArgumentError):
            generator(2, 2)

    @pytest.mark.unit
    def test_call_respects_odd_symmetry(self):
        sigma = SignedPermutation(3, (-2, 3, 1))
        assert sigma(1) == -2
        assert sigma(-1) == 2
        assert sigma(-3) == -1
        with pytest.raises(ArgumentError):
            sigma(0)


class TestComposition:
    """Tests for compose(a, b)(k) = a(b(k))."""

    @pytest.mark.unit
    def test_pi1_after_pi0(self):
        assert compose(generator(2, 1), generator(2, 0)).window == (-2, 1)

    @pytest.mark.unit
    def test_identity_is_neutral(self):
        sigma = SignedPermutation(3, (3, -1, 2))
        assert compose(sigma, identity(3)) == sigma
        assert compose(identity(3), sigma) == sigma

    @pytest.mark.unit
    def test_generators_are_involutions(self):
        for i in range(3):
            assert compose(generator(3, i), generator(3, i)).is_identity

    @pytest.mark.unit
    def test_inverse(self):
        for sigma in enumerate_group(3):
            assert compose(sigma, sigma.inverse()).is_identity

    @pytest.mark.unit
    def test_rank_mismatch(self):
        with pytest.raises(ArgumentError):
            compose(identity(2), identity(3))

    @pytest.mark.unit
    def test_word_evaluates_left_to_right(self):
        w = word(2, [1, 0])
        assert w.evaluate() == compose(generator(2, 1), generator(2, 0))
        assert (w.l1, w.l2) == (1, 1)
        assert str(w) == "pi1pi0"
        assert str(GeneratorWord(2)) == "e"


class TestEmbedding:
    """Tests for Sigma(n-1) inside Sigma(n)."""

    @pytest.mark.unit
    def test_embed_fixes_top_point(self):
        assert embed(generator(1, 0)).window == (-1, 2)
        assert embed(generator(1, 0), 3).window == (-1, 2, 3)

    @pytest.mark.unit
    def test_restrict_inverts_embed(self):
        sigma = SignedPermutation(2, (-2, 1))
        assert restrict(embed(sigma)) == sigma

    @pytest.mark.unit
    def test_restrict_requires_fixed_top(self):
        with pytest.raises(ArgumentError):
            restrict(SignedPermutation(2, (2, 1)))


class TestGroupEnumeration:
    """Tests for exhaustive enumeration and its cap."""

    @pytest.mark.unit
    @pytest.mark.parametrize("n,size", [(0, 1), (1, 2), (2, 8), (3, 48), (4, 384)])
    def test_group_sizes(self, n, size):
        elements = list(enumerate_group(n))
        assert len(elements) == size == group_order(n)
        assert len(set(elements)) == size

    @pytest.mark.unit
    def test_rank_cap(self):
        set_config(FockConfig(rank_cap=3))
        with pytest.raises(ResourceLimitError):
            list(enumerate_group(4))
        assert len(list(enumerate_group(4, cap=4))) == 384


class TestBraidRelations:
    """Tests for the Coxeter relations as composed maps."""

    @pytest.mark.unit
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_all_relations_hold(self, n):
        results = braid_relations(n)
        assert results
        assert all(holds for _, holds in results)

    @pytest.mark.unit
    def test_type_b_relation_has_order_four(self):
        product = compose(generator(2, 0), generator(2, 1))
        square = compose(product, product)
        assert not square.is_identity
        assert compose(square, square).is_identity
