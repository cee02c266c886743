"""
Unit tests for configuration and the validated run configuration.
"""

import numpy as np
import pytest
from pydantic import ValidationError

from typeb_fock.config import FockConfig, get_config, reset_config, set_config
from typeb_fock.errors import ArgumentError, ConstructionError
from typeb_fock.runconfig import RunConfig, parse_involution, parse_vector


class TestFockConfig:
    """Environment overrides and the process-wide instance."""

    @pytest.mark.unit
    def test_defaults(self):
        config = FockConfig()
        assert config.rank_cap == 6
        assert config.seed == 20140101

    @pytest.mark.unit
    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv("TYPEB_RANK_CAP", "4")
        monkeypatch.setenv("TYPEB_TOLERANCE", "1e-8")
        config = FockConfig()
        assert config.rank_cap == 4
        assert config.tolerance == 1e-8

    @pytest.mark.unit
    def test_bad_environment_value_ignored(self, monkeypatch):
        monkeypatch.setenv("TYPEB_MAX_ORDER", "many")
        assert FockConfig().max_order == 12

    @pytest.mark.unit
    def test_set_and_reset(self):
        set_config(FockConfig(seed=7))
        assert get_config().seed == 7
        reset_config()
        assert get_config().seed == 20140101


class TestParsers:
    """Involution and vector strings."""

    @pytest.mark.unit
    def test_identity(self):
        assert parse_involution("identity", 3) == parse_involution(" IDENTITY ", 3)

    @pytest.mark.unit
    def test_swap(self):
        space = parse_involution("swap:1-2", 3)
        assert np.allclose(space.involute([1.0, 2.0, 3.0]), [2.0, 1.0, 3.0])

    @pytest.mark.unit
    def test_diag(self):
        assert np.allclose(parse_involution("diag:1,-1", 2).J, np.diag([1.0, -1.0]))

    @pytest.mark.unit
    def test_overlapping_swaps(self):
        with pytest.raises(ConstructionError):
            parse_involution("swap:1-2,2-3", 3)

    @pytest.mark.unit
    @pytest.mark.parametrize("text", ["diag:1", "swap:a-b", "rotate", "diag:1,2"])
    def test_rejected(self, text):
        with pytest.raises(ArgumentError):
            parse_involution(text, 2)

    @pytest.mark.unit
    def test_vector(self):
        assert parse_vector("1, 0.5,-2") == [1.0, 0.5, -2.0]
        with pytest.raises(ArgumentError):
            parse_vector("1,x")
        with pytest.raises(ArgumentError):
            parse_vector(" , ")


class TestRunConfig:
    """Cross-field validation and derived objects."""

    @pytest.mark.unit
    def test_defaults(self):
        config = RunConfig()
        assert config.params().alpha == 0.0
        assert config.space() == parse_involution("identity", 2)

    @pytest.mark.unit
    @pytest.mark.parametrize(
        "kwargs",
        [
            {"q": 1.5},
            {"alpha": -1.0},
            {"involution": "swap:1-2,2-3", "dim": 3},
            {"x": "1,2,3"},
            {"order": 40},
            {"trunc": 0},
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ValidationError):
            RunConfig(**kwargs)

    @pytest.mark.unit
    def test_vector_from_string(self):
        config = RunConfig(x="0.6,0.8")
        assert np.allclose(config.vector(), [0.6, 0.8])

    @pytest.mark.unit
    def test_default_vector_is_fixed_by_involution(self):
        config = RunConfig(involution="swap:1-2")
        x = config.vector()
        assert np.allclose(config.space().involute(x), x)
        assert np.linalg.norm(x) == pytest.approx(1.0)

    @pytest.mark.unit
    def test_default_vector_without_plus_eigenvalue(self):
        config = RunConfig(involution="diag:-1,-1")
        assert np.allclose(config.vector(), [1.0, 0.0])

    @pytest.mark.unit
    def test_meta_and_rng(self):
        config = RunConfig(alpha=0.5, seed=3)
        assert config.meta()["alpha"] == 0.5
        assert config.rng().integers(1000) == np.random.default_rng(3).integers(1000)
