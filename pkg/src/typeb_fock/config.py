"""
typeb-fock Configuration Module

Provides centralized configuration for size caps, tolerances and the default
random seed. Every value can be overridden through environment variables.
"""

import logging
import os
from dataclasses import dataclass, field
from typing import Optional

logger = logging.getLogger(__name__)


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {name}={raw!r}; using {default}")
        return default


def _env_float(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None:
        return default
    try:
        return float(raw)
    except ValueError:
        logger.warning(f"Ignoring non-numeric {name}={raw!r}; using {default}")
        return default


@dataclass
class FockConfig:
    """Configuration for caps and tolerances."""

    # Environment variable names
    ENV_RANK_CAP: str = "TYPEB_RANK_CAP"
    ENV_MAX_ORDER: str = "TYPEB_MAX_ORDER"
    ENV_PARTITION_CAP: str = "TYPEB_PARTITION_CAP"
    ENV_SEED: str = "TYPEB_SEED"
    ENV_TOLERANCE: str = "TYPEB_TOLERANCE"
    ENV_CONSTRUCT_TOL: str = "TYPEB_CONSTRUCT_TOL"
    ENV_KERNEL_TOL: str = "TYPEB_KERNEL_TOL"
    ENV_PRODUCT_EPS: str = "TYPEB_PRODUCT_EPS"
    ENV_MAX_PRODUCT_TERMS: str = "TYPEB_MAX_PRODUCT_TERMS"
    ENV_CACHE_SIZE: str = "TYPEB_CACHE_SIZE"

    # Largest rank for exhaustive group enumeration (2^n n! elements)
    rank_cap: int = field(default_factory=lambda: _env_int("TYPEB_RANK_CAP", 6))
    # Largest moment order for moment tables and Jacobi moments
    max_order: int = field(default_factory=lambda: _env_int("TYPEB_MAX_ORDER", 12))
    # Largest ground set for full partition sums
    partition_cap: int = field(
        default_factory=lambda: _env_int("TYPEB_PARTITION_CAP", 12)
    )
    seed: int = field(default_factory=lambda: _env_int("TYPEB_SEED", 20140101))

    tolerance: float = field(
        default_factory=lambda: _env_float("TYPEB_TOLERANCE", 1e-10)
    )
    construct_tol: float = field(
        default_factory=lambda: _env_float("TYPEB_CONSTRUCT_TOL", 1e-12)
    )
    kernel_tol: float = field(
        default_factory=lambda: _env_float("TYPEB_KERNEL_TOL", 1e-10)
    )
    # Infinite q-products stop once |s| |q|^k drops below this
    product_eps: float = field(
        default_factory=lambda: _env_float("TYPEB_PRODUCT_EPS", 1e-16)
    )
    max_product_terms: int = field(
        default_factory=lambda: _env_int("TYPEB_MAX_PRODUCT_TERMS", 20000)
    )
    # Level matrices kept by the symmetrizer cache (least recently used go first)
    cache_size: int = field(default_factory=lambda: _env_int("TYPEB_CACHE_SIZE", 64))

    def __post_init__(self):
        """Validate ranges."""
        if self.rank_cap < 1:
            raise ValueError("rank_cap must be at least 1")
        if self.max_order < 0:
            raise ValueError("max_order must be non-negative")
        if self.cache_size < 0:
            raise ValueError("cache_size must be non-negative")
        for name in ("tolerance", "construct_tol", "kernel_tol", "product_eps"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    def to_env_template(self) -> str:
        """
        Generate environment variable template.

        Returns:
            Template string for .env file
        """
        return f"""# typeb-fock Configuration
# Largest rank enumerated exhaustively (group size 2^n n!)
{self.ENV_RANK_CAP}={self.rank_cap}

# Largest moment order accepted by moment tables
{self.ENV_MAX_ORDER}={self.max_order}

# Largest ground set for partition sums
{self.ENV_PARTITION_CAP}={self.partition_cap}

# Seed for randomized property checks
{self.ENV_SEED}={self.seed}

# Tolerances
{self.ENV_TOLERANCE}={self.tolerance}
{self.ENV_CONSTRUCT_TOL}={self.construct_tol}
{self.ENV_KERNEL_TOL}={self.kernel_tol}
{self.ENV_PRODUCT_EPS}={self.product_eps}
{self.ENV_MAX_PRODUCT_TERMS}={self.max_product_terms}

# Level matrices cached by the symmetrizer (0 disables caching)
{self.ENV_CACHE_SIZE}={self.cache_size}
"""


# Global configuration instance
_config: Optional[FockConfig] = None


def get_config() -> FockConfig:
    """Get or create the global configuration instance."""
    global _config
    if _config is None:
        _config = FockConfig()
    return _config


def set_config(config: FockConfig) -> None:
    """Set the global configuration instance."""
    global _config
    _config = config


def reset_config() -> None:
    """Reset configuration to defaults."""
    global _config
    _config = None
