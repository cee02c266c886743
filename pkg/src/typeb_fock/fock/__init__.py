"""
Fock core: involutive space, group action on tensor powers, the operators
P^(n) and R^(n), and the deformed inner product.
"""

from typeb_fock.fock.action import (
    apply_sigma,
    generator_action,
    permute_legs,
    sigma_action,
    word_action,
)
from typeb_fock.fock.inner import inner_aq, norm_aq, tensor_power_norm
from typeb_fock.fock.space import (
    DeformParams,
    FockVector,
    InvolutiveSpace,
    LevelMap,
    level_dim,
)
from typeb_fock.fock.symmetrizer import (
    LevelSqrt,
    PositivityReport,
    cache_info,
    clear_cache,
    level_sqrt,
    p_operator_direct,
    p_operator_recursive,
    positivity_report,
    q_symmetrizer_type_a,
    r_operator,
    r_operator_bound,
)

__all__ = [
    # Values
    "DeformParams",
    "FockVector",
    "InvolutiveSpace",
    "LevelMap",
    "level_dim",
    # Action
    "apply_sigma",
    "generator_action",
    "permute_legs",
    "sigma_action",
    "word_action",
    # Symmetrizers
    "LevelSqrt",
    "PositivityReport",
    "cache_info",
    "clear_cache",
    "level_sqrt",
    "p_operator_direct",
    "p_operator_recursive",
    "positivity_report",
    "q_symmetrizer_type_a",
    "r_operator",
    "r_operator_bound",
    # Inner product
    "inner_aq",
    "norm_aq",
    "tensor_power_norm",
]
