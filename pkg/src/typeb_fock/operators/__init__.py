"""
Creation, annihilation and Gaussian operators of type B on the truncated
Fock space, with adjointness, commutation, norm and moment computations.
"""

from typeb_fock.operators.checks import (
    NormBounds,
    adjoint_check,
    commutator_residual,
    creation_norm,
    norm_theorem_case,
    tensor_power_ratio_bound,
)
from typeb_fock.operators.fock_ops import (
    FockOperator,
    annihilate,
    annihilate_via_number,
    annihilate_via_R,
    contract_leg,
    create,
    free_right_annihilate,
    gaussian,
    left_q_annihilate,
    number,
    q_power_of_number,
    right_q_annihilate,
)
from typeb_fock.operators.moments import (
    apply_epsilon_word,
    cyclic_defect,
    mixed_vacuum_moment,
    single_vector_moments,
    trace_defect,
    trace_defect_closed_form,
    vacuum_moment,
)
from typeb_fock.operators.truncated import (
    TruncatedMatrix,
    annihilation_block,
    annihilator_matrix,
    creation_block,
    creator_matrix,
    from_operator,
    gaussian_matrix,
    gram_matrix,
    level_offsets,
)

__all__ = [
    # Operators
    "FockOperator",
    "annihilate",
    "annihilate_via_R",
    "annihilate_via_number",
    "contract_leg",
    "create",
    "free_right_annihilate",
    "gaussian",
    "left_q_annihilate",
    "number",
    "q_power_of_number",
    "right_q_annihilate",
    # Truncated matrices
    "TruncatedMatrix",
    "annihilation_block",
    "annihilator_matrix",
    "creation_block",
    "creator_matrix",
    "from_operator",
    "gaussian_matrix",
    "gram_matrix",
    "level_offsets",
    # Checks
    "NormBounds",
    "adjoint_check",
    "commutator_residual",
    "creation_norm",
    "norm_theorem_case",
    "tensor_power_ratio_bound",
    # Moments
    "apply_epsilon_word",
    "cyclic_defect",
    "mixed_vacuum_moment",
    "single_vector_moments",
    "trace_defect",
    "trace_defect_closed_form",
    "vacuum_moment",
]
