"""
q-special functions, the q-Meixner-Pollaczek recurrence, Jacobi moments,
continued-fraction Cauchy transform, the closed-form density and its limits.
"""

from typeb_fock.orthopoly.cauchy import (
    cauchy_transform,
    constant_tail,
    stieltjes_density,
)
from typeb_fock.orthopoly.density import (
    DensitySpec,
    density,
    density_curve,
    density_mass,
    density_moment,
    free_meixner_density,
    inner_product_integral,
    pair_factor,
    pair_factor_complex,
)
from typeb_fock.orthopoly.limits import (
    MEIXNER_SCALINGS,
    MeixnerLimitReport,
    atom_moments,
    bernoulli_limit,
    gaussian_limit_moments,
    jacobi_limit_moments,
    meixner_limit_check,
    meixner_limit_polys,
    meixner_limit_reference,
)
from typeb_fock.orthopoly.recurrence import (
    JacobiParams,
    gauss_quadrature,
    moments_from_jacobi,
    polynomial_norms,
    polynomials_from_jacobi,
    qmp_polynomials,
)
from typeb_fock.qsymbols import (
    q_factorial,
    q_number,
    q_pochhammer,
    q_pochhammer_inf,
)

__all__ = [
    # q-symbols
    "q_factorial",
    "q_number",
    "q_pochhammer",
    "q_pochhammer_inf",
    # Recurrence
    "JacobiParams",
    "gauss_quadrature",
    "moments_from_jacobi",
    "polynomial_norms",
    "polynomials_from_jacobi",
    "qmp_polynomials",
    # Cauchy transform
    "cauchy_transform",
    "constant_tail",
    "stieltjes_density",
    # Density
    "DensitySpec",
    "density",
    "density_curve",
    "density_mass",
    "density_moment",
    "free_meixner_density",
    "inner_product_integral",
    "pair_factor",
    "pair_factor_complex",
    # Limits
    "MEIXNER_SCALINGS",
    "MeixnerLimitReport",
    "atom_moments",
    "bernoulli_limit",
    "gaussian_limit_moments",
    "jacobi_limit_moments",
    "meixner_limit_check",
    "meixner_limit_polys",
    "meixner_limit_reference",
]
