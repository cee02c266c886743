"""Deformed inner product <f, g>_{alpha,q} = sum_n <f_n, P^(n) g_n>_{0,0}."""

from __future__ import annotations

import logging
from typing import Sequence

import numpy as np

from typeb_fock.errors import ArgumentError
from typeb_fock.fock.space import DeformParams, FockVector, InvolutiveSpace
from typeb_fock.fock.symmetrizer import p_operator_recursive
from typeb_fock.qsymbols import q_factorial, q_pochhammer

logger = logging.getLogger(__name__)


def inner_aq(
    f: FockVector,
    g: FockVector,
    params: DeformParams,
    space: InvolutiveSpace,
) -> complex:
    """Conjugate-linear in f."""
    if f.d != space.d or g.d != space.d:
        raise ArgumentError(
            f"vectors of dimension {f.d}, {g.d} on a space of dimension {space.d}"
        )
    top = min(f.max_degree, g.max_degree)
    total = 0j
    for n in range(top + 1):
        p_matrix = p_operator_recursive(n, params, space).matrix
        total += np.vdot(f.levels[n], p_matrix @ g.levels[n])
    return complex(total)


def norm_aq(f: FockVector, params: DeformParams, space: InvolutiveSpace) -> float:
    value = inner_aq(f, f, params, space).real
    return float(np.sqrt(max(value, 0.0)))


def tensor_power_norm(
    x: Sequence[complex],
    n: int,
    params: DeformParams,
    space: InvolutiveSpace,
) -> float:
    """
    Closed form of ||x^(x)n||^2_{alpha,q}:
    [n]_q! (-alpha <x, xbar> / ||x||^2; q)_n ||x||^(2n).

    Raises:
        ArgumentError: If x = 0
    """
    vec = space.vector(x)
    norm_sq = float(np.vdot(vec, vec).real)
    if norm_sq == 0.0:
        raise ArgumentError("tensor_power_norm needs a nonzero vector")
    ratio = space.bar_inner(vec, vec).real / norm_sq
    return float(
        q_factorial(n, params.q)
        * q_pochhammer(-params.alpha * ratio, params.q, n)
        * norm_sq**n
    )
