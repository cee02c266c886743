"""
Adjointness, commutation and norm checks for B(x), B*(x).

Norms are taken in the deformed geometry: per level, a map F between levels
n and n' is measured as || P^(n')^(1/2) F P^(n)^(-1/2) ||_2.
"""

from __future__ import annotations

import logging
import math
from typing import Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field

from typeb_fock.config import get_config
from typeb_fock.errors import ArgumentError
from typeb_fock.fock import (
    DeformParams,
    FockVector,
    InvolutiveSpace,
    inner_aq,
    level_sqrt,
    tensor_power_norm,
)
from typeb_fock.operators.fock_ops import annihilate, create
from typeb_fock.operators.truncated import (
    TruncatedMatrix,
    annihilator_matrix,
    creator_matrix,
    from_operator,
)
from typeb_fock.types import AnnihilationRoute, NormCase

logger = logging.getLogger(__name__)


def _rng(seed: Optional[int]) -> np.random.Generator:
    return np.random.default_rng(get_config().seed if seed is None else seed)


def _unit(f: FockVector) -> FockVector:
    size = math.sqrt(f.inner00(f).real)
    return f if size == 0 else (1.0 / size) * f


def adjoint_check(
    x: Sequence[complex],
    m: int,
    params: DeformParams,
    space: InvolutiveSpace,
    trials: int = 5,
    seed: Optional[int] = None,
    route: AnnihilationRoute = AnnihilationRoute.VIA_NUMBER,
) -> float:
    """
    max |<f, B(x) g>_{alpha,q} - <B*(x) f, g>_{alpha,q}| over random unit f, g.

    f lives on levels 0..m-1 and g on 0..m.
    """
    if m < 1:
        raise ArgumentError(f"adjoint check needs m >= 1, got {m}")
    rng = _rng(seed)
    down = annihilate(x, params, space, route)
    up = create(x, space)
    worst = 0.0
    for _ in range(trials):
        f = _unit(FockVector.random(rng, space.d, m - 1))
        g = _unit(FockVector.random(rng, space.d, m))
        lhs = inner_aq(f, down(g), params, space)
        rhs = inner_aq(up(f), g, params, space)
        worst = max(worst, abs(lhs - rhs))
    logger.debug(f"Adjoint residual {worst:.3e} at {params}, m={m}")
    return worst


def _annihilator(
    x: Sequence[complex],
    m: int,
    params: DeformParams,
    space: InvolutiveSpace,
    route: AnnihilationRoute,
) -> TruncatedMatrix:
    if route is AnnihilationRoute.VIA_NUMBER:
        return from_operator(annihilate(x, params, space, route), space.d, m)
    return annihilator_matrix(x, m, params, space)


def commutator_residual(
    x: Sequence[complex],
    y: Sequence[complex],
    m: int,
    params: DeformParams,
    space: InvolutiveSpace,
    route: AnnihilationRoute = AnnihilationRoute.VIA_R,
) -> float:
    """
    Operator-norm residual of B(x)B*(y) - q B*(y)B(x) against
    <x,y> + alpha <x,ybar> q^(2n) on each level n <= m-1.
    """
    if m < 1:
        raise ArgumentError(f"commutator check needs m >= 1, got {m}")
    down = _annihilator(x, m, params, space, route)
    up = creator_matrix(y, m, space)
    plain = space.inner(x, y)
    twisted = space.bar_inner(x, y)
    worst = 0.0
    for n in range(m):
        lhs = down.level_block(n, n + 1) @ up.level_block(n + 1, n)
        if n >= 1:
            lhs = lhs - params.q * up.level_block(n, n - 1) @ down.level_block(n - 1, n)
        coefficient = plain + params.alpha * twisted * params.q ** (2 * n)
        residual = lhs - coefficient * np.eye(lhs.shape[0])
        worst = max(worst, float(np.linalg.norm(residual, ord=2)))
    return worst


def creation_norm(
    x: Sequence[complex], m: int, params: DeformParams, space: InvolutiveSpace
) -> float:
    """
    Norm of B*(x) restricted to levels 0..m-1, in the deformed geometry.

    Raises:
        ArgumentError: If x = 0 or m < 1
    """
    vec = space.vector(x)
    if not np.any(vec):
        raise ArgumentError("creation_norm needs a nonzero vector")
    if m < 1:
        raise ArgumentError(f"creation_norm needs m >= 1, got {m}")
    up = creator_matrix(vec, m, space)
    best = 0.0
    for n in range(m):
        lower = level_sqrt(n, params, space)
        upper = level_sqrt(n + 1, params, space)
        block = upper.sqrt @ up.level_block(n + 1, n) @ lower.inv_sqrt
        best = max(best, float(np.linalg.norm(block, ord=2)))
    return best


def tensor_power_ratio_bound(
    x: Sequence[complex], n: int, params: DeformParams, space: InvolutiveSpace
) -> float:
    """||x^(x)n|| / ||x^(x)(n-1)||, a lower bound for ||B*(x)||."""
    if n < 1:
        raise ArgumentError(f"ratio bound needs n >= 1, got {n}")
    previous = 1.0 if n == 1 else tensor_power_norm(x, n - 1, params, space)
    return math.sqrt(tensor_power_norm(x, n, params, space) / previous)


class NormBounds(BaseModel):
    """Which regime of the creation-norm theorem applies, with its bounds."""

    case: NormCase
    lower: float = Field(description="Lower bound for ||B*(x)||")
    upper: float = Field(description="Upper bound for ||B*(x)||")
    strict_lower: bool = Field(
        default=False, description="Lower bound is strict (only reached as m grows)"
    )

    @property
    def exact(self) -> Optional[float]:
        return self.lower if self.case.is_exact else None


def norm_theorem_case(
    x: Sequence[complex], params: DeformParams, space: InvolutiveSpace
) -> NormBounds:
    vec = space.vector(x)
    norm_sq = float(np.vdot(vec, vec).real)
    if norm_sq == 0.0:
        raise ArgumentError("norm bounds need a nonzero vector")
    alpha, q = params.alpha, params.q
    a = alpha * space.bar_inner(vec, vec).real
    norm = math.sqrt(norm_sq)
    free_bound = norm / math.sqrt(1 - q)
    outer = math.sqrt((1 + abs(alpha)) / (1 - q)) * norm
    if q <= 0 and a >= 0:
        value = math.sqrt(norm_sq + a)
        return NormBounds(case=NormCase.NONPOSITIVE_Q_NONNEG_A, lower=value, upper=value)
    if q <= 0:
        return NormBounds(case=NormCase.NONPOSITIVE_Q_NEG_A, lower=free_bound, upper=norm)
    if abs(alpha) <= q:
        return NormBounds(case=NormCase.SMALL_ALPHA, lower=free_bound, upper=free_bound)
    if q < a / norm_sq:
        return NormBounds(
            case=NormCase.LARGE_A, lower=free_bound, upper=outer, strict_lower=True
        )
    return NormBounds(case=NormCase.OTHERWISE, lower=free_bound, upper=outer)
