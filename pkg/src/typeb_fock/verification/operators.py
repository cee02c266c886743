"""Checks on B(x), B*(x), G(x) and their vacuum moments."""

from __future__ import annotations

import itertools
import logging
from typing import List

import numpy as np

from typeb_fock.fock import DeformParams, FockVector, InvolutiveSpace
from typeb_fock.operators import (
    adjoint_check,
    annihilate_via_number,
    annihilate_via_R,
    annihilator_matrix,
    commutator_residual,
    creation_norm,
    from_operator,
    norm_theorem_case,
    single_vector_moments,
    trace_defect,
    trace_defect_closed_form,
)
from typeb_fock.orthopoly import JacobiParams, moments_from_jacobi
from typeb_fock.partitions import moment_pair_sum
from typeb_fock.runconfig import RunConfig
from typeb_fock.types import AnnihilationRoute, NormCase, VerifySuite
from typeb_fock.verification.models import PropertyResult

logger = logging.getLogger(__name__)

SUITE = VerifySuite.OPERATORS
COMMUTATION_LEVELS = 5
MAX_MOMENT_ORDER = 8


def _unit(x: np.ndarray) -> np.ndarray:
    return x / np.linalg.norm(x)


def check_annihilator_routes(
    x: np.ndarray,
    m: int,
    params: DeformParams,
    space: InvolutiveSpace,
    rng: np.random.Generator,
    trials: int = 5,
) -> List[PropertyResult]:
    via_r = annihilate_via_R(x, params, space)
    via_number = annihilate_via_number(x, params, space)
    worst = 0.0
    for _ in range(trials):
        g = FockVector.random(rng, space.d, m)
        worst = max(worst, via_r(g).max_abs_diff(via_number(g)))
    matrix_gap = float(
        np.max(
            np.abs(
                annihilator_matrix(x, m, params, space).dense()
                - from_operator(via_number, space.d, m).dense()
            )
        )
    )
    return [
        PropertyResult.within(SUITE, "annihilator_two_routes", worst, 1e-10),
        PropertyResult.within(SUITE, "annihilator_matrix_routes", matrix_gap, 1e-10),
    ]


def check_adjointness(
    x: np.ndarray, m: int, params: DeformParams, space: InvolutiveSpace, seed: int
) -> List[PropertyResult]:
    return [
        PropertyResult.within(
            SUITE,
            f"adjoint_{route.value}",
            adjoint_check(x, m, params, space, seed=seed, route=route),
            1e-10,
        )
        for route in AnnihilationRoute
    ]


def check_commutation(
    x: np.ndarray,
    m: int,
    params: DeformParams,
    space: InvolutiveSpace,
    rng: np.random.Generator,
) -> PropertyResult:
    y = _unit(rng.standard_normal(space.d))
    # at least levels 0..4, whatever the truncation
    levels = max(m, COMMUTATION_LEVELS)
    residual = commutator_residual(x, y, levels, params, space)
    return PropertyResult.within(
        SUITE, "commutation_relation", residual, 1e-11, f"levels 0..{levels - 1}"
    )


def check_norm_bounds(
    x: np.ndarray, m: int, params: DeformParams, space: InvolutiveSpace
) -> PropertyResult:
    bounds = norm_theorem_case(x, params, space)
    measured = creation_norm(x, m, params, space)
    excess = max(0.0, measured - bounds.upper)
    if bounds.case is NormCase.NONPOSITIVE_Q_NONNEG_A:
        excess = max(excess, abs(measured - bounds.upper))
    return PropertyResult.within(
        SUITE,
        "creation_norm_bounds",
        excess,
        1e-8,
        f"case {bounds.case.value}: measured {measured:.12g} at m={m}, "
        f"bounds [{bounds.lower:.12g}, {bounds.upper:.12g}]",
    )


def check_trace_defect(params: DeformParams) -> PropertyResult:
    worst = 0.0
    for s, t in itertools.product((1, -1), repeat=2):
        gap = abs(trace_defect(params, s, t) - trace_defect_closed_form(params, s, t))
        worst = max(worst, gap)
    return PropertyResult.within(SUITE, "trace_defect_formula", worst, 1e-12)


def check_triple_moments(
    x: np.ndarray, order: int, params: DeformParams, space: InvolutiveSpace
) -> PropertyResult:
    """Operator, pair-partition and Jacobi routes for <Omega, G(x)^k Omega>."""
    x = _unit(x)
    operator = single_vector_moments(x, order, params, space)
    c = space.bar_inner(x, x).real
    jacobi = moments_from_jacobi(
        JacobiParams.q_meixner_pollaczek(params.alpha, params.q, c, size=order // 2 + 1),
        order,
    )
    worst = 0.0
    for k in range(order + 1):
        pairs = moment_pair_sum([x] * k, params, space).real if k else 1.0
        scale = max(1.0, abs(jacobi[k]))
        worst = max(
            worst,
            abs(operator[k] - pairs) / scale,
            abs(operator[k] - float(jacobi[k])) / scale,
        )
    return PropertyResult.within(
        SUITE, "triple_moment_routes", worst, 1e-10, f"orders 0..{order}"
    )


def run_operators_suite(config: RunConfig) -> List[PropertyResult]:
    params, space = config.params(), config.space()
    rng = config.rng()
    x = config.vector()
    m = min(config.trunc, 4 if space.d <= 2 else 3)
    results: List[PropertyResult] = []
    results.extend(check_annihilator_routes(x, m, params, space, rng))
    results.extend(check_adjointness(x, m, params, space, config.seed))
    results.append(check_commutation(x, m, params, space, rng))
    results.append(check_norm_bounds(x, m, params, space))
    results.append(check_trace_defect(params))
    results.append(
        check_triple_moments(x, min(config.order, MAX_MOMENT_ORDER), params, space)
    )
    logger.info(
        f"Operators suite: {sum(r.passed for r in results)}/{len(results)} passed"
    )
    return results
