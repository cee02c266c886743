"""Checks on the group action, the symmetrizers and the deformed inner product."""

from __future__ import annotations

import logging
from typing import List

import numpy as np

from typeb_fock.coxeter import GeneratorWord, compose, enumerate_group, length_table
from typeb_fock.fock import (
    DeformParams,
    FockVector,
    InvolutiveSpace,
    inner_aq,
    p_operator_direct,
    p_operator_recursive,
    positivity_report,
    r_operator,
    r_operator_bound,
    sigma_action,
    tensor_power_norm,
    word_action,
)
from typeb_fock.config import get_config
from typeb_fock.runconfig import RunConfig
from typeb_fock.types import VerifySuite
from typeb_fock.verification.models import PropertyResult

logger = logging.getLogger(__name__)

SUITE = VerifySuite.FOCK


def _max_level(space: InvolutiveSpace, limit: int) -> int:
    """Largest level whose d^n x d^n matrices stay small."""
    level = 1
    while level < limit and space.d ** (level + 1) <= 256:
        level += 1
    return level


def check_action_routes(space: InvolutiveSpace, max_rank: int = 3) -> PropertyResult:
    """Closed-form sigma matrices vs products of generator matrices."""
    worst = 0.0
    for n in range(1, max_rank + 1):
        table = length_table(n)
        for element in enumerate_group(n):
            letters = table.reduced_words(element)[0]
            product = word_action(GeneratorWord(n, letters), space)
            worst = max(worst, sigma_action(element, n, space).max_abs_diff(product))
    return PropertyResult.within(SUITE, "sigma_action_vs_words", worst, 1e-12)


def check_homomorphism(space: InvolutiveSpace, n: int = 3) -> PropertyResult:
    elements = list(enumerate_group(n))
    rng = np.random.default_rng(get_config().seed)
    worst = 0.0
    for _ in range(20):
        a = elements[rng.integers(len(elements))]
        b = elements[rng.integers(len(elements))]
        lhs = sigma_action(compose(a, b), n, space)
        rhs = sigma_action(a, n, space) @ sigma_action(b, n, space)
        worst = max(worst, lhs.max_abs_diff(rhs))
    return PropertyResult.within(SUITE, "action_homomorphism", worst, 1e-12)


def check_factorization(
    params: DeformParams, space: InvolutiveSpace, max_level: int
) -> PropertyResult:
    worst = 0.0
    for n in range(max_level + 1):
        direct = p_operator_direct(n, params, space)
        worst = max(worst, direct.max_abs_diff(p_operator_recursive(n, params, space)))
    return PropertyResult.within(
        SUITE, "p_recursive_vs_direct", worst, 1e-10, f"levels 0..{max_level}"
    )


def check_hermitian(
    params: DeformParams, space: InvolutiveSpace, max_level: int
) -> PropertyResult:
    worst = 0.0
    for n in range(max_level + 1):
        matrix = p_operator_recursive(n, params, space).matrix
        worst = max(worst, float(np.max(np.abs(matrix - matrix.conj().T))))
    return PropertyResult.within(SUITE, "p_hermitian", worst, 1e-10)


def check_positivity(
    params: DeformParams, space: InvolutiveSpace, max_level: int
) -> PropertyResult:
    kernel_tol = get_config().kernel_tol
    reports = [positivity_report(n, params, space) for n in range(max_level + 1)]
    smallest = min(r.min_eigenvalue for r in reports)
    return PropertyResult(
        name="p_positive",
        suite=SUITE,
        residual=smallest,
        bound=kernel_tol,
        passed=all(r.is_positive for r in reports),
        detail="smallest eigenvalue must exceed the kernel tolerance",
    )


def check_r_bound(
    params: DeformParams, space: InvolutiveSpace, max_level: int
) -> PropertyResult:
    excess = 0.0
    for n in range(1, max_level + 1):
        norm = float(np.linalg.norm(r_operator(n, params, space).matrix, ord=2))
        excess = max(excess, norm - r_operator_bound(n, params))
    return PropertyResult.within(
        SUITE, "r_norm_bound", excess, 1e-10, "||R^(n)|| minus its bound"
    )


def check_tensor_power_norm(
    x: np.ndarray, params: DeformParams, space: InvolutiveSpace, max_level: int
) -> PropertyResult:
    worst = 0.0
    for n in range(max_level + 1):
        power = FockVector.tensor_power(x, n)
        measured = inner_aq(power, power, params, space).real
        closed = tensor_power_norm(x, n, params, space)
        worst = max(worst, abs(measured - closed) / max(1.0, abs(closed)))
    return PropertyResult.within(SUITE, "tensor_power_norm", worst, 1e-11)


def check_inner_symmetry(
    params: DeformParams, space: InvolutiveSpace, max_level: int, seed: int
) -> PropertyResult:
    """<f, g> = conj <g, f>."""
    rng = np.random.default_rng(seed)
    f = FockVector.random(rng, space.d, max_level)
    g = FockVector.random(rng, space.d, max_level)
    gap = abs(inner_aq(f, g, params, space) - np.conj(inner_aq(g, f, params, space)))
    return PropertyResult.within(SUITE, "inner_conjugate_symmetry", gap, 1e-10)


def run_fock_suite(config: RunConfig) -> List[PropertyResult]:
    params, space = config.params(), config.space()
    top = _max_level(space, min(config.trunc, 4))
    x = config.vector()
    results = [
        check_action_routes(space, min(top, 3)),
        check_homomorphism(space, min(top, 3)),
        check_factorization(params, space, top),
        check_hermitian(params, space, top),
        check_positivity(params, space, top),
        check_r_bound(params, space, top),
        check_tensor_power_norm(x, params, space, top),
        check_inner_symmetry(params, space, top, config.seed),
    ]
    logger.info(f"Fock suite: {sum(r.passed for r in results)}/{len(results)} passed")
    return results
