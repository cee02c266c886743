"""Checks on partition enumeration, statistics and the Wick formulas."""

from __future__ import annotations

import itertools
import logging
import math
from fractions import Fraction
from typing import List

import numpy as np

from typeb_fock.fock import DeformParams, InvolutiveSpace
from typeb_fock.operators import apply_epsilon_word, vacuum_moment
from typeb_fock.partitions import (
    enumerate_noncrossing_pairs,
    enumerate_p12,
    enumerate_pair_partitions,
    enumerate_type_b,
    moment_pair_sum,
    stats,
    t_moment_sum,
    wick_coefficients,
    wick_vector,
)
from typeb_fock.runconfig import RunConfig
from typeb_fock.types import ONE, STAR, VerifySuite
from typeb_fock.verification.models import PropertyResult

logger = logging.getLogger(__name__)

SUITE = VerifySuite.PARTITIONS
TELEPHONE = (1, 1, 2, 4, 10, 26, 76, 232, 764)


def _catalan(m: int) -> int:
    return math.comb(2 * m, m) // (m + 1)


def _double_factorial(n: int) -> int:
    return math.prod(range(n, 0, -2)) if n > 0 else 1


def check_counts(max_size: int = 8) -> PropertyResult:
    misses = []
    for n in range(max_size + 1):
        if len(enumerate_p12(n)) != TELEPHONE[n]:
            misses.append(f"P12({n})")
        if n % 2:
            continue
        m = n // 2
        pairs = enumerate_pair_partitions(n)
        if len(pairs) != _double_factorial(n - 1):
            misses.append(f"P2({n})")
        if len(enumerate_noncrossing_pairs(n)) != _catalan(m):
            misses.append(f"NC2({n})")
        if len(enumerate_type_b(pairs, pairs_only=True)) != len(pairs) * 2**m:
            misses.append(f"P2B({n})")
    return PropertyResult.within(
        SUITE, "partition_counts", len(misses), 0, ", ".join(misses)
    )


def check_inner_outer(max_size: int = 8) -> PropertyResult:
    """In(pi) + Out(pi) is the number of blocks."""
    bad = 0
    for n in range(0, max_size + 1, 2):
        for partition in enumerate_noncrossing_pairs(n):
            s = stats(partition)
            if s.inn + s.out != len(partition.blocks):
                bad += 1
    return PropertyResult.within(SUITE, "inner_plus_outer", bad, 0)


def _patterns(max_length: int):
    for n in range(1, max_length + 1):
        yield from itertools.product((STAR, ONE), repeat=n)


def check_exact_wick(
    params: DeformParams, space: InvolutiveSpace, rng: np.random.Generator
) -> PropertyResult:
    """Colored and uncolored coefficients coincide in rational arithmetic."""
    mismatched = 0
    for eps in _patterns(4):
        vectors = [
            [Fraction(int(v), 4) for v in rng.integers(-4, 5, space.d)] for _ in eps
        ]
        expansion = wick_coefficients(eps, vectors, params, space, exact=True)
        if not expansion.agrees():
            mismatched += 1
    return PropertyResult.within(
        SUITE, "wick_colored_equals_uncolored_exact", mismatched, 0
    )


def check_wick_vs_operators(
    params: DeformParams,
    space: InvolutiveSpace,
    rng: np.random.Generator,
    max_length: int = 5,
    tuples: int = 2,
) -> PropertyResult:
    worst = 0.0
    for eps in _patterns(max_length):
        for _ in range(tuples):
            vectors = [rng.standard_normal(space.d) for _ in eps]
            expected = apply_epsilon_word(eps, vectors, params, space)
            found = wick_vector(eps, vectors, params, space)
            worst = max(worst, expected.max_abs_diff(found))
    return PropertyResult.within(
        SUITE, "wick_vector_vs_operators", worst, 1e-11, f"patterns up to {max_length}"
    )


def check_mixed_moments(
    params: DeformParams, space: InvolutiveSpace, rng: np.random.Generator
) -> List[PropertyResult]:
    route_gap = 0.0
    reversal_gap = 0.0
    for n in (2, 4, 6):
        vectors = [rng.standard_normal(space.d) for _ in range(n)]
        operator = vacuum_moment(vectors, params, space)
        pairs = moment_pair_sum(vectors, params, space)
        route_gap = max(route_gap, abs(operator - pairs) / max(1.0, abs(pairs)))
        reversed_moment = vacuum_moment(vectors[::-1], params, space)
        reversal_gap = max(reversal_gap, abs(reversed_moment - np.conj(operator)))
    return [
        PropertyResult.within(SUITE, "mixed_moment_routes", route_gap, 1e-10),
        PropertyResult.within(SUITE, "moment_reversal", reversal_gap, 1e-10),
    ]


def check_t_relation(d: int, rng: np.random.Generator) -> PropertyResult:
    """sum over NC_2 of t^In equals t^m times the pair sum at alpha = (1-t)/t, q = 0."""
    space = InvolutiveSpace.identity(d)
    worst = 0.0
    for t in (0.5, 0.8, 2.0):
        shifted = DeformParams(alpha=(1 - t) / t, q=0.0)
        for n in (2, 4, 6):
            vectors = [rng.standard_normal(d) for _ in range(n)]
            lhs = t_moment_sum(vectors, t, space)
            rhs = t ** (n // 2) * moment_pair_sum(vectors, shifted, space)
            worst = max(worst, abs(lhs - rhs) / max(1.0, abs(rhs)))
    return PropertyResult.within(SUITE, "t_deformed_moments", worst, 1e-12)


def run_partitions_suite(config: RunConfig) -> List[PropertyResult]:
    params, space = config.params(), config.space()
    rng = config.rng()
    results = [
        check_counts(),
        check_inner_outer(),
        check_exact_wick(params, space, rng),
        check_wick_vs_operators(params, space, rng),
    ]
    results.extend(check_mixed_moments(params, space, rng))
    results.append(check_t_relation(space.d, rng))
    logger.info(
        f"Partitions suite: {sum(r.passed for r in results)}/{len(results)} passed"
    )
    return results
