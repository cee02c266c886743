"""
Wick expansion of B^eps(n)(x_n) ... B^eps(1)(x_1) Omega and the pair-partition
moment formulas, in colored and uncolored form.

Colored weight of (pi, f):    alpha^NB q^(Cr + InS + 2 InNB + 2 SLNB)
Uncolored weight of pi:       q^(Cr + InS) prod_pairs (<,> + alpha q^(2Cov + 2SL) <,bar>)

For a pair {a < b} the inner products are <x_b, x_a> and <x_b, xbar_a>, the
closer being the annihilated argument.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Union


from typeb_fock.config import get_config
from typeb_fock.errors import ArgumentError, CrossCheckError
from typeb_fock.fock import DeformParams, FockVector, InvolutiveSpace
from typeb_fock.partitions.enumeration import (
    colorings,
    enumerate_noncrossing_pairs,
    enumerate_p12_eps,
    enumerate_p2_eps,
    enumerate_pair_partitions,
)
from typeb_fock.partitions.models import EpsilonPattern, PartitionStats, SetPartition
from typeb_fock.partitions.stats import noncrossing_stats, stats
from typeb_fock.types import ExactOrFloat

logger = logging.getLogger(__name__)

PatternLike = Union[str, Sequence[str], EpsilonPattern]


class _Pairing:
    """Inner products <x_b, x_a> and <x_b, xbar_a>, float or exact."""

    def __init__(
        self,
        vectors: Sequence[Sequence],
        space: InvolutiveSpace,
        exact: bool = False,
    ):
        self.exact = exact
        self.space = space
        if exact:
            self.vectors = [self._rational(v) for v in vectors]
            self.J = [[Fraction(float(v)) for v in row] for row in space.J]
        else:
            self.vectors = [space.vector(v) for v in vectors]

    def _rational(self, v: Sequence) -> List[Fraction]:
        if len(v) != self.space.d:
            raise ArgumentError(f"vector of length {len(v)} on dimension {self.space.d}")
        out = []
        for entry in v:
            if isinstance(entry, complex):
                raise ArgumentError("exact mode needs real rational vectors")
            out.append(Fraction(entry))
        return out

    def plain(self, a: int, b: int):
        if self.exact:
            xa, xb = self.vectors[a - 1], self.vectors[b - 1]
            return sum((u * v for u, v in zip(xb, xa)), Fraction(0))
        return self.space.inner(self.vectors[b - 1], self.vectors[a - 1])

    def twisted(self, a: int, b: int):
        if self.exact:
            xa, xb = self.vectors[a - 1], self.vectors[b - 1]
            bar_a = [sum((jk * v for jk, v in zip(row, xa)), Fraction(0)) for row in self.J]
            return sum((u * v for u, v in zip(xb, bar_a)), Fraction(0))
        return self.space.bar_inner(self.vectors[b - 1], self.vectors[a - 1])


def _params(params: DeformParams, exact: bool):
    if exact:
        return Fraction(params.alpha), Fraction(params.q)
    return params.alpha, params.q


def colored_counts(
    base: PartitionStats, partition: SetPartition, coloring: Sequence[int]
) -> tuple:
    """(NB, InNB, SLNB) for a coloring, from the per-block Cov and SL counts."""
    nb = innb = slnb = 0
    for k, (block, color) in enumerate(zip(partition.blocks, coloring)):
        if color == -1 and len(block) == 2:
            nb += 1
            innb += base.cov[k]
            slnb += base.sl[k]
    return nb, innb, slnb


def colored_coefficient(
    partition: SetPartition, pairing: _Pairing, alpha, q
) -> ExactOrFloat:
    """Sum over colorings f of alpha^NB q^(Cr+InS+2InNB+2SLNB) times pair products."""
    base = stats(partition)
    total = 0 * alpha
    for coloring in colorings(partition):
        nb, innb, slnb = colored_counts(base, partition, coloring)
        term = alpha**nb * q ** (base.cr + base.ins + 2 * innb + 2 * slnb)
        for block, color in zip(partition.blocks, coloring):
            if len(block) == 2:
                a, b = block
                term *= pairing.plain(a, b) if color == 1 else pairing.twisted(a, b)
        total += term
    return total


def uncolored_coefficient(
    partition: SetPartition, pairing: _Pairing, alpha, q
) -> ExactOrFloat:
    """q^(Cr+InS) prod over pairs of (<,> + alpha q^(2Cov+2SL) <,bar>)."""
    base = stats(partition)
    term = q ** (base.cr + base.ins) + 0 * alpha
    for k, block in enumerate(partition.blocks):
        if len(block) == 2:
            a, b = block
            twist = alpha * q ** (2 * base.cov[k] + 2 * base.sl[k])
            term *= pairing.plain(a, b) + twist * pairing.twisted(a, b)
    return term


@dataclass
class WickExpansion:
    """Per-partition coefficients of both forms of the Wick formula."""

    eps: EpsilonPattern
    colored: Dict[SetPartition, ExactOrFloat] = field(default_factory=dict)
    uncolored: Dict[SetPartition, ExactOrFloat] = field(default_factory=dict)

    @property
    def partitions(self) -> List[SetPartition]:
        return list(self.colored)

    def discrepancy(self) -> float:
        return max(
            (abs(self.colored[p] - self.uncolored[p]) for p in self.colored),
            default=0.0,
        )

    def agrees(self, tol: Optional[float] = None) -> bool:
        """Exact coefficients must match exactly; floats within tolerance."""
        if any(isinstance(v, Fraction) for v in self.colored.values()):
            return all(self.colored[p] == self.uncolored[p] for p in self.colored)
        limit = get_config().tolerance if tol is None else tol
        scale = max((abs(v) for v in self.colored.values()), default=1.0)
        return self.discrepancy() <= limit * max(1.0, scale)

    def total(self, colored: bool = True) -> ExactOrFloat:
        values = (self.colored if colored else self.uncolored).values()
        return sum(values, 0 * next(iter(values), 0))


def wick_coefficients(
    eps: PatternLike,
    vectors: Sequence[Sequence],
    params: DeformParams,
    space: InvolutiveSpace,
    exact: bool = False,
    pairs_only: bool = False,
    cap: Optional[int] = None,
) -> WickExpansion:
    """
    Coefficients of each partition in P_{1,2;eps} (or P_{2;eps}) in both forms.

    Exact mode runs over fractions.Fraction with parameters and vector entries
    converted exactly.
    """
    pattern = eps if isinstance(eps, EpsilonPattern) else EpsilonPattern.parse(eps)
    if len(pattern) != len(vectors):
        raise ArgumentError(f"pattern of length {len(pattern)} for {len(vectors)} vectors")
    pairing = _Pairing(vectors, space, exact)
    alpha, q = _params(params, exact)
    parts = (
        enumerate_p2_eps(pattern, cap) if pairs_only else enumerate_p12_eps(pattern, cap)
    )
    expansion = WickExpansion(pattern)
    for partition in parts:
        expansion.colored[partition] = colored_coefficient(partition, pairing, alpha, q)
        expansion.uncolored[partition] = uncolored_coefficient(
            partition, pairing, alpha, q
        )
    logger.debug(f"Wick expansion of {pattern}: {len(parts)} partitions")
    return expansion


def _cross_check(expansion: WickExpansion, what: str) -> None:
    if not expansion.agrees():
        raise CrossCheckError(what, float(expansion.discrepancy()), get_config().tolerance)


def wick_vector(
    eps: PatternLike,
    vectors: Sequence[Sequence[complex]],
    params: DeformParams,
    space: InvolutiveSpace,
    check: bool = True,
    cap: Optional[int] = None,
) -> FockVector:
    """
    sum over P_{1,2;eps} of the colored coefficient times the ordered tensor
    of the singleton vectors.

    Raises:
        CrossCheckError: If check and the colored and uncolored forms disagree
    """
    expansion = wick_coefficients(eps, vectors, params, space, cap=cap)
    if check:
        _cross_check(expansion, f"wick vector {expansion.eps}")
    degree = max(expansion.eps.singleton_count, 0)
    result = FockVector.zeros(space.d, degree)
    for partition, coefficient in expansion.colored.items():
        singles = partition.singletons
        if singles:
            tensor = FockVector.simple_tensor([vectors[i - 1] for i in singles])
        else:
            tensor = FockVector.vacuum(space.d)
        result = result + coefficient * tensor
    return result


def mixed_moment_pair_sum(
    eps: PatternLike,
    vectors: Sequence[Sequence],
    params: DeformParams,
    space: InvolutiveSpace,
    exact: bool = False,
    check: bool = True,
    cap: Optional[int] = None,
) -> ExactOrFloat:
    """<Omega, B^eps(n)(x_n) ... B^eps(1)(x_1) Omega> as a sum over P_{2;eps}."""
    expansion = wick_coefficients(
        eps, vectors, params, space, exact=exact, pairs_only=True, cap=cap
    )
    if check:
        _cross_check(expansion, f"mixed moment {expansion.eps}")
    if not expansion.colored:
        return Fraction(0) if exact else 0.0
    return expansion.total()


def moment_pair_sum(
    vectors: Sequence[Sequence],
    params: DeformParams,
    space: InvolutiveSpace,
    exact: bool = False,
    check: bool = True,
    cap: Optional[int] = None,
) -> ExactOrFloat:
    """
    <Omega, G(x_n) ... G(x_1) Omega> as a sum over P_2(n); zero for odd n.

    Example:
        Four copies of a unit self-dual x give (1+q)(1+alpha)^2 + (1+alpha)(1+alpha q^2).
    """
    n = len(vectors)
    partitions = enumerate_pair_partitions(n, cap)
    if not partitions:
        return Fraction(0) if exact else 0.0
    pairing = _Pairing(vectors, space, exact)
    alpha, q = _params(params, exact)
    colored = sum(colored_coefficient(p, pairing, alpha, q) for p in partitions)
    uncolored = sum(uncolored_coefficient(p, pairing, alpha, q) for p in partitions)
    if check:
        if exact:
            if colored != uncolored:
                raise CrossCheckError("moment pair sum", float(abs(colored - uncolored)), 0.0)
        else:
            tol = get_config().tolerance * max(1.0, abs(colored))
            if abs(colored - uncolored) > tol:
                raise CrossCheckError("moment pair sum", abs(colored - uncolored), tol)
    return colored


def t_moment_sum(
    vectors: Sequence[Sequence[complex]],
    t: float,
    space: Optional[InvolutiveSpace] = None,
    cap: Optional[int] = None,
) -> complex:
    """
    sum over NC_2 of t^In(pi) prod <x_i, x_j>.

    Raises:
        ArgumentError: If t <= 0
    """
    if t <= 0:
        raise ArgumentError(f"t must be positive, got {t}")
    if not vectors:
        return 1.0
    if space is None:
        space = InvolutiveSpace.identity(len(vectors[0]))
    pairing = _Pairing(vectors, space)
    total = 0j
    for partition in enumerate_noncrossing_pairs(len(vectors), cap):
        inner, _ = noncrossing_stats(partition)
        term = complex(t**inner)
        for a, b in partition.blocks:
            term *= pairing.plain(a, b)
        total += term
    return total
