"""Operators assembled as dense matrices over the truncation levels 0..m."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Sequence

import numpy as np

from typeb_fock.errors import ArgumentError
from typeb_fock.fock import (
    DeformParams,
    FockVector,
    InvolutiveSpace,
    level_dim,
    p_operator_recursive,
    r_operator,
)
from typeb_fock.operators.fock_ops import FockOperator, gaussian
from typeb_fock.types import AnnihilationRoute, ComplexMatrix

logger = logging.getLogger(__name__)


def level_offsets(d: int, m: int) -> List[int]:
    """Start index of each level 0..m+1 inside the direct sum."""
    offsets = [0]
    for n in range(m + 1):
        offsets.append(offsets[-1] + level_dim(d, n))
    return offsets


@dataclass(frozen=True, eq=False)
class TruncatedMatrix:
    """
    Dense matrix on the direct sum of levels 0..m.

    Entries mapping level m to m+1 are dropped, so creation is cut at the top
    boundary level.
    """

    d: int
    m: int
    matrix: ComplexMatrix

    def __post_init__(self):
        size = level_offsets(self.d, self.m)[-1]
        if self.matrix.shape != (size, size):
            raise ArgumentError(
                f"truncated matrix has shape {self.matrix.shape}, expected {size}"
            )

    @classmethod
    def zeros(cls, d: int, m: int) -> TruncatedMatrix:
        size = level_offsets(d, m)[-1]
        return cls(d, m, np.zeros((size, size), np.complex128))

    def level_block(self, out_level: int, in_level: int) -> ComplexMatrix:
        offsets = level_offsets(self.d, self.m)
        return self.matrix[
            offsets[out_level] : offsets[out_level + 1],
            offsets[in_level] : offsets[in_level + 1],
        ]

    def dense(self) -> ComplexMatrix:
        return self.matrix

    def __add__(self, other: TruncatedMatrix) -> TruncatedMatrix:
        return TruncatedMatrix(self.d, self.m, self.matrix + other.matrix)

    def __matmul__(self, other: TruncatedMatrix) -> TruncatedMatrix:
        return TruncatedMatrix(self.d, self.m, self.matrix @ other.matrix)

    def apply(self, f: FockVector) -> FockVector:
        padded = f.pad_to(self.m)
        if padded.max_degree > self.m:
            raise ArgumentError(f"vector of degree {f.max_degree} exceeds m={self.m}")
        out = self.matrix @ np.concatenate(padded.levels)
        offsets = level_offsets(self.d, self.m)
        return FockVector(
            self.d,
            tuple(out[offsets[n] : offsets[n + 1]] for n in range(self.m + 1)),
        )


def from_operator(op: FockOperator, d: int, m: int) -> TruncatedMatrix:
    """Assemble any FockOperator column by column from the level basis."""
    offsets = level_offsets(d, m)
    result = TruncatedMatrix.zeros(d, m)
    for n in range(m + 1):
        size = level_dim(d, n)
        for j in range(size):
            unit = np.zeros(size, np.complex128)
            unit[j] = 1.0
            image = op(FockVector.from_level(d, n, unit))
            for level in range(min(image.max_degree, m) + 1):
                result.matrix[offsets[level] : offsets[level + 1], offsets[n] + j] = (
                    image.levels[level]
                )
    return result


def creation_block(x: Sequence[complex], n: int, space: InvolutiveSpace) -> ComplexMatrix:
    """Matrix of B*(x) from level n to level n+1: I (x) x."""
    column = space.vector(x).reshape(-1, 1)
    return np.kron(np.eye(level_dim(space.d, n)), column)


def annihilation_block(
    x: Sequence[complex],
    n: int,
    params: DeformParams,
    space: InvolutiveSpace,
) -> ComplexMatrix:
    """Matrix of B(x) from level n to level n-1: (I (x) <x|) R^(n)."""
    if n < 1:
        raise ArgumentError("B(x) has no block below level 0")
    row = space.vector(x).conj().reshape(1, -1)
    free = np.kron(np.eye(level_dim(space.d, n - 1)), row)
    return free @ r_operator(n, params, space).matrix


def creator_matrix(
    x: Sequence[complex], m: int, space: InvolutiveSpace
) -> TruncatedMatrix:
    result = TruncatedMatrix.zeros(space.d, m)
    offsets = level_offsets(space.d, m)
    for n in range(m):
        result.matrix[offsets[n + 1] : offsets[n + 2], offsets[n] : offsets[n + 1]] = (
            creation_block(x, n, space)
        )
    return result


def annihilator_matrix(
    x: Sequence[complex],
    m: int,
    params: DeformParams,
    space: InvolutiveSpace,
) -> TruncatedMatrix:
    result = TruncatedMatrix.zeros(space.d, m)
    offsets = level_offsets(space.d, m)
    for n in range(1, m + 1):
        result.matrix[offsets[n - 1] : offsets[n], offsets[n] : offsets[n + 1]] = (
            annihilation_block(x, n, params, space)
        )
    return result


def gaussian_matrix(
    x: Sequence[complex],
    m: int,
    params: DeformParams,
    space: InvolutiveSpace,
    route: AnnihilationRoute = AnnihilationRoute.VIA_R,
) -> TruncatedMatrix:
    """
    G(x) = B(x) + B*(x) on levels 0..m.

    The via_r route assembles blocks directly; via_number goes column by column
    through the operator.
    """
    if route is AnnihilationRoute.VIA_NUMBER:
        return from_operator(gaussian(x, params, space, route), space.d, m)
    return creator_matrix(x, m, space) + annihilator_matrix(x, m, params, space)


def gram_matrix(m: int, params: DeformParams, space: InvolutiveSpace) -> TruncatedMatrix:
    """Block diagonal of P^(0), ..., P^(m)."""
    result = TruncatedMatrix.zeros(space.d, m)
    offsets = level_offsets(space.d, m)
    for n in range(m + 1):
        result.matrix[offsets[n] : offsets[n + 1], offsets[n] : offsets[n + 1]] = (
            p_operator_recursive(n, params, space).matrix
        )
    return result
