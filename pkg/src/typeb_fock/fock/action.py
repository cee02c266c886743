"""
Action of signed permutations on tensor powers H^(x)n.

Input leg j of a simple tensor moves to output leg |sigma(j)| and is
involuted iff sigma(j) < 0, so pi_1 (x) y = y (x) x and
pi_0 (x) y = xbar (x) y.
"""

from __future__ import annotations

import logging
from functools import reduce

import numpy as np

from typeb_fock.coxeter import GeneratorWord, SignedPermutation
from typeb_fock.errors import ArgumentError
from typeb_fock.fock.space import InvolutiveSpace, LevelMap, level_dim
from typeb_fock.types import ComplexMatrix

logger = logging.getLogger(__name__)


def _check_level(rank: int, n: int) -> None:
    if rank != n:
        raise ArgumentError(f"element of rank {rank} cannot act on level {n}")


def permute_legs(
    tensor: np.ndarray,
    element: SignedPermutation,
    space: InvolutiveSpace,
) -> np.ndarray:
    """
    Apply sigma to the first n axes of tensor (trailing axes are batch axes).
    """
    n = element.n
    out = tensor
    for j, image in enumerate(element.window):
        if image < 0:
            out = np.moveaxis(np.tensordot(space.J, out, axes=([1], [j])), 0, j)
    inverse = element.inverse().window
    axes = [abs(inverse[i]) - 1 for i in range(n)]
    axes.extend(range(n, out.ndim))
    return np.transpose(out, axes)


def sigma_action(
    element: SignedPermutation, n: int, space: InvolutiveSpace
) -> LevelMap:
    """
    Matrix of sigma on H^(x)n by the closed form.

    Example:
        >>> space = InvolutiveSpace.identity(2)
        >>> sigma_action(SignedPermutation(2, (2, 1)), 2, space).matrix.real
        array([[1., 0., 0., 0.],
               [0., 0., 1., 0.],
               [0., 1., 0., 0.],
               [0., 0., 0., 1.]])
    """
    _check_level(element.n, n)
    if n == 0:
        return LevelMap(0, np.ones((1, 1), np.complex128))
    if space.d == 1:
        # C^(x)n is one-dimensional; legs only carry the sign of J.
        return LevelMap(n, np.full((1, 1), space.J[0, 0] ** element.negatives()))
    size = level_dim(space.d, n)
    basis = np.eye(size, dtype=np.complex128).reshape((space.d,) * n + (size,))
    moved = permute_legs(basis, element, space)
    return LevelMap(n, np.ascontiguousarray(moved).reshape(size, size))


def apply_sigma(
    element: SignedPermutation, coefficients: np.ndarray, space: InvolutiveSpace
) -> np.ndarray:
    """sigma applied to one level-n coefficient vector without forming the matrix."""
    n = element.n
    if n == 0:
        return np.asarray(coefficients, np.complex128).copy()
    if space.d == 1:
        sign = space.J[0, 0] ** element.negatives()
        return sign * np.asarray(coefficients, np.complex128)
    tensor = np.asarray(coefficients, np.complex128).reshape((space.d,) * n)
    return np.ascontiguousarray(permute_legs(tensor, element, space)).ravel()


def _swap_matrix(d: int) -> ComplexMatrix:
    swap = np.zeros((d * d, d * d), np.complex128)
    for a in range(d):
        for b in range(d):
            swap[b * d + a, a * d + b] = 1.0
    return swap


def generator_action(i: int, n: int, space: InvolutiveSpace) -> LevelMap:
    """
    Kronecker-built matrix of pi_i on level n.

    pi_0 = J (x) I and pi_i = I (x) SWAP (x) I with SWAP on legs i, i+1.
    """
    if n < 1 or not 0 <= i < n:
        raise ArgumentError(f"generator pi{i} does not act on level {n}")
    d = space.d
    if i == 0:
        matrix = np.kron(space.J, np.eye(level_dim(d, n - 1)))
    else:
        matrix = reduce(
            np.kron,
            [
                np.eye(level_dim(d, i - 1)),
                _swap_matrix(d),
                np.eye(level_dim(d, n - i - 1)),
            ],
        )
    return LevelMap(n, matrix)


def word_action(word: GeneratorWord, space: InvolutiveSpace) -> LevelMap:
    """Product of generator matrices, leftmost letter leftmost."""
    n = word.n
    matrix = np.eye(level_dim(space.d, n), dtype=np.complex128)
    for letter in word.letters:
        matrix = matrix @ generator_action(letter, n, space).matrix
    return LevelMap(n, matrix)
