"""
Value objects of the truncated Fock space.

InvolutiveSpace carries C^d with a real symmetric orthogonal matrix J
(x -> xbar := J x); DeformParams holds (alpha, q); FockVector stores one dense
coefficient vector per level, leg 1 being the slowest-varying tensor index.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from typeb_fock.config import get_config
from typeb_fock.errors import ArgumentError, ConstructionError
from typeb_fock.types import ComplexMatrix, ComplexVector

logger = logging.getLogger(__name__)


class DeformParams(BaseModel):
    """
    Deformation parameters (alpha, q).

    Admissible: (alpha, q) in (-1, 1)^2, or q = 0 with alpha in (-1, inf)
    where P^(n) = 1 + alpha pi_0 stays positive definite.
    """

    alpha: float
    q: float

    model_config = ConfigDict(frozen=True, extra="forbid")

    @model_validator(mode="after")
    def _check_admissible(self) -> "DeformParams":
        if self.q == 0.0:
            if self.alpha <= -1.0:
                raise ValueError(
                    f"alpha={self.alpha} must exceed -1 when q = 0 "
                    "(1 + alpha pi_0 loses positivity)"
                )
        elif not (-1.0 < self.alpha < 1.0 and -1.0 < self.q < 1.0):
            raise ValueError(
                f"(alpha, q) = ({self.alpha}, {self.q}) outside the admissible "
                "region (-1, 1)^2"
            )
        return self

    def weight(self, l1: int, l2: int) -> float:
        """alpha^l1 q^l2 with the convention 0^0 = 1."""
        return float(self.alpha**l1 * self.q**l2)

    def __str__(self) -> str:
        return f"alpha={self.alpha!r}, q={self.q!r}"


@dataclass(frozen=True, eq=False)
class InvolutiveSpace:
    """
    C^d with a self-adjoint involution given by a real matrix J.

    Example:
        >>> space = InvolutiveSpace.basis_swap(2, [(1, 2)])
        >>> space.involute(np.array([1.0, 0.0]))
        array([0.+0.j, 1.+0.j])
    """

    d: int
    J: np.ndarray

    def __post_init__(self):
        if self.d < 1:
            raise ConstructionError(f"dimension must be positive, got {self.d}")
        matrix = np.asarray(self.J)
        if matrix.shape != (self.d, self.d):
            raise ConstructionError(
                f"involution has shape {matrix.shape}, expected ({self.d}, {self.d})"
            )
        if np.iscomplexobj(matrix):
            if np.max(np.abs(matrix.imag)) > get_config().construct_tol:
                raise ConstructionError("involution matrix must be real")
            matrix = matrix.real
        matrix = matrix.astype(np.float64)
        tol = get_config().construct_tol
        asym = float(np.max(np.abs(matrix - matrix.T)))
        if asym > tol:
            raise ConstructionError(
                f"involution is not symmetric (max |J - J^T| = {asym:.2e})"
            )
        square = float(np.max(np.abs(matrix @ matrix - np.eye(self.d))))
        if square > tol:
            raise ConstructionError(
                f"involution does not square to the identity (residual {square:.2e})"
            )
        matrix.setflags(write=False)
        object.__setattr__(self, "J", matrix)

    # ============= CONSTRUCTORS =============

    @classmethod
    def identity(cls, d: int) -> InvolutiveSpace:
        return cls(d, np.eye(d))

    @classmethod
    def basis_swap(
        cls, d: int, pairs: Iterable[Tuple[int, int]]
    ) -> InvolutiveSpace:
        """Swap e_i <-> e_j for each 1-based pair; other basis vectors are fixed."""
        matrix = np.eye(d)
        seen: set[int] = set()
        for i, j in pairs:
            if not (1 <= i <= d and 1 <= j <= d) or i == j:
                raise ConstructionError(f"invalid swap pair ({i}, {j}) for d={d}")
            if i in seen or j in seen:
                raise ConstructionError(f"index repeated in swap pairs: ({i}, {j})")
            seen.update((i, j))
            matrix[[i - 1, j - 1]] = matrix[[j - 1, i - 1]]
        return cls(d, matrix)

    @classmethod
    def diagonal(cls, signs: Sequence[int]) -> InvolutiveSpace:
        for s in signs:
            if s not in (1, -1):
                raise ConstructionError(f"diagonal involution entries must be +-1, got {s}")
        return cls(len(signs), np.diag(np.asarray(signs, dtype=np.float64)))

    # ============= OPERATIONS =============

    @property
    def key(self) -> Tuple[int, Tuple[float, ...]]:
        return self.d, tuple(float(v) for v in self.J.ravel())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, InvolutiveSpace) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def involute(self, x: Sequence[complex]) -> ComplexVector:
        """xbar = J x (complex-linear extension)."""
        return self.J @ self.vector(x)

    def vector(self, x: Sequence[complex]) -> ComplexVector:
        arr = np.asarray(x, dtype=np.complex128)
        if arr.shape != (self.d,):
            raise ArgumentError(f"vector has shape {arr.shape}, expected ({self.d},)")
        return arr

    def inner(self, x: Sequence[complex], y: Sequence[complex]) -> complex:
        """<x, y>, conjugate-linear in x."""
        return complex(np.vdot(self.vector(x), self.vector(y)))

    def bar_inner(self, x: Sequence[complex], y: Sequence[complex]) -> complex:
        """<x, ybar>."""
        return complex(np.vdot(self.vector(x), self.involute(y)))

    def eigenvector(self, sign: int, index: int = 0) -> ComplexVector:
        """A unit eigenvector of J with eigenvalue sign (+-1), orthonormal family."""
        values, vectors = np.linalg.eigh(self.J)
        chosen = [vectors[:, k] for k in range(self.d) if round(values[k]) == sign]
        if index >= len(chosen):
            raise ArgumentError(f"no eigenvector #{index} with eigenvalue {sign}")
        return chosen[index].astype(np.complex128)


def level_dim(d: int, n: int) -> int:
    return d**n


@dataclass(frozen=True, eq=False)
class FockVector:
    """
    Finitely supported vector of the algebraic Fock space, levels 0..m.

    levels[n] is the flattened coefficient tensor of shape (d,)*n; level 0 is
    the multiple of the vacuum.
    """

    d: int
    levels: Tuple[ComplexVector, ...]

    def __post_init__(self):
        if not self.levels:
            raise ConstructionError("a FockVector needs at least level 0")
        fixed = []
        for n, level in enumerate(self.levels):
            arr = np.asarray(level, dtype=np.complex128).ravel()
            if arr.shape != (level_dim(self.d, n),):
                raise ConstructionError(
                    f"level {n} has {arr.size} coefficients, expected {self.d ** n}"
                )
            fixed.append(arr)
        object.__setattr__(self, "levels", tuple(fixed))

    # ============= CONSTRUCTORS =============

    @classmethod
    def zeros(cls, d: int, max_degree: int = 0) -> FockVector:
        return cls(
            d,
            tuple(np.zeros(level_dim(d, n), np.complex128) for n in range(max_degree + 1)),
        )

    @classmethod
    def vacuum(cls, d: int, max_degree: int = 0) -> FockVector:
        levels = list(cls.zeros(d, max_degree).levels)
        levels[0] = np.ones(1, np.complex128)
        return cls(d, tuple(levels))

    @classmethod
    def from_level(cls, d: int, n: int, coefficients: Sequence[complex]) -> FockVector:
        levels = list(cls.zeros(d, n).levels)
        levels[n] = np.asarray(coefficients, dtype=np.complex128).ravel()
        return cls(d, tuple(levels))

    @classmethod
    def simple_tensor(cls, vectors: Sequence[Sequence[complex]]) -> FockVector:
        """x_1 (x) ... (x) x_n at level n; the empty product is the vacuum."""
        if not vectors:
            raise ArgumentError("simple_tensor needs at least one vector; use vacuum()")
        arrs = [np.asarray(v, dtype=np.complex128) for v in vectors]
        coefficients = arrs[0]
        for arr in arrs[1:]:
            coefficients = np.kron(coefficients, arr)
        return cls.from_level(arrs[0].size, len(arrs), coefficients)

    @classmethod
    def tensor_power(cls, x: Sequence[complex], n: int) -> FockVector:
        arr = np.asarray(x, dtype=np.complex128)
        if n == 0:
            return cls.vacuum(arr.size)
        return cls.simple_tensor([arr] * n)

    @classmethod
    def random(
        cls,
        rng: np.random.Generator,
        d: int,
        max_degree: int,
        real: bool = False,
    ) -> FockVector:
        levels = []
        for n in range(max_degree + 1):
            size = level_dim(d, n)
            coefficients = rng.standard_normal(size).astype(np.complex128)
            if not real:
                coefficients = coefficients + 1j * rng.standard_normal(size)
            levels.append(coefficients)
        return cls(d, tuple(levels))

    # ============= ACCESS =============

    @property
    def max_degree(self) -> int:
        return len(self.levels) - 1

    def level(self, n: int) -> ComplexVector:
        if 0 <= n <= self.max_degree:
            return self.levels[n]
        return np.zeros(level_dim(self.d, max(n, 0)), np.complex128)

    def tensor(self, n: int) -> np.ndarray:
        return self.level(n).reshape((self.d,) * n)

    def scalar(self) -> complex:
        """Coefficient of the vacuum."""
        return complex(self.levels[0][0])

    def pad_to(self, max_degree: int) -> FockVector:
        if max_degree <= self.max_degree:
            return self
        extra = FockVector.zeros(self.d, max_degree).levels[self.max_degree + 1 :]
        return FockVector(self.d, self.levels + extra)

    # ============= ARITHMETIC =============

    def _check(self, other: FockVector) -> None:
        if other.d != self.d:
            raise ArgumentError(f"dimension mismatch: {self.d} vs {other.d}")

    def __add__(self, other: FockVector) -> FockVector:
        self._check(other)
        top = max(self.max_degree, other.max_degree)
        a, b = self.pad_to(top), other.pad_to(top)
        return FockVector(self.d, tuple(x + y for x, y in zip(a.levels, b.levels)))

    def __sub__(self, other: FockVector) -> FockVector:
        return self + (-1.0) * other

    def __mul__(self, scalar: complex) -> FockVector:
        return FockVector(self.d, tuple(scalar * level for level in self.levels))

    __rmul__ = __mul__

    def __neg__(self) -> FockVector:
        return (-1.0) * self

    def max_abs_diff(self, other: FockVector) -> float:
        self._check(other)
        diff = self - other
        return max(float(np.max(np.abs(level))) for level in diff.levels)

    def inner00(self, other: FockVector) -> complex:
        """Undeformed inner product, conjugate-linear in self."""
        self._check(other)
        top = min(self.max_degree, other.max_degree)
        return complex(
            sum(np.vdot(self.levels[n], other.levels[n]) for n in range(top + 1))
        )


@dataclass(frozen=True, eq=False)
class LevelMap:
    """Dense matrix acting on the level-n tensors H^(x)n."""

    n: int
    matrix: ComplexMatrix

    def __post_init__(self):
        matrix = np.asarray(self.matrix, dtype=np.complex128)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ConstructionError(f"level map must be square, got {matrix.shape}")
        object.__setattr__(self, "matrix", matrix)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __matmul__(self, other: LevelMap) -> LevelMap:
        if other.n != self.n:
            raise ArgumentError(f"level mismatch: {self.n} vs {other.n}")
        return LevelMap(self.n, self.matrix @ other.matrix)

    def apply(self, coefficients: ComplexVector) -> ComplexVector:
        return self.matrix @ coefficients

    def max_abs_diff(self, other: LevelMap) -> float:
        return float(np.max(np.abs(self.matrix - other.matrix)))

    def is_hermitian(self, tol: Optional[float] = None) -> bool:
        limit = get_config().tolerance if tol is None else tol
        return float(np.max(np.abs(self.matrix - self.matrix.conj().T))) <= limit
