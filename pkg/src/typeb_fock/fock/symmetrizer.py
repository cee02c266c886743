"""
The operators P^(n) and R^(n) on H^(x)n as explicit matrices.

P^(n) = sum over Sigma(n) of alpha^l1 q^l2 sigma, built either directly from
the group or recursively as P^(n) = (P^(n-1) (x) I) R^(n), where R^(n) sums the
2n minimal coset representatives w(k) with weights from their letter counts.
"""

from __future__ import annotations

import itertools
import logging
import threading
from collections import OrderedDict
from dataclasses import dataclass
from typing import Callable, Hashable, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field

from typeb_fock.config import get_config
from typeb_fock.coxeter import enumerate_group, length_stats, stumbo_reps
from typeb_fock.errors import ArgumentError, DomainError
from typeb_fock.fock.action import sigma_action
from typeb_fock.fock.space import DeformParams, InvolutiveSpace, LevelMap, level_dim
from typeb_fock.qsymbols import q_number

logger = logging.getLogger(__name__)


class PositivityReport(BaseModel):
    """Spectrum summary of the Hermitian matrix P^(n)."""

    n: int = Field(description="Tensor level")
    dimension: int = Field(description="d^n")
    min_eigenvalue: float
    max_eigenvalue: float
    kernel_dim: int = Field(description="Eigenvalues at or below the kernel tolerance")

    @property
    def is_positive(self) -> bool:
        return self.kernel_dim == 0 and self.min_eigenvalue > 0


@dataclass(frozen=True, eq=False)
class LevelSqrt:
    """Symmetric square root S = P^(1/2) of one level and its inverse."""

    n: int
    sqrt: np.ndarray
    inv_sqrt: np.ndarray


# ============= CACHE =============

# Least recently used entries are evicted once FockConfig.cache_size is reached.
_cache: "OrderedDict[Hashable, object]" = OrderedDict()
_cache_lock = threading.Lock()


def _cached(key: Hashable, build: Callable[[], object]) -> object:
    with _cache_lock:
        value = _cache.get(key)
        if value is not None:
            _cache.move_to_end(key)
            return value
    value = build()
    limit = get_config().cache_size
    if limit == 0:
        return value
    with _cache_lock:
        value = _cache.setdefault(key, value)
        _cache.move_to_end(key)
        while len(_cache) > limit:
            evicted, _ = _cache.popitem(last=False)
            logger.debug(f"Evicted {evicted[:2]} from the symmetrizer cache")
    return value


def cache_info() -> Tuple[int, int]:
    """(entries, capacity) of the symmetrizer cache."""
    with _cache_lock:
        return len(_cache), get_config().cache_size


def clear_cache() -> None:
    with _cache_lock:
        _cache.clear()


def _key(kind: str, n: int, params: DeformParams, space: InvolutiveSpace) -> Hashable:
    return kind, n, params.alpha, params.q, space.key


# ============= OPERATORS =============


def p_operator_direct(
    n: int,
    params: DeformParams,
    space: InvolutiveSpace,
    cap: Optional[int] = None,
) -> LevelMap:
    """
    P^(n) summed over all 2^n n! group elements.

    Raises:
        ResourceLimitError: If n exceeds the rank cap
    """
    if n < 0:
        raise ArgumentError(f"level must be non-negative, got {n}")
    if n == 0:
        return LevelMap(0, np.ones((1, 1), np.complex128))
    total = np.zeros((level_dim(space.d, n),) * 2, np.complex128)
    for element in enumerate_group(n, cap):
        stats = length_stats(element, cap)
        weight = params.weight(stats.l1, stats.l2)
        if weight != 0.0:
            total += weight * sigma_action(element, n, space).matrix
    return LevelMap(n, total)


def r_operator(n: int, params: DeformParams, space: InvolutiveSpace) -> LevelMap:
    """
    R^(n) = sum_k alpha^l1(w(k)) q^l2(w(k)) w(k) over the coset representatives.

    Example:
        n = 1 gives I + alpha J.
    """
    if n < 1:
        raise ArgumentError(f"R^(n) needs n >= 1, got {n}")

    def build() -> LevelMap:
        total = np.zeros((level_dim(space.d, n),) * 2, np.complex128)
        for rep in stumbo_reps(n):
            weight = params.weight(rep.l1, rep.l2)
            if weight != 0.0:
                total += weight * sigma_action(rep.evaluate(), n, space).matrix
        return LevelMap(n, total)

    return _cached(_key("R", n, params, space), build)  # type: ignore[return-value]


def p_operator_recursive(
    n: int, params: DeformParams, space: InvolutiveSpace
) -> LevelMap:
    """P^(n) = (P^(n-1) (x) I_d) R^(n), starting from P^(0) = 1."""
    if n < 0:
        raise ArgumentError(f"level must be non-negative, got {n}")
    if n == 0:
        return LevelMap(0, np.ones((1, 1), np.complex128))

    def build() -> LevelMap:
        logger.debug(f"Building P^({n}) for {params}, d={space.d}")
        lower = p_operator_recursive(n - 1, params, space).matrix
        lifted = np.kron(lower, np.eye(space.d))
        return LevelMap(n, lifted @ r_operator(n, params, space).matrix)

    return _cached(_key("P", n, params, space), build)  # type: ignore[return-value]


def r_operator_bound(n: int, params: DeformParams) -> float:
    """(1 + |alpha| |q|^(n-1)) [n]_|q|, an upper bound for the norm of R^(n)."""
    return (1 + abs(params.alpha) * abs(params.q) ** (n - 1)) * q_number(
        n, abs(params.q)
    )


def q_symmetrizer_type_a(n: int, q: float, space: InvolutiveSpace) -> LevelMap:
    """
    sum over S(n) of q^inv(perm) times the leg permutation, coded without the
    signed-permutation machinery.
    """
    d = space.d
    size = level_dim(d, n)
    if n == 0:
        return LevelMap(0, np.ones((1, 1), np.complex128))
    basis = np.eye(size, dtype=np.complex128).reshape((d,) * n + (size,))
    total = np.zeros((size, size), np.complex128)
    for perm in itertools.permutations(range(n)):
        inversions = sum(
            1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b]
        )
        # leg j moves to leg perm[j]
        axes = [0] * n
        for j, target in enumerate(perm):
            axes[target] = j
        moved = np.transpose(basis, axes + [n]).reshape(size, size)
        total += q**inversions * moved
    return LevelMap(n, total)


# ============= SPECTRAL DATA =============


def _eigh(
    n: int, params: DeformParams, space: InvolutiveSpace
) -> Tuple[np.ndarray, np.ndarray]:
    def build() -> Tuple[np.ndarray, np.ndarray]:
        matrix = p_operator_recursive(n, params, space).matrix
        hermitian = 0.5 * (matrix + matrix.conj().T)
        return np.linalg.eigh(hermitian)

    return _cached(_key("eigh", n, params, space), build)  # type: ignore[return-value]


def positivity_report(
    n: int,
    params: DeformParams,
    space: InvolutiveSpace,
    kernel_tol: Optional[float] = None,
) -> PositivityReport:
    tol = get_config().kernel_tol if kernel_tol is None else kernel_tol
    values, _ = _eigh(n, params, space)
    return PositivityReport(
        n=n,
        dimension=level_dim(space.d, n),
        min_eigenvalue=float(values[0]),
        max_eigenvalue=float(values[-1]),
        kernel_dim=int(np.sum(values <= tol)),
    )


def level_sqrt(n: int, params: DeformParams, space: InvolutiveSpace) -> LevelSqrt:
    """
    P^(n)^(1/2) and its inverse from the eigendecomposition.

    Raises:
        DomainError: If P^(n) is not strictly positive
    """

    def build() -> LevelSqrt:
        values, vectors = _eigh(n, params, space)
        if values[0] <= get_config().kernel_tol:
            raise DomainError(
                f"P^({n}) is not positive definite (min eigenvalue {values[0]:.3e})",
                {"n": n, "alpha": params.alpha, "q": params.q},
            )
        root = np.sqrt(values)
        adjoint = vectors.conj().T
        return LevelSqrt(
            n,
            (vectors * root) @ adjoint,
            (vectors / root) @ adjoint,
        )

    return _cached(_key("sqrt", n, params, space), build)  # type: ignore[return-value]
