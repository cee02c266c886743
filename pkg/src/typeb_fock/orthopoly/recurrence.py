"""
Three-term recurrence of the q-Meixner-Pollaczek type polynomials.

    t P_n = P_{n+1} + beta_n P_n + gamma_{n-1} P_{n-1},  P_{-1} = 0, P_0 = 1
    gamma_{n-1} = [n]_q (1 + alpha c q^(n-1))

Moments are read off the tridiagonal Jacobi matrix, in floats or exactly.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial import Polynomial
from scipy.linalg import eigh_tridiagonal

from typeb_fock.config import get_config
from typeb_fock.errors import ArgumentError, ResourceLimitError
from typeb_fock.qsymbols import q_number

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class JacobiParams:
    """
    Recurrence coefficients gamma_0, gamma_1, ... (and beta, zero here).

    radius and tail describe the limit gamma_n -> tail and the support
    [-radius, radius] when they are known.
    """

    gamma: Tuple = ()
    beta: Tuple = ()
    c: float = 1.0
    radius: Optional[float] = None
    tail: Optional[float] = None
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if not self.beta:
            object.__setattr__(self, "beta", (0,) * (len(self.gamma) + 1))

    @classmethod
    def from_gammas(cls, gammas: Sequence, label: str = "") -> JacobiParams:
        return cls(gamma=tuple(gammas), label=label)

    @classmethod
    def q_meixner_pollaczek(
        cls,
        alpha,
        q,
        c=1,
        size: int = 64,
        exact: bool = False,
    ) -> JacobiParams:
        """
        gamma_{n-1} = [n]_q (1 + alpha c q^(n-1)) for n = 1..size.

        q ranges over [-1, 1] so that the Bernoulli (q = -1) and normal (q = 1)
        limits are reachable.
        """
        if not -1 <= q <= 1:
            raise ArgumentError(f"q={q} outside [-1, 1]")
        if exact:
            alpha, q, c = Fraction(alpha), Fraction(q), Fraction(c)
        gammas = tuple(
            q_number(n, q) * (1 + alpha * c * q ** (n - 1)) for n in range(1, size + 1)
        )
        radius = tail = None
        if -1 < q < 1:
            tail = 1 / (1 - float(q))
            radius = 2 / math.sqrt(1 - float(q))
        return cls(
            gamma=gammas,
            c=c,
            radius=radius,
            tail=tail,
            label=f"qmp(alpha={alpha}, q={q}, c={c})",
        )

    def __len__(self) -> int:
        return len(self.gamma)


def _check_gammas(gammas: Sequence, count: int) -> None:
    if len(gammas) < count:
        raise ArgumentError(f"need {count} recurrence coefficients, have {len(gammas)}")
    for n, g in enumerate(gammas[:count]):
        if g < 0:
            raise ArgumentError(
                f"gamma_{n} = {g} is negative; parameters are inadmissible"
            )


def polynomials_from_jacobi(params: JacobiParams, N: int) -> List[Polynomial]:
    """Monic P_0 .. P_N from the recurrence."""
    if N < 0:
        raise ArgumentError(f"degree must be non-negative, got {N}")
    t = Polynomial([0.0, 1.0])
    polys = [Polynomial([1.0])]
    previous = Polynomial([0.0])
    for n in range(N):
        gamma_prev = float(params.gamma[n - 1]) if n >= 1 else 0.0
        nxt = (t - float(params.beta[n])) * polys[-1] - gamma_prev * previous
        previous = polys[-1]
        polys.append(nxt)
    return polys


def qmp_polynomials(alpha: float, q: float, c: float = 1.0, N: int = 5) -> List[Polynomial]:
    """
    Example:
        >>> qmp_polynomials(0.5, 0.0, N=2)[2].coef
        array([-1.5,  0. ,  1. ])
    """
    params = JacobiParams.q_meixner_pollaczek(alpha, q, c, size=max(N, 1))
    return polynomials_from_jacobi(params, N)


def moments_from_jacobi(
    params: JacobiParams, K: int, cap: Optional[int] = None
) -> List:
    """
    m_0 .. m_K as top-left entries of powers of the tridiagonal matrix with
    ones above and gamma_n below the diagonal.

    Exact when the coefficients are Fractions. m_K depends on gamma_0 ..
    gamma_{K//2 - 1} and beta_0 .. beta_{K//2}; fewer raise ArgumentError.
    """
    limit = get_config().max_order if cap is None else cap
    if K > limit:
        raise ResourceLimitError("moment order", K, limit)
    depth = K // 2
    _check_gammas(params.gamma, depth)
    if len(params.beta) < depth + 1:
        raise ArgumentError(
            f"need {depth + 1} diagonal coefficients, have {len(params.beta)}"
        )
    size = depth + 1
    # rows deeper than K//2 cannot return to row 0 within K steps
    gammas = list(params.gamma[:size]) + [0] * max(0, size - len(params.gamma))
    betas = list(params.beta[: size + 1]) + [0] * max(0, size + 1 - len(params.beta))
    zero = 0 * gammas[0] if gammas else 0
    row = [zero + 1] + [zero] * size
    moments = [row[0]]
    for _ in range(K):
        nxt = [zero] * (size + 1)
        for j in range(size + 1):
            value = betas[j] * row[j]
            if j >= 1:
                value += row[j - 1]
            if j + 1 <= size:
                value += row[j + 1] * gammas[j]
            nxt[j] = value
        row = nxt
        moments.append(row[0])
    return moments


def polynomial_norms(params: JacobiParams, N: int) -> List:
    """gamma_0 ... gamma_{n-1} = integral of P_n^2 for n = 0..N."""
    norms = [1 + 0 * (params.gamma[0] if params.gamma else 0)]
    for n in range(N):
        norms.append(norms[-1] * params.gamma[n])
    return norms


def gauss_quadrature(params: JacobiParams, n: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    n-point Gauss rule from the symmetric Jacobi matrix (off-diagonal sqrt(gamma)).

    Exact for polynomials of degree <= 2n-1.
    """
    if n < 1:
        raise ArgumentError(f"need at least one node, got {n}")
    _check_gammas(params.gamma, n - 1)
    diagonal = np.array([float(b) for b in params.beta[:n]], dtype=np.float64)
    off = np.sqrt(np.array([float(g) for g in params.gamma[: n - 1]], dtype=np.float64))
    if n == 1:
        return diagonal.copy(), np.ones(1)
    nodes, vectors = eigh_tridiagonal(diagonal, off)
    weights = vectors[0, :] ** 2
    return nodes, weights
