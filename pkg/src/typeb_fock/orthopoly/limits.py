"""
Degenerate and limiting laws of the q-Meixner-Pollaczek family.

q = -1: symmetric Bernoulli law on +-sqrt(1+alpha)
q =  1: normal law of variance 1+alpha
alpha = -q^(2 gamma), q -> 1: rescaled polynomials tend to the Meixner-type
recurrence t Q_n = Q_{n+1} + n(n+2gamma-1)/4 Q_{n-1}
"""

from __future__ import annotations

import logging
import math
from typing import Dict, List, Sequence, Tuple

import numpy as np
from numpy.polynomial import Polynomial
from pydantic import BaseModel, Field

from typeb_fock.errors import ArgumentError
from typeb_fock.orthopoly.recurrence import (
    JacobiParams,
    moments_from_jacobi,
    polynomials_from_jacobi,
)

logger = logging.getLogger(__name__)

MEIXNER_SCALINGS = {
    "2*sqrt(1-q)": lambda q: 2 * math.sqrt(1 - q),
    "sqrt(1-q)/2": lambda q: math.sqrt(1 - q) / 2,
}


def bernoulli_limit(alpha: float) -> Tuple[np.ndarray, np.ndarray]:
    """Atoms +-sqrt(1+alpha) with weight 1/2 each."""
    if alpha <= -1:
        raise ArgumentError(f"alpha must exceed -1, got {alpha}")
    atom = math.sqrt(1 + alpha)
    return np.array([-atom, atom]), np.array([0.5, 0.5])


def atom_moments(atoms: Sequence[float], weights: Sequence[float], K: int) -> List[float]:
    return [float(sum(w * a**k for a, w in zip(atoms, weights))) for k in range(K + 1)]


def gaussian_limit_moments(alpha: float, K: int) -> List[float]:
    """Moments of the centred normal law with variance 1+alpha."""
    if alpha <= -1:
        raise ArgumentError(f"alpha must exceed -1, got {alpha}")
    moments = []
    for k in range(K + 1):
        if k % 2:
            moments.append(0.0)
        else:
            double_factorial = math.prod(range(k - 1, 0, -2)) if k else 1
            moments.append(double_factorial * (1 + alpha) ** (k // 2))
    return moments


def jacobi_limit_moments(alpha: float, q: float, K: int) -> List[float]:
    """Moments from the recurrence at q, usable at the endpoints q = +-1."""
    params = JacobiParams.q_meixner_pollaczek(alpha, q, 1.0, size=K // 2 + 2)
    return [float(m) for m in moments_from_jacobi(params, K)]


def meixner_limit_reference(gamma_param: float, N: int) -> List[Polynomial]:
    """Q_0 .. Q_N from t Q_n = Q_{n+1} + n(n + 2 gamma - 1)/4 Q_{n-1}."""
    if gamma_param <= 0:
        raise ArgumentError(f"gamma must be positive, got {gamma_param}")
    gammas = [n * (n + 2 * gamma_param - 1) / 4 for n in range(1, N + 1)]
    return polynomials_from_jacobi(JacobiParams.from_gammas(gammas), N)


def meixner_limit_polys(
    gamma_param: float, q: float, N: int, scaling: str = "2*sqrt(1-q)"
) -> List[Polynomial]:
    """Q_n(t) = P_n(lambda t) / lambda^n for alpha = -q^(2 gamma)."""
    if gamma_param <= 0:
        raise ArgumentError(f"gamma must be positive, got {gamma_param}")
    if not 0 < q < 1:
        raise ArgumentError(f"q must lie in (0, 1), got {q}")
    if scaling not in MEIXNER_SCALINGS:
        raise ArgumentError(f"unknown scaling {scaling!r}")
    lam = MEIXNER_SCALINGS[scaling](q)
    alpha = -(q ** (2 * gamma_param))
    params = JacobiParams.q_meixner_pollaczek(alpha, q, 1.0, size=max(N, 1))
    polys = polynomials_from_jacobi(params, N)
    scaled = []
    for n, poly in enumerate(polys):
        coef = poly.coef * lam ** (np.arange(poly.coef.size) - n)
        scaled.append(Polynomial(coef))
    return scaled


def _coefficient_gap(a: Polynomial, b: Polynomial) -> float:
    size = max(a.coef.size, b.coef.size)
    pa = np.pad(a.coef, (0, size - a.coef.size))
    pb = np.pad(b.coef, (0, size - b.coef.size))
    return float(np.max(np.abs(pa - pb)))


class MeixnerLimitReport(BaseModel):
    """Coefficient gaps to the limit polynomials, per scaling and q."""

    gamma_param: float
    N: int
    gaps: Dict[str, Dict[float, float]] = Field(
        description="scaling -> q -> max coefficient gap over degrees <= N"
    )

    def converging(self, scaling: str) -> bool:
        values = [self.gaps[scaling][q] for q in sorted(self.gaps[scaling])]
        return all(b <= a for a, b in zip(values, values[1:]))


def meixner_limit_check(
    gamma_param: float,
    N: int,
    qs: Sequence[float] = (0.9, 0.99, 0.999),
) -> MeixnerLimitReport:
    reference = meixner_limit_reference(gamma_param, N)
    gaps: Dict[str, Dict[float, float]] = {}
    for scaling in MEIXNER_SCALINGS:
        gaps[scaling] = {}
        for q in qs:
            polys = meixner_limit_polys(gamma_param, q, N, scaling)
            gaps[scaling][q] = max(
                _coefficient_gap(p, r) for p, r in zip(polys, reference)
            )
    return MeixnerLimitReport(gamma_param=gamma_param, N=N, gaps=gaps)
