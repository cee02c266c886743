"""
Cauchy transform G(z) = integral of mu(dt) / (z - t) as the continued fraction

    G(z) = 1 / (z - gamma_0 / (z - gamma_1 / (z - ...)))

evaluated from the bottom up, optionally closed by the constant-tail
(square-root) terminator when gamma_n tends to a limit.
"""

from __future__ import annotations

import logging
from typing import Optional

import numpy as np

from typeb_fock.errors import ArgumentError, DomainError
from typeb_fock.orthopoly.recurrence import JacobiParams

logger = logging.getLogger(__name__)


def constant_tail(z: complex, gamma: float) -> complex:
    """
    Solution of g = 1 / (z - gamma g) behaving like 1/z at infinity.

    The product of principal square roots picks the branch with
    Im g < 0 for Im z > 0.
    """
    if gamma == 0:
        return 1 / z
    root = 2 * np.sqrt(complex(gamma))
    return (z - np.sqrt(z - root) * np.sqrt(z + root)) / (2 * gamma)


def cauchy_transform(
    z: complex,
    params: JacobiParams,
    depth: Optional[int] = None,
    terminator: bool = False,
) -> complex:
    """
    Raises:
        DomainError: If z is real and inside the support
    """
    z = complex(z)
    depth = len(params.gamma) if depth is None else depth
    if depth < 1:
        raise ArgumentError(f"depth must be at least 1, got {depth}")
    if depth > len(params.gamma):
        raise ArgumentError(
            f"depth {depth} exceeds the {len(params.gamma)} available coefficients"
        )
    if z.imag == 0 and (params.radius is None or abs(z.real) <= params.radius):
        raise DomainError(
            f"z={z.real} lies on the (possible) support; the continued fraction "
            "is ambiguous there",
            {"z": z.real, "radius": params.radius},
        )
    near = 0 < abs(z.imag) < 1e-8
    if near and params.radius is not None and abs(z.real) < params.radius:
        logger.warning(
            f"Continued fraction evaluated {abs(z.imag):.1e} above the support "
            f"at t={z.real}"
        )
    if terminator and params.tail is None:
        raise ArgumentError("terminator needs the limit of gamma_n")
    tail = constant_tail(z, params.tail) if terminator else 0j
    value = tail
    for n in range(depth - 1, -1, -1):
        value = 1 / (z - float(params.gamma[n]) * value)
    return value


def stieltjes_density(
    t: float,
    params: JacobiParams,
    eta: float = 1e-4,
    depth: Optional[int] = None,
    terminator: bool = True,
) -> float:
    """-(1/pi) Im G(t + i eta)."""
    if eta <= 0:
        raise ArgumentError(f"eta must be positive, got {eta}")
    close = terminator and params.tail is not None
    value = cauchy_transform(complex(t, eta), params, depth, close)
    return float(-value.imag / np.pi)
