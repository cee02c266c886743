"""
Closed-form density of the q-Meixner-Pollaczek law (unit self-dual vector).

With x = t sqrt(1-q) / 2 and the pair products

    D_b(t) = prod_k (1 + b q^(2k))^2 - 4 b x^2 q^(2k)

(the product of the factors for +sqrt(b) and -sqrt(b), real for every sign
of b), the density on |t| < 2/sqrt(1-q) is

    (q;q)_inf (-alpha;q)_inf D_1(t) D_q(t)
    / (2 pi sqrt(4/(1-q) - t^2) D_alpha(t)).
"""

from __future__ import annotations

import logging
import math
import warnings
from typing import Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy import integrate

from typeb_fock.config import get_config
from typeb_fock.errors import ArgumentError, DomainError
from typeb_fock.orthopoly.recurrence import JacobiParams, polynomials_from_jacobi
from typeb_fock.qsymbols import product_terms, q_pochhammer_inf

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]


class DensitySpec(BaseModel):
    """Parameters of the closed-form density."""

    alpha: float = Field(description="Deformation of the involution term")
    q: float = Field(description="Deformation parameter, |q| < 1")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check(self) -> "DensitySpec":
        if not -1.0 < self.q < 1.0:
            raise ValueError(f"density needs |q| < 1, got q={self.q}")
        if self.alpha <= -1.0:
            raise ValueError(f"density needs alpha > -1, got alpha={self.alpha}")
        return self

    @property
    def support_radius(self) -> float:
        return 2.0 / math.sqrt(1.0 - self.q)

    @property
    def terms(self) -> int:
        """Factors kept in the pair products, |q|^(2k) >= product_eps."""
        return product_terms(1.0, self.q * self.q)

    def jacobi(self, size: int = 64) -> JacobiParams:
        return JacobiParams.q_meixner_pollaczek(self.alpha, self.q, 1.0, size)


def pair_factor(t: ArrayLike, b: float, q: float, k: int) -> ArrayLike:
    """(1 + b q^(2k))^2 - b t^2 (1-q) q^(2k)."""
    q2k = q ** (2 * k)
    return (1 + b * q2k) ** 2 - b * np.square(t) * (1 - q) * q2k


def pair_factor_complex(t: float, b: float, q: float, k: int) -> complex:
    """The same factor as the product over the two complex roots +-sqrt(b)."""
    root = np.sqrt(complex(b))
    x = t * math.sqrt(1 - q) / 2
    qk = q**k
    q2k = q ** (2 * k)
    return complex(
        (1 - 2 * root * x * qk + root * root * q2k)
        * (1 + 2 * root * x * qk + root * root * q2k)
    )


def _pair_product(t: np.ndarray, b: float, q: float, terms: int) -> np.ndarray:
    ks = np.arange(terms)
    q2k = q ** (2 * ks)
    factors = (1 + b * q2k) ** 2 - b * np.outer(np.square(t), (1 - q) * q2k)
    return np.prod(factors, axis=-1)


def density(t: ArrayLike, spec: DensitySpec) -> ArrayLike:
    """
    Density value(s); zero outside the open support.

    Raises:
        DomainError: If alpha > 1 (the law has atoms off this formula) or a
            denominator factor is non-positive
    """
    if spec.alpha > 1.0:
        raise DomainError(
            f"alpha={spec.alpha} > 1: the law has atoms outside the absolutely "
            "continuous part",
            {"alpha": spec.alpha},
        )
    scalar = np.ndim(t) == 0
    ts = np.atleast_1d(np.asarray(t, dtype=np.float64))
    radius = spec.support_radius
    inside = np.abs(ts) < radius
    out = np.zeros_like(ts)
    if np.any(inside):
        tin = ts[inside]
        alpha, q = spec.alpha, spec.q
        terms = spec.terms
        ks = np.arange(terms)
        q2k = q ** (2 * ks)
        denom_factors = (1 + alpha * q2k) ** 2 - alpha * np.outer(
            np.square(tin), (1 - q) * q2k
        )
        if np.any(denom_factors <= 0):
            k = int(np.nonzero(np.any(denom_factors <= 0, axis=0))[0][0])
            raise DomainError(
                f"denominator factor k={k} vanishes on the support",
                {"k": k, "alpha": alpha, "q": q},
            )
        constant = q_pochhammer_inf(q, q) * q_pochhammer_inf(-alpha, q)
        numerator = _pair_product(tin, 1.0, q, terms) * _pair_product(tin, q, q, terms)
        edge = 2 * math.pi * np.sqrt(4.0 / (1.0 - q) - np.square(tin))
        denominator = edge * np.prod(denom_factors, axis=-1)
        out[inside] = constant.real * numerator / denominator
    return float(out[0]) if scalar else out


def free_meixner_density(t: ArrayLike, alpha: float) -> ArrayLike:
    """q = 0: (1+alpha) sqrt(4-t^2) / (2 pi ((1+alpha)^2 - alpha t^2)) on |t| < 2."""
    if alpha <= -1.0:
        raise ArgumentError(f"alpha must exceed -1, got {alpha}")
    ts = np.asarray(t, dtype=np.float64)
    inside = np.abs(ts) < 2.0
    root = np.sqrt(np.where(inside, 4.0 - np.square(ts), 0.0))
    value = (1 + alpha) * root / (
        2 * math.pi * ((1 + alpha) ** 2 - alpha * np.square(ts))
    )
    result = np.where(inside, value, 0.0)
    return float(result) if np.ndim(t) == 0 else result


def _pieces(q: float) -> int:
    """Subintervals of [0, pi]; the mass narrows around pi/2 like sqrt(1-q)."""
    return max(4, math.ceil(4 / math.sqrt(1.0 - abs(q))))


def _integrate(weight, spec: DensitySpec) -> float:
    """
    Integral of weight(t) density(t) over the support, with t = R cos(theta).

    The theta range is split into equal pieces integrated separately; a
    quadrature that still reports trouble is logged, not raised.
    """
    radius = spec.support_radius

    def integrand(theta: float) -> float:
        t = radius * math.cos(theta)
        return weight(t) * density(t, spec) * radius * math.sin(theta)

    edges = np.linspace(0.0, math.pi, _pieces(spec.q) + 1)
    value = error = 0.0
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", integrate.IntegrationWarning)
        for lo, hi in zip(edges[:-1], edges[1:]):
            part, part_error = integrate.quad(
                integrand, lo, hi, limit=200, epsabs=1e-12, epsrel=1e-10
            )
            value += part
            error += part_error
    for item in caught:
        if issubclass(item.category, integrate.IntegrationWarning):
            logger.warning(f"Quadrature for {spec} is unreliable: {item.message}")
        else:
            warnings.warn_explicit(item.message, item.category, item.filename, item.lineno)
    logger.debug(f"Quadrature for {spec}: {value} (error estimate {error:.1e})")
    return float(value)


def density_moment(k: int, spec: DensitySpec) -> float:
    if k < 0:
        raise ArgumentError(f"moment order must be non-negative, got {k}")
    return _integrate(lambda t: t**k, spec)


def density_mass(spec: DensitySpec) -> float:
    return density_moment(0, spec)


def inner_product_integral(m: int, n: int, spec: DensitySpec) -> float:
    """Integral of P_m P_n against the density."""
    polys = polynomials_from_jacobi(spec.jacobi(max(m, n) + 1), max(m, n))
    pm, pn = polys[m], polys[n]
    return _integrate(lambda t: float(pm(t) * pn(t)), spec)


def density_curve(spec: DensitySpec, points: int) -> tuple:
    """Evenly spaced interior grid over the open support and the density on it."""
    if points < 2:
        raise ArgumentError(f"need at least 2 grid points, got {points}")
    radius = spec.support_radius
    step = 2 * radius / (points + 1)
    ts = -radius + step * np.arange(1, points + 1)
    return ts, density(ts, spec)
