"""
q-numbers, q-factorials and q-Pochhammer symbols.

All finite symbols use plain arithmetic so they accept floats and
fractions.Fraction alike; the infinite product is float only.
"""

import logging
from typing import Optional, TypeVar

from typeb_fock.config import get_config
from typeb_fock.errors import ArgumentError, DomainError

logger = logging.getLogger(__name__)

T = TypeVar("T")


def q_number(n: int, q):
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise ArgumentError(f"q-integer needs n >= 0, got {n}")
    total = 0 * q
    power = 1 + 0 * q
    for _ in range(n):
        total += power
        power *= q
    return total


def q_factorial(n: int, q):
    """[n]_q! = [1]_q [2]_q ... [n]_q."""
    result = 1 + 0 * q
    for k in range(1, n + 1):
        result *= q_number(k, q)
    return result


def q_pochhammer(a, q, n: int):
    """(a; q)_n = prod_{k<n} (1 - a q^k)."""
    if n < 0:
        raise ArgumentError(f"Pochhammer length must be >= 0, got {n}")
    result = 1 + 0 * a * q
    power = 1 + 0 * q
    for _ in range(n):
        result *= 1 - a * power
        power *= q
    return result


def q_pochhammer_inf(
    a: complex,
    q: float,
    eps: Optional[float] = None,
    max_terms: Optional[int] = None,
) -> complex:
    """
    (a; q)_inf truncated once |a| |q|^k < eps.

    Raises:
        DomainError: If |q| >= 1 or the product does not settle within max_terms
    """
    if abs(q) >= 1:
        raise DomainError(f"infinite q-product needs |q| < 1, got q={q}", {"q": q})
    config = get_config()
    eps = config.product_eps if eps is None else eps
    max_terms = config.max_product_terms if max_terms is None else max_terms
    result: complex = 1.0
    term = a
    for k in range(max_terms):
        if abs(term) < eps:
            return result
        result *= 1 - term
        term *= q
    raise DomainError(
        f"q-product did not converge in {max_terms} terms", {"a": a, "q": q}
    )


def product_terms(scale: float, q: float, eps: Optional[float] = None) -> int:
    """Number of factors k with |scale| |q|^k >= eps."""
    eps = get_config().product_eps if eps is None else eps
    if scale == 0 or q == 0:
        return 1
    count = 0
    value = abs(scale)
    while value >= eps:
        count += 1
        value *= abs(q)
        if count > get_config().max_product_terms:
            raise DomainError(f"too many product terms for q={q}", {"q": q})
    return max(count, 1)
