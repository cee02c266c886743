"""
Creation, annihilation and Gaussian operators of type B.

B*(x) tensors x on the right. B(x), its adjoint in the deformed geometry, is
available by two independent routes:

    via_r:       B(x) = r(x) R^(n)                          on level n
    via_number:  B(x) = r_q(x) + alpha l_q(xbar) q^(N-1)

where r(x) contracts the last leg with x, r_q(x) contracts leg k with weight
q^(n-k) and l_q(y) contracts leg k with weight q^(k-1).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from typeb_fock.errors import ArgumentError
from typeb_fock.fock import DeformParams, FockVector, InvolutiveSpace, r_operator
from typeb_fock.types import AnnihilationRoute, ComplexVector, OperatorKind

logger = logging.getLogger(__name__)


# ============= LEVEL PRIMITIVES =============


def contract_leg(
    coefficients: ComplexVector, d: int, n: int, k: int, y: ComplexVector
) -> ComplexVector:
    """
    Contract leg k (1-based) of a level-n tensor with <y, .>.

    x_1 (x) ... (x) x_n  ->  <y, x_k> x_1 (x) ... x_k-hat ... (x) x_n
    """
    if not 1 <= k <= n:
        raise ArgumentError(f"leg {k} outside 1..{n}")
    blocks = np.asarray(coefficients).reshape(d ** (k - 1), d, d ** (n - k))
    return np.einsum("adb,d->ab", blocks, np.conj(y)).ravel()


def free_right_annihilate(x: ComplexVector, f: FockVector) -> FockVector:
    """r(x): contract the last leg; kills the vacuum."""
    if f.max_degree == 0:
        return FockVector.zeros(f.d, 0)
    levels = [
        contract_leg(f.levels[n], f.d, n, n, x) for n in range(1, f.max_degree + 1)
    ]
    return FockVector(f.d, tuple(levels))


def right_q_annihilate(x: ComplexVector, f: FockVector, q: float) -> FockVector:
    """r_q(x) = sum_k q^(n-k) <x, x_k> (leg k removed)."""
    if f.max_degree == 0:
        return FockVector.zeros(f.d, 0)
    levels = []
    for n in range(1, f.max_degree + 1):
        level = sum(
            q ** (n - k) * contract_leg(f.levels[n], f.d, n, k, x)
            for k in range(1, n + 1)
        )
        levels.append(level)
    return FockVector(f.d, tuple(levels))


def left_q_annihilate(y: ComplexVector, f: FockVector, q: float) -> FockVector:
    """l_q(y) = sum_k q^(k-1) <y, x_k> (leg k removed)."""
    if f.max_degree == 0:
        return FockVector.zeros(f.d, 0)
    levels = []
    for n in range(1, f.max_degree + 1):
        level = sum(
            q ** (k - 1) * contract_leg(f.levels[n], f.d, n, k, y)
            for k in range(1, n + 1)
        )
        levels.append(level)
    return FockVector(f.d, tuple(levels))


def q_power_of_number(f: FockVector, q: float, shift: int = 0) -> FockVector:
    """q^(N + shift): level n scaled by q^(n + shift); 0^0 = 1."""
    return FockVector(
        f.d,
        tuple(
            (q ** (n + shift) if n + shift >= 0 else 0.0) * level
            for n, level in enumerate(f.levels)
        ),
    )


def number_apply(f: FockVector) -> FockVector:
    return FockVector(f.d, tuple(n * level for n, level in enumerate(f.levels)))


def create_apply(x: ComplexVector, f: FockVector) -> FockVector:
    """B*(x): level n -> level n+1 by f_n (x) x."""
    levels = [np.zeros(1, np.complex128)]
    levels.extend(np.kron(level, x) for level in f.levels)
    return FockVector(f.d, tuple(levels))


def annihilate_via_r_apply(
    x: ComplexVector, f: FockVector, params: DeformParams, space: InvolutiveSpace
) -> FockVector:
    if f.max_degree == 0:
        return FockVector.zeros(f.d, 0)
    levels = []
    for n in range(1, f.max_degree + 1):
        moved = r_operator(n, params, space).matrix @ f.levels[n]
        levels.append(contract_leg(moved, f.d, n, n, x))
    return FockVector(f.d, tuple(levels))


def annihilate_via_number_apply(
    x: ComplexVector, f: FockVector, params: DeformParams, space: InvolutiveSpace
) -> FockVector:
    right = right_q_annihilate(x, f, params.q)
    if params.alpha == 0.0 or f.max_degree == 0:
        return right
    # q^(N-1) on level 0 meets l_q, which kills the vacuum anyway.
    shifted = q_power_of_number(f, params.q, shift=-1)
    left = left_q_annihilate(space.involute(x), shifted, params.q)
    return right + params.alpha * left


# ============= OPERATOR OBJECTS =============


@dataclass(frozen=True, eq=False)
class FockOperator:
    """
    An operator on finitely supported Fock vectors.

    shift is the change of max_degree (+1 create, -1 annihilate, +1 gauss).
    """

    kind: OperatorKind
    shift: int
    action: Callable[[FockVector], FockVector] = field(repr=False)
    x: Optional[ComplexVector] = field(default=None, repr=False)
    label: str = ""

    def __call__(self, f: FockVector) -> FockVector:
        return self.action(f)

    def then(self, other: FockOperator) -> FockOperator:
        """other o self (self acts first)."""
        return FockOperator(
            OperatorKind.CUSTOM,
            self.shift + other.shift,
            lambda f: other(self(f)),
            label=f"{other.label}{self.label}",
        )


def _vector(x: Sequence[complex], space: Optional[InvolutiveSpace]) -> ComplexVector:
    if space is not None:
        return space.vector(x)
    return np.asarray(x, dtype=np.complex128)


def create(x: Sequence[complex], space: Optional[InvolutiveSpace] = None) -> FockOperator:
    """B*(x), linear in x."""
    vec = _vector(x, space)
    return FockOperator(
        OperatorKind.CREATE, 1, lambda f: create_apply(vec, f), vec, "B*"
    )


def annihilate_via_R(
    x: Sequence[complex], params: DeformParams, space: InvolutiveSpace
) -> FockOperator:
    vec = _vector(x, space)
    return FockOperator(
        OperatorKind.ANNIHILATE,
        -1,
        lambda f: annihilate_via_r_apply(vec, f, params, space),
        vec,
        "B",
    )


def annihilate_via_number(
    x: Sequence[complex], params: DeformParams, space: InvolutiveSpace
) -> FockOperator:
    vec = _vector(x, space)
    return FockOperator(
        OperatorKind.ANNIHILATE,
        -1,
        lambda f: annihilate_via_number_apply(vec, f, params, space),
        vec,
        "B",
    )


def annihilate(
    x: Sequence[complex],
    params: DeformParams,
    space: InvolutiveSpace,
    route: AnnihilationRoute = AnnihilationRoute.VIA_NUMBER,
) -> FockOperator:
    if route is AnnihilationRoute.VIA_R:
        return annihilate_via_R(x, params, space)
    return annihilate_via_number(x, params, space)


def gaussian(
    x: Sequence[complex],
    params: DeformParams,
    space: InvolutiveSpace,
    route: AnnihilationRoute = AnnihilationRoute.VIA_NUMBER,
) -> FockOperator:
    """G(x) = B(x) + B*(x)."""
    up = create(x, space)
    down = annihilate(x, params, space, route)
    return FockOperator(
        OperatorKind.GAUSS, 1, lambda f: up(f) + down(f), up.x, "G"
    )


def number() -> FockOperator:
    return FockOperator(OperatorKind.NUMBER, 0, number_apply, label="N")
