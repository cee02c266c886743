"""
Vacuum expectations of words in B, B* and G.

Words are applied with x_1 acting first:
<Omega, G(x_k) ... G(x_1) Omega>.
"""

from __future__ import annotations

import logging
import math
from typing import Sequence

import numpy as np

from typeb_fock.errors import ArgumentError
from typeb_fock.fock import DeformParams, FockVector, InvolutiveSpace
from typeb_fock.operators.fock_ops import FockOperator, annihilate, create, gaussian
from typeb_fock.types import ONE, AnnihilationRoute, parse_epsilon

logger = logging.getLogger(__name__)


def _truncate(f: FockVector, top: int) -> FockVector:
    """Drop levels above top; they cannot return to the vacuum."""
    if f.max_degree <= top:
        return f
    return FockVector(f.d, f.levels[: top + 1])


def _run_word(ops: Sequence[FockOperator], d: int, keep_all: bool) -> FockVector:
    state = FockVector.vacuum(d)
    total = len(ops)
    for step, op in enumerate(ops, start=1):
        state = op(state)
        if not keep_all:
            state = _truncate(state, total - step)
    return state


def apply_epsilon_word(
    eps: Sequence[str] | str,
    vectors: Sequence[Sequence[complex]],
    params: DeformParams,
    space: InvolutiveSpace,
    route: AnnihilationRoute = AnnihilationRoute.VIA_NUMBER,
) -> FockVector:
    """B^eps(n)(x_n) ... B^eps(1)(x_1) Omega, with '*' = B* and '1' = B."""
    letters = parse_epsilon(eps)
    if len(letters) != len(vectors):
        raise ArgumentError(
            f"pattern of length {len(letters)} for {len(vectors)} vectors"
        )
    ops = [
        annihilate(x, params, space, route) if letter == ONE else create(x, space)
        for letter, x in zip(letters, vectors)
    ]
    return _run_word(ops, space.d, keep_all=True)


def mixed_vacuum_moment(
    eps: Sequence[str] | str,
    vectors: Sequence[Sequence[complex]],
    params: DeformParams,
    space: InvolutiveSpace,
    route: AnnihilationRoute = AnnihilationRoute.VIA_NUMBER,
) -> complex:
    """<Omega, B^eps(n)(x_n) ... B^eps(1)(x_1) Omega>_{alpha,q}."""
    return apply_epsilon_word(eps, vectors, params, space, route).scalar()


def vacuum_moment(
    word: Sequence[Sequence[complex]],
    params: DeformParams,
    space: InvolutiveSpace,
    route: AnnihilationRoute = AnnihilationRoute.VIA_NUMBER,
) -> complex:
    """
    <Omega, G(x_k) ... G(x_1) Omega>_{alpha,q}.

    Example:
        A unit self-dual x gives 1 + alpha for the word (x, x).
    """
    ops = [gaussian(x, params, space, route) for x in word]
    return _run_word(ops, space.d, keep_all=False).scalar()


def single_vector_moments(
    x: Sequence[complex],
    order: int,
    params: DeformParams,
    space: InvolutiveSpace,
    route: AnnihilationRoute = AnnihilationRoute.VIA_NUMBER,
) -> list[float]:
    """Real moments <Omega, G(x)^k Omega> for k = 0..order."""
    op = gaussian(x, params, space, route)
    state = FockVector.vacuum(space.d)
    moments = [1.0]
    for _ in range(order):
        state = op(state)
        moments.append(float(state.scalar().real))
    return moments


def cyclic_defect(
    word: Sequence[Sequence[complex]],
    params: DeformParams,
    space: InvolutiveSpace,
    route: AnnihilationRoute = AnnihilationRoute.VIA_NUMBER,
) -> complex:
    """phi(G(x_k)...G(x_1)) - phi(G(x_1)G(x_k)...G(x_2)); zero for a tracial state."""
    rotated = list(word[1:]) + [word[0]]
    return vacuum_moment(word, params, space, route) - vacuum_moment(
        rotated, params, space, route
    )


def trace_defect(
    params: DeformParams,
    s: int,
    t: int,
    route: AnnihilationRoute = AnnihilationRoute.VIA_NUMBER,
) -> float:
    """
    Cyclic defect of the word (sqrt2 e1, sqrt2 e1, sqrt2 e2, sqrt2 e2) on C^2 with
    e1, e2 eigenvectors of the involution for the eigenvalues s, t.

    Closed form: 4 t alpha (1 - q^2)(1 + s alpha).
    """
    if s not in (1, -1) or t not in (1, -1):
        raise ArgumentError(f"eigenvalues must be +-1, got s={s}, t={t}")
    space = InvolutiveSpace.diagonal([s, t])
    scale = math.sqrt(2.0)
    e1 = scale * np.array([1.0, 0.0])
    e2 = scale * np.array([0.0, 1.0])
    defect = cyclic_defect([e1, e1, e2, e2], params, space, route)
    return float(defect.real)


def trace_defect_closed_form(params: DeformParams, s: int, t: int) -> float:
    alpha, q = params.alpha, params.q
    return 4 * t * alpha * (1 - q * q) * (1 + s * alpha)
