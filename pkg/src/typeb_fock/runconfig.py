"""
Run configuration shared by the CLI and the verification suites.

The involution is given in one of three named forms:
    identity          J = I
    swap:1-2,3-4      swap the listed 1-based basis pairs
    diag:1,-1         diagonal signs (the dimension is the number of signs)
"""

from __future__ import annotations

import logging
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from typeb_fock.config import get_config
from typeb_fock.errors import ArgumentError
from typeb_fock.fock import DeformParams, InvolutiveSpace
from typeb_fock.types import InvolutionKind, OutputFormat

logger = logging.getLogger(__name__)


def parse_involution(spec: str, d: int) -> InvolutiveSpace:
    """
    Example:
        >>> parse_involution("swap:1-2", 2).J
        array([[0., 1.],
               [1., 0.]])
    """
    text = spec.strip().lower()
    kind, _, body = text.partition(":")
    try:
        if kind == InvolutionKind.IDENTITY.value and not body:
            return InvolutiveSpace.identity(d)
        if kind == InvolutionKind.SWAP.value:
            pairs = []
            for chunk in filter(None, body.split(",")):
                left, _, right = chunk.partition("-")
                pairs.append((int(left), int(right)))
            return InvolutiveSpace.basis_swap(d, pairs)
        if kind == InvolutionKind.DIAGONAL.value:
            signs = [int(s) for s in body.split(",") if s]
            if len(signs) != d:
                raise ArgumentError(f"diag involution has {len(signs)} signs for d={d}")
            return InvolutiveSpace.diagonal(signs)
    except ValueError as exc:
        if isinstance(exc, ArgumentError):
            raise
        raise ArgumentError(f"cannot parse involution {spec!r}: {exc}") from exc
    raise ArgumentError(
        f"unknown involution {spec!r}; use identity, swap:i-j,... or diag:s1,s2,..."
    )


def parse_vector(text: str) -> List[float]:
    try:
        values = [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise ArgumentError(f"cannot parse vector {text!r}") from exc
    if not values:
        raise ArgumentError("empty vector")
    return values


class RunConfig(BaseModel):
    """Validated parameters of one CLI or verification run."""

    alpha: float = Field(default=0.0, description="Deformation parameter alpha")
    q: float = Field(default=0.0, description="Deformation parameter q")
    dim: int = Field(default=2, ge=1, description="Dimension d of H")
    involution: str = Field(default="identity", description="Named involution form")
    trunc: int = Field(default=4, ge=1, description="Truncation degree m")
    order: int = Field(default=8, ge=0, description="Largest moment order")
    grid: int = Field(default=200, ge=2, description="Density grid points")
    format: OutputFormat = OutputFormat.CSV
    seed: int = Field(default_factory=lambda: get_config().seed)
    tol: float = Field(default_factory=lambda: get_config().tolerance, gt=0)
    x: Optional[List[float]] = Field(default=None, description="Vector argument")

    model_config = ConfigDict(frozen=True)

    @field_validator("x", mode="before")
    @classmethod
    def _parse_x(cls, value):
        if isinstance(value, str):
            return parse_vector(value)
        return value

    @model_validator(mode="after")
    def _check(self) -> "RunConfig":
        DeformParams(alpha=self.alpha, q=self.q)
        parse_involution(self.involution, self.dim)
        if self.x is not None and len(self.x) != self.dim:
            raise ValueError(f"--x has {len(self.x)} entries for dim={self.dim}")
        if self.order > get_config().max_order:
            raise ValueError(
                f"order {self.order} exceeds the configured cap {get_config().max_order}"
            )
        return self

    def params(self) -> DeformParams:
        return DeformParams(alpha=self.alpha, q=self.q)

    def space(self) -> InvolutiveSpace:
        return parse_involution(self.involution, self.dim)

    def vector(self) -> np.ndarray:
        """--x, or a unit eigenvector of J for eigenvalue +1 (e_1 when none)."""
        if self.x is not None:
            return np.asarray(self.x, dtype=np.float64)
        space = self.space()
        try:
            return space.eigenvector(1).real
        except ArgumentError:
            return np.eye(self.dim)[0]

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)

    def meta(self) -> dict:
        return {
            "alpha": self.alpha,
            "q": self.q,
            "dim": self.dim,
            "involution": self.involution,
            "seed": self.seed,
        }
