"""typeb-fock - finite-dimensional (alpha,q)-Fock space of type B."""

from typeb_fock.config import FockConfig, get_config
from typeb_fock.fock import DeformParams, FockVector, InvolutiveSpace, inner_aq
from typeb_fock.operators import annihilate, create, gaussian, vacuum_moment
from typeb_fock.orthopoly import DensitySpec, JacobiParams, density
from typeb_fock.runconfig import RunConfig

__version__ = "0.1.0a1"
__all__ = [
    "DeformParams",
    "DensitySpec",
    "FockConfig",
    "FockVector",
    "InvolutiveSpace",
    "JacobiParams",
    "RunConfig",
    "annihilate",
    "create",
    "density",
    "gaussian",
    "get_config",
    "inner_aq",
    "vacuum_moment",
]
