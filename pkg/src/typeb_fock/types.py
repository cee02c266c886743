"""
Type definitions and enumerations for typeb-fock.
Central location for all type aliases, enums, and constants.
"""

from enum import Enum
from fractions import Fraction
from typing import Tuple, Union

import numpy as np
from numpy.typing import NDArray

from typeb_fock.errors import ArgumentError

# Scalar Types
Real = float
Scalar = Union[float, complex]
ExactOrFloat = Union[Fraction, float, complex]

# Array Types
ComplexVector = NDArray[np.complex128]
ComplexMatrix = NDArray[np.complex128]
RealMatrix = NDArray[np.float64]

# Group Types
Window = Tuple[int, ...]
Letters = Tuple[int, ...]

# Partition Types
Block = Tuple[int, ...]
Coloring = Tuple[int, ...]

STAR = "*"
ONE = "1"


class EpsilonLetter(str, Enum):
    """Letters of a creation/annihilation pattern."""

    CREATE = STAR
    ANNIHILATE = ONE


class OperatorKind(str, Enum):
    """Kinds of operators on the truncated Fock space."""

    CREATE = "create"
    ANNIHILATE = "annihilate"
    GAUSS = "gauss"
    NUMBER = "number"
    CUSTOM = "custom"


class AnnihilationRoute(str, Enum):
    """Two independent ways of applying B(x)."""

    VIA_R = "via_r"  # r(x) R^(n)
    VIA_NUMBER = "via_number"  # r_q(x) + alpha l_q(xbar) q^(N-1)


class InvolutionKind(str, Enum):
    """Named involution forms accepted by configuration and CLI."""

    IDENTITY = "identity"
    SWAP = "swap"
    DIAGONAL = "diag"


class OutputFormat(str, Enum):
    """CLI output formats."""

    CSV = "csv"
    JSON = "json"


class VerifySuite(str, Enum):
    """Verification suites runnable from the CLI."""

    ALL = "all"
    GROUP = "group"
    FOCK = "fock"
    OPERATORS = "operators"
    PARTITIONS = "partitions"
    ORTHOPOLY = "orthopoly"


class NormCase(int, Enum):
    """Parameter regimes of the creation-operator norm theorem."""

    NONPOSITIVE_Q_NONNEG_A = 1
    NONPOSITIVE_Q_NEG_A = 2
    SMALL_ALPHA = 3
    LARGE_A = 4
    OTHERWISE = 5

    @property
    def is_exact(self) -> bool:
        return self in (NormCase.NONPOSITIVE_Q_NONNEG_A, NormCase.SMALL_ALPHA)


def parse_epsilon(pattern: Union[str, Tuple[str, ...], list]) -> Tuple[str, ...]:
    """
    Normalize an epsilon pattern to a tuple of '*' / '1' letters.

    Accepts "*1*1", ("*", "1"), or EpsilonLetter members.
    """
    letters = tuple(
        letter.value if isinstance(letter, EpsilonLetter) else str(letter)
        for letter in pattern
    )
    for letter in letters:
        if letter not in (STAR, ONE):
            raise ArgumentError(f"Invalid epsilon letter {letter!r}; use '*' or '1'")
    return letters
