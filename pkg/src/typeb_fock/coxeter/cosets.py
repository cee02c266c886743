"""
Minimal right coset representatives of Sigma(n-1) in Sigma(n).

w(k) is the prefix of length k of pi_{n-1} ... pi_1 pi_0 pi_1 ... pi_{n-1};
every sigma factors uniquely as sigma = sigma' w(k) with sigma' fixing n.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import List, Tuple

from typeb_fock.coxeter.group import (
    GeneratorWord,
    SignedPermutation,
    compose,
    restrict,
)
from typeb_fock.errors import ArgumentError
from typeb_fock.types import Letters

logger = logging.getLogger(__name__)


def stumbo_letters(n: int) -> Letters:
    """The full word pi_{n-1} ... pi_1 pi_0 pi_1 ... pi_{n-1} (2n-1 letters)."""
    down = tuple(range(n - 1, -1, -1))
    return down + tuple(range(1, n))


def stumbo_word(n: int, k: int) -> GeneratorWord:
    if not 0 <= k <= 2 * n - 1:
        raise ArgumentError(f"representative index {k} outside 0..{2 * n - 1}")
    return GeneratorWord(n, stumbo_letters(n)[:k])


def stumbo_reps(n: int) -> List[GeneratorWord]:
    """
    The 2n representatives w(0), ..., w(2n-1).

    Example:
        >>> [str(w) for w in stumbo_reps(2)]
        ['e', 'pi1', 'pi1pi0', 'pi1pi0pi1']
    """
    if n < 1:
        raise ArgumentError(f"rank must be at least 1, got {n}")
    return [stumbo_word(n, k) for k in range(2 * n)]


@lru_cache(maxsize=None)
def _rep_inverses(n: int) -> Tuple[SignedPermutation, ...]:
    return tuple(w.evaluate().inverse() for w in stumbo_reps(n))


def coset_decompose(element: SignedPermutation) -> Tuple[SignedPermutation, int]:
    """
    Split sigma = embed(sigma') o w(k) with sigma' of rank n-1.

    Rank 1 decomposes against the trivial group of rank 0.
    """
    n = element.n
    if n < 1:
        raise ArgumentError("rank 0 has no coset decomposition")
    for k, rep_inverse in enumerate(_rep_inverses(n)):
        candidate = compose(element, rep_inverse)
        if candidate.window[-1] == n:
            return restrict(candidate), k
    raise AssertionError(f"no coset representative found for {element}")

