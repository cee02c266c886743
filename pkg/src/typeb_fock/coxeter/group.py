"""
Signed permutations: the hyperoctahedral group of rank n.

Elements are stored in window notation, window[k] = sigma(k+1); the values on
negative points follow from sigma(-k) = -sigma(k).
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from typeb_fock.config import get_config
from typeb_fock.errors import ArgumentError, ConstructionError, ResourceLimitError
from typeb_fock.types import Letters, Window

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SignedPermutation:
    """
    Element of the hyperoctahedral group in window notation.

    Example:
        >>> generator(2, 0).window
        (-1, 2)
        >>> compose(generator(2, 1), generator(2, 0)).window
        (-2, 1)
    """

    n: int
    window: Window

    def __post_init__(self):
        if self.n < 0:
            raise ConstructionError(f"rank must be non-negative, got {self.n}")
        if len(self.window) != self.n:
            raise ConstructionError(
                f"window has {len(self.window)} entries for rank {self.n}"
            )
        if sorted(abs(v) for v in self.window) != list(range(1, self.n + 1)):
            raise ConstructionError(
                f"window {self.window} is not a signed permutation of 1..{self.n}"
            )

    def __call__(self, k: int) -> int:
        """Evaluate sigma at a point of {+-1, ..., +-n}."""
        if k == 0 or abs(k) > self.n:
            raise ArgumentError(f"point {k} outside +-1..+-{self.n}")
        value = self.window[abs(k) - 1]
        return value if k > 0 else -value

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        return compose(self, other)

    def inverse(self) -> SignedPermutation:
        inv = [0] * self.n
        for position, value in enumerate(self.window, start=1):
            inv[abs(value) - 1] = position if value > 0 else -position
        return SignedPermutation(self.n, tuple(inv))

    @property
    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.n + 1))

    def negatives(self) -> int:
        """Number of negative window entries."""
        return sum(1 for v in self.window if v < 0)

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.window) + "]"


@dataclass(frozen=True)
class GeneratorWord:
    """A word pi_{i_1} ... pi_{i_k} in the Coxeter generators of rank n."""

    n: int
    letters: Letters = ()

    def __post_init__(self):
        for letter in self.letters:
            if not 0 <= letter < self.n:
                raise ConstructionError(
                    f"generator index {letter} outside 0..{self.n - 1}"
                )

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def l1(self) -> int:
        return sum(1 for letter in self.letters if letter == 0)

    @property
    def l2(self) -> int:
        return sum(1 for letter in self.letters if letter != 0)

    def evaluate(self) -> SignedPermutation:
        """Compose the generators left to right."""
        element = identity(self.n)
        for letter in self.letters:
            element = compose(element, generator(self.n, letter))
        return element

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return "".join(f"pi{letter}" for letter in self.letters)


def identity(n: int) -> SignedPermutation:
    return SignedPermutation(n, tuple(range(1, n + 1)))


def generator(n: int, i: int) -> SignedPermutation:
    """
    Coxeter generator pi_i of rank n.

    pi_0 flips the sign of 1; pi_i (i >= 1) swaps i and i+1.
    """
    if n < 1 or not 0 <= i <= n - 1:
        raise ArgumentError(f"generator index {i} outside 0..{n - 1} for rank {n}")
    window = list(range(1, n + 1))
    if i == 0:
        window[0] = -1
    else:
        window[i - 1], window[i] = window[i], window[i - 1]
    return SignedPermutation(n, tuple(window))


def compose(a: SignedPermutation, b: SignedPermutation) -> SignedPermutation:
    """(a o b)(k) = a(b(k)), with a(-j) = -a(j)."""
    if a.n != b.n:
        raise ArgumentError(f"rank mismatch: {a.n} vs {b.n}")
    window = []
    for value in b.window:
        image = a.window[abs(value) - 1]
        window.append(image if value > 0 else -image)
    return SignedPermutation(a.n, tuple(window))


def word(n: int, letters: Sequence[int]) -> GeneratorWord:
    return GeneratorWord(n, tuple(letters))


def embed(element: SignedPermutation, n: Optional[int] = None) -> SignedPermutation:
    """Embed Sigma(m) into Sigma(n) as the subgroup fixing m+1, ..., n."""
    target = element.n + 1 if n is None else n
    if target < element.n:
        raise ArgumentError(f"cannot embed rank {element.n} into rank {target}")
    return SignedPermutation(
        target, element.window + tuple(range(element.n + 1, target + 1))
    )


def restrict(element: SignedPermutation) -> SignedPermutation:
    """Inverse of embed for elements fixing their top point."""
    if element.n == 0 or element.window[-1] != element.n:
        raise ArgumentError(f"{element} does not fix {element.n}")
    return SignedPermutation(element.n - 1, element.window[:-1])


def group_order(n: int) -> int:
    order = 2**n
    for k in range(2, n + 1):
        order *= k
    return order


def check_rank(n: int, cap: Optional[int] = None) -> None:
    limit = get_config().rank_cap if cap is None else cap
    if n > limit:
        raise ResourceLimitError("rank", n, limit)


def enumerate_group(n: int, cap: Optional[int] = None) -> Iterator[SignedPermutation]:
    """
    Yield all 2^n n! signed permutations of rank n.

    Raises:
        ResourceLimitError: If n exceeds the rank cap
    """
    if n < 0:
        raise ArgumentError(f"rank must be non-negative, got {n}")
    check_rank(n, cap)
    logger.debug(f"Enumerating {group_order(n)} elements of rank {n}")
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield SignedPermutation(n, tuple(s * v for s, v in zip(signs, perm)))


def power(element: SignedPermutation, k: int) -> SignedPermutation:
    result = identity(element.n)
    for _ in range(k):
        result = compose(result, element)
    return result


def braid_relations(n: int) -> List[Tuple[str, bool]]:
    """
    Check the Coxeter relations of type B as composed maps.

    pi_i^2 = e, (pi_0 pi_1)^4 = e, (pi_i pi_{i+1})^3 = e for i >= 1 and
    (pi_i pi_j)^2 = e for |i - j| >= 2.
    """
    gens = [generator(n, i) for i in range(n)]
    results: List[Tuple[str, bool]] = []
    for i, g in enumerate(gens):
        results.append((f"pi{i}^2", power(g, 2).is_identity))
    for i in range(n):
        for j in range(i + 1, n):
            if i == 0 and j == 1:
                order = 4
            elif j == i + 1:
                order = 3
            else:
                order = 2
            product = compose(gens[i], gens[j])
            results.append(
                (f"(pi{i}pi{j})^{order}", power(product, order).is_identity)
            )
    return results
