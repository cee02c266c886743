"""
Length bi-statistic (l1, l2) of signed permutations.

l1 counts pi_0 letters and l2 counts pi_i (i >= 1) letters in a reduced word.
The breadth-first search over the Cayley graph is the source of truth; the
closed form is a fast path validated against it.
"""

from __future__ import annotations

import logging
import threading
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Set, Tuple

from typeb_fock.coxeter.group import (
    GeneratorWord,
    SignedPermutation,
    check_rank,
    compose,
    generator,
    identity,
)
from typeb_fock.types import Letters, Window

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LengthStats:
    """Counts of pi_0 and of pi_i (i >= 1) letters in a reduced word."""

    l1: int
    l2: int

    @property
    def length(self) -> int:
        return self.l1 + self.l2


class LengthTable:
    """
    Breadth-first search table of (l1, l2) for every element of one rank.

    Neighbours are sigma o pi_i, so the path from the identity read left to
    right is a reduced word of the element.
    """

    def __init__(self, n: int):
        self.n = n
        self.stats: Dict[Window, LengthStats] = {}
        self._words: Dict[Window, List[Letters]] = {}
        self._generators = [generator(n, i) for i in range(n)]
        self._build()

    def _build(self) -> None:
        start = identity(self.n)
        self.stats[start.window] = LengthStats(0, 0)
        queue = deque([start])
        while queue:
            current = queue.popleft()
            here = self.stats[current.window]
            for i, gen in enumerate(self._generators):
                nxt = compose(current, gen)
                if nxt.window in self.stats:
                    continue
                self.stats[nxt.window] = (
                    LengthStats(here.l1 + 1, here.l2)
                    if i == 0
                    else LengthStats(here.l1, here.l2 + 1)
                )
                queue.append(nxt)
        logger.debug(f"Length table for rank {self.n}: {len(self.stats)} elements")

    def __len__(self) -> int:
        return len(self.stats)

    def __getitem__(self, element: SignedPermutation) -> LengthStats:
        return self.stats[element.window]

    def descents(self, element: SignedPermutation) -> List[int]:
        """Generators i with length(sigma o pi_i) < length(sigma)."""
        length = self[element].length
        return [
            i
            for i, gen in enumerate(self._generators)
            if self[compose(element, gen)].length < length
        ]

    def reduced_words(self, element: SignedPermutation) -> List[Letters]:
        """All reduced words of an element, by right-descent recursion."""
        cached = self._words.get(element.window)
        if cached is not None:
            return cached
        if element.is_identity:
            words: List[Letters] = [()]
        else:
            words = []
            for i in self.descents(element):
                shorter = compose(element, self._generators[i])
                words.extend(w + (i,) for w in self.reduced_words(shorter))
        self._words[element.window] = words
        return words


_tables: Dict[int, LengthTable] = {}
_tables_lock = threading.Lock()


def length_table(n: int, cap: Optional[int] = None) -> LengthTable:
    """Memoized per-rank table; built once under a lock."""
    table = _tables.get(n)
    if table is not None:
        return table
    check_rank(n, cap)
    with _tables_lock:
        table = _tables.get(n)
        if table is None:
            table = LengthTable(n)
            _tables[n] = table
    return table


def length_stats(element: SignedPermutation, cap: Optional[int] = None) -> LengthStats:
    """
    (l1, l2) of a signed permutation, read off the BFS table of its rank.

    Example:
        >>> length_stats(SignedPermutation(2, (1, -2)))
        LengthStats(l1=1, l2=2)
    """
    return length_table(element.n, cap)[element]


def length_stats_closed_form(element: SignedPermutation) -> LengthStats:
    """
    Fast path: l1 = #negative entries, length = inv(window) - sum of negative entries.
    """
    window = element.window
    inversions = sum(
        1
        for a in range(len(window))
        for b in range(a + 1, len(window))
        if window[a] > window[b]
    )
    negative_sum = sum(v for v in window if v < 0)
    l1 = element.negatives()
    return LengthStats(l1, inversions - negative_sum - l1)


def word_stats(word: GeneratorWord) -> LengthStats:
    """Letter counts of a word (equal to length_stats when the word is reduced)."""
    return LengthStats(word.l1, word.l2)


def reduced_word_stats(
    element: SignedPermutation, cap: Optional[int] = None
) -> Set[Tuple[int, int]]:
    """Distinct (l1, l2) pairs over all reduced words of an element."""
    table = length_table(element.n, cap)
    return {
        (sum(1 for i in w if i == 0), sum(1 for i in w if i != 0))
        for w in table.reduced_words(element)
    }
