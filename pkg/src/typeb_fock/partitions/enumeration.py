"""
Enumeration of pair partitions, singleton-or-pair partitions and their type-B
colorings.

Partitions compatible with a pattern eps are built left to right: a '*'
position becomes a singleton or opens a pair, a '1' position closes one of the
open pairs. Nothing outside the result is generated.
"""

from __future__ import annotations

import itertools
import logging
from typing import Iterable, Iterator, List, Optional, Sequence, Union

from typeb_fock.config import get_config
from typeb_fock.errors import ArgumentError, ResourceLimitError
from typeb_fock.partitions.models import EpsilonPattern, SetPartition, TypeBPartition
from typeb_fock.types import STAR, Block

logger = logging.getLogger(__name__)


def check_ground_set(n: int, cap: Optional[int] = None) -> None:
    limit = get_config().partition_cap if cap is None else cap
    if n < 0:
        raise ArgumentError(f"ground set size must be non-negative, got {n}")
    if n > limit:
        raise ResourceLimitError("ground set size", n, limit)


def _pairings(points: List[int]) -> Iterator[List[Block]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for k, partner in enumerate(rest):
        remaining = rest[:k] + rest[k + 1 :]
        for tail in _pairings(remaining):
            yield [(first, partner)] + tail


def enumerate_pair_partitions(
    n: int, cap: Optional[int] = None
) -> List[SetPartition]:
    """All (n-1)!! pair partitions of [n]; empty for odd n."""
    check_ground_set(n, cap)
    if n % 2:
        return []
    return [SetPartition(n, tuple(p)) for p in _pairings(list(range(1, n + 1)))]


def _involutions(points: List[int]) -> Iterator[List[Block]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for tail in _involutions(rest):
        yield [(first,)] + tail
    for k, partner in enumerate(rest):
        remaining = rest[:k] + rest[k + 1 :]
        for tail in _involutions(remaining):
            yield [(first, partner)] + tail


def enumerate_p12(n: int, cap: Optional[int] = None) -> List[SetPartition]:
    """Partitions of [n] into singletons and pairs."""
    check_ground_set(n, cap)
    return [SetPartition(n, tuple(p)) for p in _involutions(list(range(1, n + 1)))]


def _from_pattern(letters: Sequence[str], singletons: bool) -> Iterator[List[Block]]:
    n = len(letters)

    def walk(pos: int, open_: List[int], blocks: List[Block]) -> Iterator[List[Block]]:
        if pos > n:
            if not open_:
                yield list(blocks)
            return
        if letters[pos - 1] == STAR:
            if singletons:
                blocks.append((pos,))
                yield from walk(pos + 1, open_, blocks)
                blocks.pop()
            open_.append(pos)
            yield from walk(pos + 1, open_, blocks)
            open_.pop()
        else:
            for k, opener in enumerate(list(open_)):
                blocks.append((opener, pos))
                rest = open_[:k] + open_[k + 1 :]
                yield from walk(pos + 1, rest, blocks)
                blocks.pop()

    yield from walk(1, [], [])


def _pattern(eps: Union[str, Sequence[str], EpsilonPattern]) -> EpsilonPattern:
    return eps if isinstance(eps, EpsilonPattern) else EpsilonPattern.parse(eps)


def enumerate_p12_eps(
    eps: Union[str, Sequence[str], EpsilonPattern], cap: Optional[int] = None
) -> List[SetPartition]:
    """
    Partitions in P_{1,2} whose openers and singletons sit on '*' and whose
    closers sit on '1'.

    Example:
        >>> [str(p) for p in enumerate_p12_eps("*1")]
        ['{{1,2}}']
    """
    pattern = _pattern(eps)
    check_ground_set(len(pattern), cap)
    n = len(pattern)
    return [SetPartition(n, tuple(b)) for b in _from_pattern(pattern.letters, True)]


def enumerate_p2_eps(
    eps: Union[str, Sequence[str], EpsilonPattern], cap: Optional[int] = None
) -> List[SetPartition]:
    """Pair partitions compatible with eps; empty unless eps is balanced."""
    pattern = _pattern(eps)
    check_ground_set(len(pattern), cap)
    if not pattern.is_balanced:
        return []
    n = len(pattern)
    return [SetPartition(n, tuple(b)) for b in _from_pattern(pattern.letters, False)]


def _noncrossing(points: List[int]) -> Iterator[List[Block]]:
    if not points:
        yield []
        return
    first = points[0]
    for k in range(1, len(points), 2):
        inside, outside = points[1:k], points[k + 1 :]
        for left in _noncrossing(inside):
            for right in _noncrossing(outside):
                yield [(first, points[k])] + left + right


def enumerate_noncrossing_pairs(
    n: int, cap: Optional[int] = None
) -> List[SetPartition]:
    """NC_2(n), built directly; its size is the Catalan number C_{n/2}."""
    check_ground_set(n, cap)
    if n % 2:
        return []
    return [SetPartition(n, tuple(p)) for p in _noncrossing(list(range(1, n + 1)))]


def colorings(partition: SetPartition) -> Iterator[tuple]:
    """All colorings with singletons colored +1."""
    choices = [(1, -1) if len(b) == 2 else (1,) for b in partition.blocks]
    return itertools.product(*choices)


def enumerate_type_b(
    partitions: Iterable[SetPartition], pairs_only: bool = False
) -> List[TypeBPartition]:
    """
    Every admissible coloring of every partition.

    Raises:
        ArgumentError: If pairs_only and a partition has a singleton
    """
    result = []
    for partition in partitions:
        if pairs_only and not partition.is_pair_partition:
            raise ArgumentError(f"{partition} is not a pair partition")
        result.extend(TypeBPartition(partition, c) for c in colorings(partition))
    return result


def is_admissible_pattern(
    eps: Union[str, Sequence[str], EpsilonPattern], pairs_only: bool = False
) -> bool:
    """True iff P_{1,2;eps} (or P_{2;eps}) can be nonempty."""
    pattern = _pattern(eps)
    if not pattern.is_prefix_dominated:
        return False
    return pattern.is_balanced or not pairs_only
