"""
Partition statistics computed straight from their definitions.

W covers V when some i < j in W enclose every point of V. Two blocks cross
when they interleave as i < k < j < l.
"""

from __future__ import annotations

from typing import Optional, Sequence, Tuple

from typeb_fock.errors import ArgumentError
from typeb_fock.partitions.models import PartitionStats, SetPartition, TypeBPartition
from typeb_fock.types import Block


def covers(outer: Block, inner: Block) -> bool:
    """W covers V: exist i, j in W with i < k < j for every k in V."""
    if outer == inner or len(outer) < 2:
        return False
    return min(outer) < min(inner) and max(inner) < max(outer)


def crosses(v: Block, w: Block) -> bool:
    for i in v:
        for j in v:
            if j <= i:
                continue
            for k in w:
                for l in w:
                    if i < k < j < l or k < i < l < j:
                        return True
    return False


def crossings(partition: SetPartition) -> int:
    blocks = partition.blocks
    return sum(
        1
        for a in range(len(blocks))
        for b in range(a + 1, len(blocks))
        if crosses(blocks[a], blocks[b])
    )


def cover_count(partition: SetPartition, block: Block) -> int:
    """Cov(V; pi): blocks of pi covering V."""
    return sum(1 for w in partition.blocks if covers(w, block))


def singletons_left(partition: SetPartition, block: Block) -> int:
    """SL(V; pi): singletons {i} of pi with i left of every point of V."""
    return sum(
        1
        for s in partition.singletons
        if (s,) != block and all(s < j for j in block)
    )


def noncrossing_stats(partition: SetPartition) -> Tuple[int, int]:
    """
    (inner, outer) block counts of a noncrossing partition.

    Raises:
        ArgumentError: If the partition has a crossing
    """
    if crossings(partition):
        raise ArgumentError(f"{partition} is crossing")
    inner = sum(1 for b in partition.blocks if cover_count(partition, b) > 0)
    return inner, len(partition.blocks) - inner


def stats(
    partition: SetPartition, coloring: Optional[Sequence[int]] = None
) -> PartitionStats:
    """
    All statistics of (pi, f); f defaults to the all-positive coloring.

    Example:
        {{1},{2,3}} with {2,3} negative has NB = 1, SLNB = 1, InS = 0.
    """
    blocks = partition.blocks
    colors = tuple(coloring) if coloring is not None else (1,) * len(blocks)
    if len(colors) != len(blocks):
        raise ArgumentError(f"{len(colors)} colors for {len(blocks)} blocks")
    cr = crossings(partition)
    cov = tuple(cover_count(partition, b) for b in blocks)
    sl = tuple(singletons_left(partition, b) for b in blocks)
    ins = sum(
        1 for v in blocks if len(v) == 1 for w in blocks if covers(w, v)
    )
    negative = [
        v for v, c in zip(blocks, colors) if c == -1 and len(v) == 2
    ]
    innb = sum(1 for v in negative for w in blocks if covers(w, v))
    slnb = sum(
        1
        for w in negative
        for s in partition.singletons
        if all(s < j for j in w)
    )
    inn = out = None
    if cr == 0:
        inn = sum(1 for c in cov if c > 0)
        out = len(blocks) - inn
    return PartitionStats(
        cr=cr,
        ins=ins,
        nb=sum(1 for c in colors if c == -1),
        innb=innb,
        slnb=slnb,
        cov=cov,
        sl=sl,
        inn=inn,
        out=out,
    )


def type_b_stats(colored: TypeBPartition) -> PartitionStats:
    return stats(colored.partition, colored.coloring)
