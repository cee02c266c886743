"""
Set partitions, their type-B colorings, creation/annihilation patterns and the
statistics attached to them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from typeb_fock.errors import ConstructionError
from typeb_fock.types import ONE, STAR, Block, Coloring, parse_epsilon


@dataclass(frozen=True)
class SetPartition:
    """
    Partition of [n] = {1, ..., n}, blocks sorted and ordered by minimum.

    Example:
        >>> SetPartition.of(4, [(2, 4), (1, 3)])
        SetPartition(n=4, blocks=((1, 3), (2, 4)))
    """

    n: int
    blocks: Tuple[Block, ...]

    def __post_init__(self):
        canonical = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=min))
        if any(len(b) == 0 for b in canonical):
            raise ConstructionError("blocks must be nonempty")
        points = sorted(p for b in canonical for p in b)
        if points != list(range(1, self.n + 1)):
            raise ConstructionError(
                f"blocks {canonical} do not partition 1..{self.n}"
            )
        object.__setattr__(self, "blocks", canonical)

    @classmethod
    def of(cls, n: int, blocks: Sequence[Sequence[int]]) -> SetPartition:
        return cls(n, tuple(tuple(b) for b in blocks))

    def __iter__(self) -> Iterator[Block]:
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def pairs(self) -> List[Block]:
        return [b for b in self.blocks if len(b) == 2]

    @property
    def singletons(self) -> List[int]:
        return [b[0] for b in self.blocks if len(b) == 1]

    @property
    def is_pair_partition(self) -> bool:
        return all(len(b) == 2 for b in self.blocks)

    def __str__(self) -> str:
        return "{" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"


@dataclass(frozen=True)
class TypeBPartition:
    """
    A partition with blocks colored +-1; coloring[k] colors blocks[k].

    Singletons are always colored +1.
    """

    partition: SetPartition
    coloring: Coloring

    def __post_init__(self):
        if len(self.coloring) != len(self.partition.blocks):
            raise ConstructionError(
                f"{len(self.coloring)} colors for {len(self.partition.blocks)} blocks"
            )
        for block, color in zip(self.partition.blocks, self.coloring):
            if color not in (1, -1):
                raise ConstructionError(f"block color must be +-1, got {color}")
            if len(block) == 1 and color != 1:
                raise ConstructionError(f"singleton {block} must be colored 1")

    @property
    def negative_blocks(self) -> List[Block]:
        return [b for b, c in zip(self.partition.blocks, self.coloring) if c == -1]

    def __str__(self) -> str:
        parts = []
        for block, color in zip(self.partition.blocks, self.coloring):
            mark = "-" if color == -1 else ""
            parts.append(mark + "{" + ",".join(map(str, block)) + "}")
        return "{" + ",".join(parts) + "}"


class EpsilonPattern(BaseModel):
    """A word in {1, *}: '*' creates, '1' annihilates."""

    letters: Tuple[str, ...]

    model_config = ConfigDict(frozen=True)

    @field_validator("letters", mode="before")
    @classmethod
    def _parse(cls, value: Union[str, Sequence[str]]) -> Tuple[str, ...]:
        return parse_epsilon(value)

    @classmethod
    def parse(cls, pattern: Union[str, Sequence[str]]) -> EpsilonPattern:
        return cls(letters=pattern)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(self.letters)

    @property
    def is_prefix_dominated(self) -> bool:
        """Every prefix has at least as many '*' as '1'."""
        height = 0
        for letter in self.letters:
            height += 1 if letter == STAR else -1
            if height < 0:
                return False
        return True

    @property
    def is_balanced(self) -> bool:
        return self.letters.count(STAR) == self.letters.count(ONE)

    @property
    def singleton_count(self) -> int:
        return self.letters.count(STAR) - self.letters.count(ONE)


class PartitionStats(BaseModel):
    """Statistics of a (colored) set partition; per-block tuples follow block order."""

    cr: int = Field(description="Crossings")
    ins: int = Field(description="(singleton, covering block) pairs")
    nb: int = Field(default=0, description="Negative blocks")
    innb: int = Field(default=0, description="(negative pair, covering block) pairs")
    slnb: int = Field(
        default=0, description="(negative pair, singleton to its left) pairs"
    )
    cov: Tuple[int, ...] = Field(description="Blocks covering each block")
    sl: Tuple[int, ...] = Field(description="Singletons left of each block")
    inn: Optional[int] = Field(default=None, description="Inner blocks (noncrossing)")
    out: Optional[int] = Field(default=None, description="Outer blocks (noncrossing)")

    model_config = ConfigDict(frozen=True)
