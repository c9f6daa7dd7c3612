"""
Specorder - Simple Subsets
Subsets J of the simple reflections I, stored as bitmasks
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class SimpleSubset:
    """
    A subset J ⊆ I of simple reflections.

    Bit i of ``mask`` is set iff the 0-based generator i belongs to J.
    Ordering and iteration are by generator index.
    """

    mask: int = 0

    @classmethod
    def of(cls, indices: Iterable[int]) -> "SimpleSubset":
        """Build from 0-based generator indices."""
        mask = 0
        for i in indices:
            if i < 0:
                raise ValueError(f"negative generator index {i}")
            mask |= 1 << i
        return cls(mask)

    @classmethod
    def full(cls, rank: int) -> "SimpleSubset":
        """The whole of I for a system of the given rank."""
        return cls((1 << rank) - 1)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.mask.bit_length()) if self.mask >> i & 1)

    def __contains__(self, index: object) -> bool:
        return isinstance(index, int) and index >= 0 and bool(self.mask >> index & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __or__(self, other: "SimpleSubset") -> "SimpleSubset":
        return SimpleSubset(self.mask | other.mask)

    def __and__(self, other: "SimpleSubset") -> "SimpleSubset":
        return SimpleSubset(self.mask & other.mask)

    def __sub__(self, other: "SimpleSubset") -> "SimpleSubset":
        return SimpleSubset(self.mask & ~other.mask)

    def issubset(self, other: "SimpleSubset") -> bool:
        return self.mask & ~other.mask == 0

    def max_index(self) -> int:
        return self.mask.bit_length() - 1

    def one_based(self) -> list[int]:
        """Generator indices as printed by the CLI."""
        return [i + 1 for i in self.members]

    def __repr__(self) -> str:
        return "{" + ",".join(f"s{i + 1}" for i in self.members) + "}"


def all_subsets(rank: int) -> list[SimpleSubset]:
    """Every J ⊆ I, ordered by bitmask."""
    return [SimpleSubset(mask) for mask in range(1 << rank)]
