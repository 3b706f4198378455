"""Partitions into distinct parts with a bounded largest part.

The ``zero_allowed`` family admits a single trailing zero part, which is how
the bottom row of a synchronized partition is modelled.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


class InvalidPartition(ValueError):
    pass


@dataclass(frozen=True)
class DistinctPartition:
    parts: tuple[int, ...] = ()
    zero_allowed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        validate_distinct(self.parts, self.zero_allowed)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    @property
    def has_zero(self) -> bool:
        return bool(self.parts) and self.parts[-1] == 0

    def to_json(self) -> dict:
        return {"parts": list(self.parts)}


def validate_distinct(parts: Sequence[int], zero_allowed: bool) -> None:
    lowest = 0 if zero_allowed else 1
    for a, b in zip(parts, parts[1:]):
        if a <= b:
            raise InvalidPartition(f"parts {tuple(parts)} are not strictly decreasing")
    if parts and parts[-1] < lowest:
        raise InvalidPartition(f"parts {tuple(parts)} must all be >= {lowest}")


def weight(p) -> int:
    parts = p.parts if isinstance(p, DistinctPartition) else p
    return sum(parts)


def graded_key(parts: tuple[int, ...]):
    return (sum(parts), parts)


def _subsets(max_part: int, zero_allowed: bool) -> list[tuple[int, ...]]:
    pool = list(range(max_part, -1 if zero_allowed else 0, -1))
    out = []
    for mask in range(1 << len(pool)):
        out.append(tuple(p for i, p in enumerate(pool) if mask >> i & 1))
    out.sort(key=graded_key)
    return out


def enumerate_distinct(max_part: int, zero_allowed: bool = False) -> Iterator[DistinctPartition]:
    """Every subset of {1..max_part} (plus 0 when allowed), weight then
    lexicographic order."""
    if max_part < 0:
        raise ValueError("max_part must be nonnegative")
    for parts in _subsets(max_part, zero_allowed):
        yield DistinctPartition(parts, zero_allowed)
