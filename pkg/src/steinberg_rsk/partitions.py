"""Integer partitions, the dominance and Young orders, and shape arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate, zip_longest
from typing import Iterable, Iterator, Sequence


class IncomparableSizesError(ValueError):
    """Dominance was asked of partitions of different sizes."""


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    Reads past the last stored row return 0, so ``lam[i]`` is total.
    """

    parts: tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_unsorted(cls, rows: Iterable[int]) -> Partition:
        return cls(sorted((r for r in rows if r), reverse=True))

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("negative partition index")
        return self.parts[i] if i < len(self.parts) else 0

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "∅"

    @property
    def size(self) -> int:
        return sum(self.parts)

    def cells(self) -> list[tuple[int, int]]:
        """0-indexed (row, col) cells in reading order."""
        return [(r, c) for r, n in enumerate(self.parts) for c in range(n)]

    def to_json(self) -> list[int]:
        return list(self.parts)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> Partition:
        if not isinstance(data, (list, tuple)) or not all(isinstance(v, int) for v in data):
            raise ValueError(f"partition JSON must be an array of integers, got {data!r}")
        return cls(data)


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"composition parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]


EMPTY = Partition()


def _prefix_sums(p: Partition, length: int) -> list[int]:
    return list(accumulate(p[i] for i in range(length)))


def dominance_leq(lhs: Partition, rhs: Partition) -> bool:
    """Prefix-sum comparison; defined only within one size."""
    if lhs.size != rhs.size:
        raise IncomparableSizesError(
            f"dominance compares partitions of equal size, got |{lhs}|={lhs.size} "
            f"and |{rhs}|={rhs.size}"
        )
    n = max(len(lhs), len(rhs))
    return all(a <= b for a, b in zip(_prefix_sums(lhs, n), _prefix_sums(rhs, n)))


def young_leq(lhs: Partition, rhs: Partition) -> bool:
    """Containment of Young diagrams."""
    return len(lhs) <= len(rhs) and all(a <= rhs[i] for i, a in enumerate(lhs))


def add(lhs: Partition, rhs: Partition) -> Partition:
    return Partition(a + b for a, b in zip_longest(lhs, rhs, fillvalue=0))


def conjugate(p: Partition) -> Partition:
    if not p.parts:
        return EMPTY
    return Partition(sum(1 for r in p if r > c) for c in range(p[0]))


def is_column_strip(inner: Partition, outer: Partition) -> bool:
    """True iff ``outer/inner`` is a skew diagram with at most one box per row."""
    return young_leq(inner, outer) and all(outer[i] - inner[i] <= 1 for i in range(len(outer)))


def is_horizontal_strip(inner: Partition, outer: Partition) -> bool:
    """At most one box per column, i.e. interlacing rows."""
    return young_leq(inner, outer) and all(inner[i] >= outer[i + 1] for i in range(len(outer)))


def nilpotent_orbit_dim(p: Partition) -> int:
    """Dimension of the nilpotent orbit of Jordan type ``p``: N(N+1) - 2*sum(i*p_i)."""
    n = p.size
    return n * (n + 1) - 2 * sum(i * part for i, part in enumerate(p, start=1))


def removable_corners(p: Partition) -> list[int]:
    """Row indices whose last box can be removed leaving a partition."""
    return [i for i in range(len(p)) if p[i] > p[i + 1]]


def addable_rows(p: Partition) -> list[int]:
    return [i for i in range(len(p) + 1) if i == 0 or p[i - 1] > p[i]]


def remove_box(p: Partition, row: int) -> Partition:
    parts = list(p.parts)
    parts[row] -= 1
    return Partition(parts)


def add_box(p: Partition, row: int) -> Partition:
    parts = list(p.parts) + [0]
    parts[row] += 1
    return Partition(parts)


@lru_cache(maxsize=None)
def count_syt(p: Partition) -> int:
    """Number of standard tableaux of shape ``p``, by recursion over the Young lattice."""
    if p.size == 0:
        return 1
    return sum(count_syt(remove_box(p, r)) for r in removable_corners(p))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield EMPTY
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest.parts)
