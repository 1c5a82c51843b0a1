"""Row-standard tableaux stored as chains of partitions.

A tableau of content ``(a_1, ..., a_n)`` is a chain ``T(1) < ... < T(n)`` in the
Young lattice whose successive skew pieces are column strips of sizes ``a_i``.
The filling view labels each box of ``T(i)/T(i-1)`` with ``i``; rows are then
strictly increasing and columns weakly increasing.

Jeu de taquin, rectification and evacuation are implemented here on fillings
and converted back to chains.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .partitions import (
    EMPTY,
    Composition,
    Partition,
    add_box,
    addable_rows,
    is_column_strip,
    young_leq,
)


class TableauError(ValueError):
    pass


@dataclass(frozen=True)
class RowStandardTableau:
    chain: tuple[Partition, ...]

    def __init__(self, chain: Iterable[Partition | Sequence[int]]):
        chain = tuple(c if isinstance(c, Partition) else Partition(c) for c in chain)
        prev = EMPTY
        for i, cur in enumerate(chain, start=1):
            if cur.size <= prev.size:
                raise TableauError(f"chain step {i} adds no boxes: {prev} -> {cur}")
            if not is_column_strip(prev, cur):
                raise TableauError(f"chain step {i} is not a column strip: {prev} -> {cur}")
            prev = cur
        object.__setattr__(self, "chain", chain)

    @property
    def content(self) -> Composition:
        sizes = [0] + [c.size for c in self.chain]
        return Composition(b - a for a, b in zip(sizes, sizes[1:]))

    @property
    def length(self) -> int:
        return len(self.chain)

    def __len__(self) -> int:
        return len(self.chain)

    def __getitem__(self, i: int) -> Partition:
        """``t[i]`` is the chain element T(i), 1-indexed, with ``t[0]`` the empty shape."""
        if i == 0:
            return EMPTY
        if not 1 <= i <= len(self.chain):
            raise IndexError(f"chain index {i} out of range 0..{len(self.chain)}")
        return self.chain[i - 1]

    def __repr__(self) -> str:
        return "RST(" + ";".join(str(c) for c in self.chain) + ")"

    @property
    def is_standard(self) -> bool:
        return all(a == 1 for a in self.content)

    def filling(self) -> list[list[int]]:
        """Rows of labels, label ``i`` on the boxes of ``T(i)/T(i-1)``."""
        rows: list[list[int]] = [[] for _ in range(len(shape(self)))]
        for label, (inner, outer) in enumerate(zip((EMPTY,) + self.chain, self.chain), start=1):
            for r in range(len(outer)):
                rows[r].extend([label] * (outer[r] - inner[r]))
        return rows

    @classmethod
    def from_filling(cls, rows: Sequence[Sequence[int]]) -> RowStandardTableau:
        check_filling(rows)
        labels = sorted({v for row in rows for v in row})
        if labels != list(range(1, len(labels) + 1)):
            raise TableauError(f"labels must be exactly 1..n, got {labels}")
        return cls(
            Partition.from_unsorted(sum(1 for v in row if v <= i) for row in rows)
            for i in labels
        )

    def to_json(self) -> dict:
        return {
            "content": list(self.content),
            "chain": [c.to_json() for c in self.chain],
            "filling": self.filling(),
        }

    @classmethod
    def from_json(cls, data: dict) -> RowStandardTableau:
        if not isinstance(data, dict) or "chain" not in data:
            raise ValueError("tableau JSON needs a 'chain' field")
        t = cls(Partition.from_json(c) for c in data["chain"])
        if "content" in data and list(data["content"]) != list(t.content):
            raise ValueError(f"declared content {data['content']} disagrees with chain {t}")
        return t


def check_filling(rows: Sequence[Sequence[int]]) -> None:
    """Validate a filling directly: partition shape, strict rows, weak columns."""
    lengths = [len(r) for r in rows]
    if any(n == 0 for n in lengths) or any(a < b for a, b in zip(lengths, lengths[1:])):
        raise TableauError(f"filling rows do not form a partition shape: {lengths}")
    for r, row in enumerate(rows):
        if any(a >= b for a, b in zip(row, row[1:])):
            raise TableauError(f"row {r + 1} is not strictly increasing: {list(row)}")
        if r:
            above = rows[r - 1]
            if any(above[c] > row[c] for c in range(len(row))):
                raise TableauError(f"column weakly-increasing condition fails at row {r + 1}")


def shape(t: RowStandardTableau) -> Partition:
    return t.chain[-1] if t.chain else EMPTY


def restrict(t: RowStandardTableau, i: int) -> RowStandardTableau:
    """Sub-tableau of labels ``<= i``."""
    if not 1 <= i <= len(t):
        raise IndexError(f"restrict index {i} out of range 1..{len(t)}")
    return RowStandardTableau(t.chain[:i])


def extend(t: RowStandardTableau, lam: Partition) -> RowStandardTableau:
    """Append ``lam`` to the chain; ``lam/sh(t)`` must be a nonempty column strip."""
    sh = shape(t)
    if lam.size <= sh.size or not young_leq(sh, lam):
        raise TableauError(f"cannot extend shape {sh} by {lam}: not a strictly larger diagram")
    if not is_column_strip(sh, lam):
        raise TableauError(f"cannot extend shape {sh} by {lam}: skew piece is not a column strip")
    return RowStandardTableau(t.chain + (lam,))


def _slide(cells: dict[tuple[int, int], int], hole: tuple[int, int]) -> None:
    """One jeu de taquin slide into ``hole``, mutating ``cells``.

    Equal right/below labels: the right neighbour moves (keeps rows strict).
    """
    r, c = hole
    while True:
        right = cells.get((r, c + 1))
        below = cells.get((r + 1, c))
        if right is None and below is None:
            return
        if below is None or (right is not None and right <= below):
            cells[(r, c)] = right
            del cells[(r, c + 1)]
            c += 1
        else:
            cells[(r, c)] = below
            del cells[(r + 1, c)]
            r += 1


def rectify_skew(inner: Partition, cells: dict[tuple[int, int], int]) -> dict[tuple[int, int], int]:
    """Rectify a skew filling ``cells`` of some ``outer/inner`` by repeated inner-corner slides."""
    cells = dict(cells)
    inner_rows = list(inner.parts)
    while inner_rows:
        # slide into the removable corner of the lowest row
        r = len(inner_rows) - 1
        c = inner_rows[r] - 1
        inner_rows[r] -= 1
        if inner_rows[r] == 0:
            inner_rows.pop()
        _slide(cells, (r, c))
    return cells


def rectify(t: RowStandardTableau, i: int) -> RowStandardTableau:
    """Straight-shape rectification of the skew tableau ``T/T(i)``, labels shifted down by ``i``."""
    n = len(t)
    if not 0 <= i <= n:
        raise IndexError(f"rectify index {i} out of range 0..{n}")
    if i == 0:
        return t
    inner = t[i]
    cells = {}
    for label in range(i + 1, n + 1):
        lo, hi = t[label - 1], t[label]
        for r in range(len(hi)):
            if hi[r] > lo[r]:
                cells[(r, lo[r])] = label - i
    return _chain_of_cells(rectify_skew(inner, cells), n - i)


def _chain_of_cells(cells: dict[tuple[int, int], int], n: int) -> RowStandardTableau:
    height = 1 + max((r for r, _ in cells), default=-1)
    chain = []
    for k in range(1, n + 1):
        rows = [0] * height
        for (r, _), v in cells.items():
            if v <= k:
                rows[r] += 1
        chain.append(Partition(rows))
    return RowStandardTableau(chain)


def evacuate(t: RowStandardTableau) -> RowStandardTableau:
    """Schützenberger involution via the chain of rectified-quotient shapes."""
    n = len(t)
    return RowStandardTableau(shape(rectify(t, n - k)) for k in range(1, n + 1))


def enumerate_tableaux(lam: Partition, content: Sequence[int]) -> list[RowStandardTableau]:
    """All row-standard tableaux of shape ``lam`` and the given content."""
    content = list(content)
    if sum(content) != lam.size:
        return []
    out: list[RowStandardTableau] = []

    def grow(chain: list[Partition], k: int) -> None:
        if k == len(content):
            if chain[-1] == lam if chain else lam == EMPTY:
                out.append(RowStandardTableau(chain))
            return
        inner = chain[-1] if chain else EMPTY
        for outer in _column_strips_within(inner, content[k], lam):
            grow(chain + [outer], k + 1)

    grow([], 0)
    return out


def _column_strips_within(inner: Partition, size: int, bound: Partition) -> Iterator[Partition]:
    rows = [r for r in range(len(bound)) if inner[r] < bound[r]]
    for chosen in combinations(rows, size):
        outer = [inner[r] for r in range(len(bound))]
        for r in chosen:
            outer[r] += 1
        if all(a >= b for a, b in zip(outer, outer[1:])):
            yield Partition(outer)


def enumerate_syt(lam: Partition) -> list[RowStandardTableau]:
    """All standard tableaux of shape ``lam`` (one box per step)."""
    out: list[RowStandardTableau] = []

    def grow(chain: list[Partition]) -> None:
        cur = chain[-1] if chain else EMPTY
        if cur == lam:
            out.append(RowStandardTableau(chain))
            return
        for r in addable_rows(cur):
            nxt = add_box(cur, r)
            if young_leq(nxt, lam):
                grow(chain + [nxt])

    grow([])
    return out
