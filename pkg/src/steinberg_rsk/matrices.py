"""Partial permutations and nonnegative integer matrices with fixed margins."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb, factorial
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class MarginMatrix:
    """Nonnegative integer matrix; rows sum to ``row_margins``, columns to ``col_margins``.

    Both margin sequences must be compositions (positive parts).
    """

    entries: tuple[tuple[int, ...], ...]

    def __init__(self, entries: Iterable[Sequence[int]]):
        entries = tuple(tuple(int(v) for v in row) for row in entries)
        if entries and any(len(r) != len(entries[0]) for r in entries):
            raise ValueError("ragged margin matrix")
        if any(v < 0 for r in entries for v in r):
            raise ValueError("margin matrix entries must be nonnegative")
        object.__setattr__(self, "entries", entries)
        if any(m == 0 for m in self.row_margins) or any(m == 0 for m in self.col_margins):
            raise ValueError(f"margins must be positive: rows {self.row_margins}, cols {self.col_margins}")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def row_margins(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.entries)

    @property
    def col_margins(self) -> tuple[int, ...]:
        return tuple(sum(c) for c in zip(*self.entries))

    def __getitem__(self, key: tuple[int, int]) -> int:
        r, c = key
        return self.entries[r][c]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> MarginMatrix:
        return MarginMatrix(zip(*self.entries))

    def reverse_rows(self) -> MarginMatrix:
        return MarginMatrix(self.entries[::-1])

    def reverse_cols(self) -> MarginMatrix:
        return MarginMatrix(r[::-1] for r in self.entries)

    def rotate(self) -> MarginMatrix:
        """Rotation by 180 degrees."""
        return MarginMatrix(r[::-1] for r in self.entries[::-1])

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": self.tolist()}

    @classmethod
    def from_json(cls, data) -> MarginMatrix:
        if isinstance(data, list):
            return cls(data)
        m = cls(data["entries"])
        if (m.rows, m.cols) != (data.get("rows", m.rows), data.get("cols", m.cols)):
            raise ValueError("declared dimensions disagree with entries")
        return m


def enumerate_margin_matrices(row_margins: Sequence[int], col_margins: Sequence[int]) -> Iterator[MarginMatrix]:
    """All nonnegative integer matrices with the given margins."""
    row_margins, col_margins = list(row_margins), list(col_margins)
    if sum(row_margins) != sum(col_margins):
        return

    def rows_for(total: int, caps: list[int]) -> Iterator[tuple[int, ...]]:
        if not caps:
            if total == 0:
                yield ()
            return
        for v in range(min(total, caps[0]), -1, -1):
            for rest in rows_for(total - v, caps[1:]):
                yield (v,) + rest

    def grow(k: int, caps: list[int], acc: list[tuple[int, ...]]) -> Iterator[MarginMatrix]:
        if k == len(row_margins):
            if all(c == 0 for c in caps):
                yield MarginMatrix(acc)
            return
        for row in rows_for(row_margins[k], caps):
            yield from grow(k + 1, [c - v for c, v in zip(caps, row)], acc + [row])

    yield from grow(0, col_margins, [])


def permutation_matrix(w: Sequence[int]) -> MarginMatrix:
    """Row ``i`` has its one in column ``w[i]`` (0-indexed)."""
    n = len(w)
    return MarginMatrix([[int(w[i] == j) for j in range(n)] for i in range(n)])


@dataclass(frozen=True)
class PartialPermutation:
    """A ``p x q`` 0/1 matrix with at most one 1 in each row and column.

    ``ones`` holds 1-indexed ``(row, col)`` positions, rows in ``1..p``.
    """

    p: int
    q: int
    ones: frozenset[tuple[int, int]]

    def __init__(self, p: int, q: int, ones: Iterable[Sequence[int]] = ()):
        ones = [tuple(int(v) for v in cell) for cell in ones]
        if p < 1 or q < 1:
            raise ValueError(f"partial permutation needs positive dimensions, got {p}x{q}")
        if any(len(c) != 2 for c in ones):
            raise ValueError("each one must be a (row, col) pair")
        if len(set(ones)) != len(ones):
            raise ValueError(f"duplicate cell in {ones}")
        for r, c in ones:
            if not (1 <= r <= p and 1 <= c <= q):
                raise ValueError(f"cell ({r},{c}) outside {p}x{q}")
        rows = [r for r, _ in ones]
        cols = [c for _, c in ones]
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise ValueError(f"more than one entry in a row or column: {sorted(ones)}")
        object.__setattr__(self, "p", int(p))
        object.__setattr__(self, "q", int(q))
        object.__setattr__(self, "ones", frozenset(ones))

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]]) -> PartialPermutation:
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        for row in rows:
            if any(v not in (0, 1) for v in row):
                raise ValueError("partial permutation entries must be 0 or 1")
        ones = [(i + 1, j + 1) for i, row in enumerate(rows) for j, v in enumerate(row) if v]
        return cls(len(rows), len(rows[0]), ones)

    @classmethod
    def zero(cls, p: int, q: int) -> PartialPermutation:
        return cls(p, q, [])

    def matrix(self) -> list[list[int]]:
        return [[int((i, j) in self.ones) for j in range(1, self.q + 1)] for i in range(1, self.p + 1)]

    @property
    def rank(self) -> int:
        return len(self.ones)

    def __repr__(self) -> str:
        return f"PP({self.p}x{self.q}, {sorted(self.ones)})"

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "ones": [list(c) for c in sorted(self.ones)]}

    @classmethod
    def from_json(cls, data: dict) -> PartialPermutation:
        if not isinstance(data, dict) or not {"p", "q"} <= data.keys():
            raise ValueError('partial permutation JSON needs "p", "q" and "ones"')
        if not isinstance(data.get("ones", []), list):
            raise ValueError('"ones" must be an array of [row, col] pairs')
        return cls(data["p"], data["q"], data.get("ones", []))


def pp_count(p: int, q: int) -> int:
    """``sum_k C(p,k) C(q,k) k!``."""
    return sum(comb(p, k) * comb(q, k) * factorial(k) for k in range(min(p, q) + 1))


def enumerate_pp(p: int, q: int) -> list[PartialPermutation]:
    out = []
    for k in range(min(p, q) + 1):
        for rows in combinations(range(1, p + 1), k):
            for cols in permutations(range(1, q + 1), k):
                out.append(PartialPermutation(p, q, zip(rows, cols)))
    return out


def random_pp(p: int, q: int, rng: random.Random) -> PartialPermutation:
    """Uniform over ``PP(p, q)``: pick the rank with the right weight, then rows and columns."""
    weights = [comb(p, k) * comb(q, k) * factorial(k) for k in range(min(p, q) + 1)]
    k = rng.choices(range(len(weights)), weights=weights)[0]
    rows = rng.sample(range(1, p + 1), k)
    cols = rng.sample(range(1, q + 1), k)
    return PartialPermutation(p, q, zip(rows, cols))


def tau_hat(t: PartialPermutation) -> MarginMatrix:
    """Border ``t`` with a top row ``(l_1..l_q, r)`` and a right column ``m_i``.

    ``l_j = 1 - colsum_j``, ``m_i = 1 - rowsum_i``, ``r = rank(t)``; row margins
    are ``(q, 1, ..., 1)`` and column margins ``(1, ..., 1, p)``.
    """
    m = t.matrix()
    top = [1 - sum(m[i][j] for i in range(t.p)) for j in range(t.q)] + [t.rank]
    body = [row + [1 - sum(row)] for row in m]
    return MarginMatrix([top] + body)


def south_west(m: MarginMatrix) -> PartialPermutation:
    """Rows ``2..p+1`` and columns ``1..q`` of a bordered matrix."""
    return PartialPermutation.from_matrix([list(r[:-1]) for r in m.entries[1:]])
