"""Dense matrices over a prime field F_P with exact Gaussian elimination."""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

DEFAULT_PRIME = 2_147_483_647


def default_prime() -> int:
    """The field prime, overridable with ``STEINBERG_RSK_PRIME``."""
    value = os.environ.get("STEINBERG_RSK_PRIME")
    if not value:
        return DEFAULT_PRIME
    prime = int(value)
    if prime < 2 or any(prime % d == 0 for d in range(2, int(prime**0.5) + 1)):
        raise ValueError(f"STEINBERG_RSK_PRIME={value} is not a prime")
    return prime


@dataclass(frozen=True)
class FieldMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]
    mod: int = DEFAULT_PRIME

    @classmethod
    def of(cls, data: Sequence[Sequence[int]], mod: int | None = None, *, cols: int | None = None) -> FieldMatrix:
        mod = default_prime() if mod is None else mod
        entries = tuple(tuple(int(v) % mod for v in row) for row in data)
        ncols = len(entries[0]) if entries else (cols or 0)
        if any(len(row) != ncols for row in entries):
            raise ValueError("ragged matrix rows")
        return cls(len(entries), ncols, entries, mod)

    @classmethod
    def zeros(cls, rows: int, cols: int, mod: int | None = None) -> FieldMatrix:
        mod = default_prime() if mod is None else mod
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)), mod)

    @classmethod
    def identity(cls, n: int, mod: int | None = None) -> FieldMatrix:
        mod = default_prime() if mod is None else mod
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), mod)

    @classmethod
    def block(cls, blocks: Sequence[Sequence[FieldMatrix]]) -> FieldMatrix:
        """Assemble from a grid of blocks with consistent row/column sizes."""
        mod = blocks[0][0].mod
        rows: list[tuple[int, ...]] = []
        for brow in blocks:
            height = brow[0].rows
            for r in range(height):
                rows.append(tuple(v for b in brow for v in b.entries[r]))
        ncols = sum(b.cols for b in blocks[0])
        return cls(len(rows), ncols, tuple(rows), mod)

    def __getitem__(self, key: tuple[int, int]) -> int:
        r, c = key
        return self.entries[r][c]

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def _check(self, other: FieldMatrix) -> None:
        if self.mod != other.mod:
            raise ValueError("matrices over different fields")

    def __add__(self, other: FieldMatrix) -> FieldMatrix:
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in addition")
        p = self.mod
        return FieldMatrix(self.rows, self.cols, tuple(
            tuple((a + b) % p for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)
        ), p)

    def __neg__(self) -> FieldMatrix:
        p = self.mod
        return FieldMatrix(self.rows, self.cols, tuple(tuple(-a % p for a in r) for r in self.entries), p)

    def __sub__(self, other: FieldMatrix) -> FieldMatrix:
        return self + (-other)

    def __matmul__(self, other: FieldMatrix) -> FieldMatrix:
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        p = self.mod
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return FieldMatrix(self.rows, other.cols, tuple(
            tuple(sum(a * b for a, b in zip(row, col)) % p for col in cols) for row in self.entries
        ), p)

    def power(self, k: int) -> FieldMatrix:
        out = FieldMatrix.identity(self.rows, self.mod)
        for _ in range(k):
            out = out @ self
        return out

    def transpose(self) -> FieldMatrix:
        return FieldMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else tuple(
            () for _ in range(self.cols)), self.mod)

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> FieldMatrix:
        rows, cols = list(rows), list(cols)
        return FieldMatrix(len(rows), len(cols), tuple(
            tuple(self.entries[r][c] for c in cols) for r in rows
        ), self.mod)

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.entries for v in row)

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "mod": self.mod, "entries": self.tolist()}

    @classmethod
    def from_json(cls, data: dict) -> FieldMatrix:
        mod = data.get("mod", default_prime())
        m = cls.of(data["entries"], mod, cols=data.get("cols"))
        if (m.rows, m.cols) != (data.get("rows", m.rows), data.get("cols", m.cols)):
            raise ValueError("declared matrix dimensions disagree with entries")
        return m

    @classmethod
    def from_csv(cls, text: str, mod: int | None = None) -> FieldMatrix:
        rows = [[int(v) for v in line.split(",")] for line in text.splitlines() if line.strip()]
        return cls.of(rows, mod)


def row_echelon(m: FieldMatrix) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    p = m.mod
    a = [list(row) for row in m.entries]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        pivot = next((i for i in range(r, m.rows) if a[i][c]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = pow(a[r][c], p - 2, p)
        a[r] = [v * inv % p for v in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(vi - f * vr) % p for vi, vr in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return a, pivots


def rank(m: FieldMatrix) -> int:
    return len(row_echelon(m)[1])


def kernel_dim(m: FieldMatrix) -> int:
    return m.cols - rank(m)


def nullspace(m: FieldMatrix) -> list[tuple[int, ...]]:
    """A basis of ``{v : m v = 0}``."""
    p = m.mod
    a, pivots = row_echelon(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * m.cols
        v[f] = 1
        for row, pc in enumerate(pivots):
            v[pc] = -a[row][f] % p
        basis.append(tuple(v))
    return basis


def inverse(m: FieldMatrix) -> FieldMatrix:
    if m.rows != m.cols:
        raise ValueError("only square matrices are invertible")
    n = m.rows
    aug = FieldMatrix(n, 2 * n, tuple(
        row + tuple(int(i == j) for j in range(n)) for i, row in enumerate(m.entries)
    ), m.mod)
    red, pivots = row_echelon(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return FieldMatrix(n, n, tuple(tuple(row[n:]) for row in red[:n]), m.mod)


def random_upper_triangular(n: int, rng: random.Random, mod: int | None = None) -> FieldMatrix:
    """Uniform upper-triangular matrix with nonzero diagonal (always invertible)."""
    mod = default_prime() if mod is None else mod
    return FieldMatrix(n, n, tuple(
        tuple(rng.randrange(1, mod) if i == j else (rng.randrange(mod) if j > i else 0) for j in range(n))
        for i in range(n)
    ), mod)


def random_invertible(n: int, rng: random.Random, mod: int | None = None) -> FieldMatrix:
    mod = default_prime() if mod is None else mod
    while True:
        m = FieldMatrix(n, n, tuple(tuple(rng.randrange(mod) for _ in range(n)) for _ in range(n)), mod)
        if rank(m) == n:
            return m
