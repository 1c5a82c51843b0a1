"""Signed Young diagrams: K-orbit labels for nilpotent pairs (x, y).

A row is stored as ``(length, first_sign)``; signs alternate along a row, so the
first box determines the rest.  A diagram of signature ``(q, p)`` has ``q`` plus
boxes and ``p`` minus boxes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .partitions import (
    Partition,
    add,
    dominance_leq,
    nilpotent_orbit_dim,
)

PLUS = "+"
MINUS = "-"
_SIGN_ORDER = {MINUS: 0, PLUS: 1}


class SignatureMismatchError(ValueError):
    pass


def _flip(sign: str) -> str:
    return PLUS if sign == MINUS else MINUS


def row_string(length: int, first: str) -> str:
    other = _flip(first)
    return "".join(first if k % 2 == 0 else other for k in range(length))


def row_count(length: int, first: str, sign: str) -> int:
    """Boxes of ``sign`` in a row."""
    lead = (length + 1) // 2
    return lead if sign == first else length - lead


@dataclass(frozen=True)
class Signature:
    q: int
    p: int

    def to_json(self) -> dict:
        return {"q": self.q, "p": self.p}


@dataclass(frozen=True)
class SignedYoungDiagram:
    rows: tuple[tuple[int, str], ...]

    def __init__(self, rows: Iterable[tuple[int, str]] = ()):
        clean = []
        for length, first in rows:
            if length <= 0 or first not in (PLUS, MINUS):
                raise ValueError(f"bad signed row ({length}, {first!r})")
            clean.append((int(length), first))
        clean.sort(key=lambda r: (-r[0], _SIGN_ORDER[r[1]]))
        object.__setattr__(self, "rows", tuple(clean))

    @classmethod
    def parse(cls, rows: Iterable[str]) -> SignedYoungDiagram:
        """Build from ± strings such as ``["+-", "-+"]``; rows must alternate."""
        out = []
        for s in rows:
            s = s.replace("−", MINUS)
            if not s or any(ch not in "+-" for ch in s) or any(a == b for a, b in zip(s, s[1:])):
                raise ValueError(f"not an alternating ± row: {s!r}")
            out.append((len(s), s[0]))
        return cls(out)

    def render(self) -> list[str]:
        return [row_string(n, s) for n, s in self.rows]

    def __repr__(self) -> str:
        return "{" + ",".join("[" + r + "]" for r in self.render()) + "}"

    @property
    def signature(self) -> Signature:
        return Signature(
            sum(row_count(n, s, PLUS) for n, s in self.rows),
            sum(row_count(n, s, MINUS) for n, s in self.rows),
        )

    def to_json(self) -> dict:
        return {
            "rows": [{"len": n, "first": s} for n, s in self.rows],
            "signature": self.signature.to_json(),
            "render": self.render(),
        }

    @classmethod
    def from_json(cls, data: dict) -> SignedYoungDiagram:
        try:
            return cls((int(r["len"]), r["first"]) for r in data["rows"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed signed diagram JSON: {data!r}") from exc


def shape(d: SignedYoungDiagram) -> Partition:
    return Partition(n for n, _ in d.rows)


def lambda_plus(d: SignedYoungDiagram) -> Partition:
    return Partition.from_unsorted(row_count(n, s, PLUS) for n, s in d.rows)


def lambda_minus(d: SignedYoungDiagram) -> Partition:
    return Partition.from_unsorted(row_count(n, s, MINUS) for n, s in d.rows)


def is_admissible(d: SignedYoungDiagram) -> bool:
    return shape(d) == add(lambda_plus(d), lambda_minus(d))


def odd_rows_agree(d: SignedYoungDiagram) -> bool:
    """All rows of each odd length carry the same first sign."""
    seen: dict[int, str] = {}
    for n, s in d.rows:
        if n % 2 and seen.setdefault(n, s) != s:
            return False
    return True


def z_shape(d: SignedYoungDiagram) -> Partition:
    """Jordan type of ``z = beta + alpha*beta`` on the module of ``d``.

    Each row keeps its minus boxes plus its first box when that box is plus;
    every other plus box becomes a row of length one.
    """
    kept = []
    singles = 0
    for n, s in d.rows:
        first_plus = s == PLUS
        kept.append(row_count(n, s, MINUS) + first_plus)
        singles += row_count(n, s, PLUS) - first_plus
    return Partition.from_unsorted(kept + [1] * singles)


def boxes_in_first_columns(d: SignedYoungDiagram, sign: str, cols: int) -> int:
    if cols < 1 or cols % 2 == 0:
        raise ValueError(f"column bound must be a positive odd integer, got {cols}")
    return sum(row_count(min(n, cols), s, sign) for n, s in d.rows)


def _column_profile(d: SignedYoungDiagram, sign: str, width: int) -> list[int]:
    return [boxes_in_first_columns(d, sign, 2 * i + 1) for i in range(width)]


def closure_leq(lhs: SignedYoungDiagram, rhs: SignedYoungDiagram) -> bool:
    """Orbit closure order: ``O(lhs)`` lies in the closure of ``O(rhs)``."""
    if lhs.signature != rhs.signature:
        raise SignatureMismatchError(f"signatures differ: {lhs.signature} vs {rhs.signature}")
    if not (dominance_leq(lambda_plus(lhs), lambda_plus(rhs))
            and dominance_leq(lambda_minus(lhs), lambda_minus(rhs))):
        return False
    width = max(shape(lhs)[0], shape(rhs)[0]) // 2 + 1
    return all(
        a >= b
        for sign in (PLUS, MINUS)
        for a, b in zip(_column_profile(lhs, sign, width), _column_profile(rhs, sign, width))
    )


def orbit_dim(d: SignedYoungDiagram) -> int:
    return nilpotent_orbit_dim(shape(d)) // 2


def dual(d: SignedYoungDiagram) -> SignedYoungDiagram:
    return SignedYoungDiagram((n, _flip(s)) for n, s in d.rows)


@lru_cache(maxsize=None)
def _syd_tuple(q: int, p: int) -> tuple[SignedYoungDiagram, ...]:
    # row types in canonical order; a multiset is a non-increasing sequence of type indices
    types = [
        (n, s)
        for n in range(2 * max(p, q) + 1, 0, -1)
        for s in (MINUS, PLUS)
        if row_count(n, s, PLUS) <= q and row_count(n, s, MINUS) <= p
    ]
    out: list[SignedYoungDiagram] = []

    def grow(start: int, q_left: int, p_left: int, rows: list[tuple[int, str]]) -> None:
        if q_left == 0 and p_left == 0:
            out.append(SignedYoungDiagram(rows))
            return
        for k in range(start, len(types)):
            n, s = types[k]
            dq, dp = row_count(n, s, PLUS), row_count(n, s, MINUS)
            if dq <= q_left and dp <= p_left:
                grow(k, q_left - dq, p_left - dp, rows + [(n, s)])

    grow(0, q, p, [])
    return tuple(out)


def enumerate_syd(sig: Signature | tuple[int, int]) -> list[SignedYoungDiagram]:
    q, p = (sig.q, sig.p) if isinstance(sig, Signature) else sig
    return list(_syd_tuple(q, p))


def enumerate_asyd(sig: Signature | tuple[int, int]) -> list[SignedYoungDiagram]:
    return [d for d in enumerate_syd(sig) if is_admissible(d)]


def dimension_identity_holds(d: SignedYoungDiagram) -> bool:
    """``2 dim O(d) == 2|d+||d-| + dim N(d+) + dim N(d-)``."""
    plus, minus = lambda_plus(d), lambda_minus(d)
    return 2 * orbit_dim(d) == (
        2 * plus.size * minus.size + nilpotent_orbit_dim(plus) + nilpotent_orbit_dim(minus)
    )


def is_closure_maximal(d: SignedYoungDiagram) -> bool:
    """No strictly larger orbit shares the pair ``(d+, d-)``."""
    key = (lambda_plus(d), lambda_minus(d))
    sig = d.signature
    return not any(
        e != d and (lambda_plus(e), lambda_minus(e)) == key and closure_leq(d, e)
        for e in enumerate_syd(sig)
    )


def hasse_edges(diagrams: Sequence[SignedYoungDiagram]) -> list[tuple[int, int]]:
    """Cover relations ``(i, j)`` meaning ``diagrams[i]`` is covered by ``diagrams[j]``."""
    n = len(diagrams)
    less = [[i != j and closure_leq(diagrams[i], diagrams[j]) for j in range(n)] for i in range(n)]
    return [
        (i, j)
        for i in range(n)
        for j in range(n)
        if less[i][j] and not any(less[i][k] and less[k][j] for k in range(n))
    ]


def iter_all_syd(max_q: int, max_p: int) -> Iterator[SignedYoungDiagram]:
    for q in range(max_q + 1):
        for p in range(max_p + 1):
            yield from enumerate_syd((q, p))
