"""Robinson-Schensted-Knuth: the classical insertion and the flag-geometric variant.

The geometric variant sends a margin matrix ``sigma`` to the pair
``(Tab(z, E), Tab(z, F))`` for ``z`` generic in the conormal fibre of the
Schubert cell ``Y(sigma)``.  That definition is executable (see
:func:`steinberg_rsk.oracle.oracle_variant_rsk`) and is the normative one.
The fast path is classical Knuth RSK dressed by a convention picked by
:func:`calibrate`, which keeps only the conventions that reproduce the
oracle on every tested matrix.
"""

from __future__ import annotations

import bisect
import logging
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Callable, Iterable, Sequence

from .matrices import MarginMatrix, enumerate_margin_matrices, enumerate_pp, permutation_matrix, tau_hat
from .partitions import EMPTY, Partition, conjugate
from .tableaux import RowStandardTableau, TableauError, evacuate, shape

log = logging.getLogger(__name__)

Chain = tuple[Partition, ...]

CALIBRATION_SEED = 20_240_101
DEFAULT_CALIBRATION_SIZE = 4
MAX_CALIBRATION_SIZE = 4


class NoPreimageError(LookupError):
    pass


def _biword(m: MarginMatrix) -> list[tuple[int, int]]:
    return [(i + 1, j + 1) for i in range(m.rows) for j in range(m.cols) for _ in range(m[i, j])]


def _chain_from_rows(rows: Sequence[Sequence[int]], labels: int) -> Chain:
    return tuple(Partition(sum(1 for v in row if v <= k) for row in rows) for k in range(1, labels + 1))


def knuth_rsk(m: MarginMatrix) -> tuple[Chain, Chain]:
    """Row-insertion RSK on the biword of ``m``.

    Returns ``(insertion, recording)`` as chains of shapes; the insertion
    tableau carries the column indices, the recording tableau the row indices.
    Successive pieces are horizontal strips.
    """
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for i, j in _biword(m):
        v, r = j, 0
        while True:
            if r == len(p_rows):
                p_rows.append([v])
                q_rows.append([i])
                break
            row = p_rows[r]
            k = bisect.bisect_right(row, v)
            if k == len(row):
                row.append(v)
                q_rows[r].append(i)
                break
            row[k], v = v, row[k]
            r += 1
    return _chain_from_rows(p_rows, m.cols), _chain_from_rows(q_rows, m.rows)


def _rows_of_chain(chain: Chain) -> list[list[int]]:
    rows: list[list[int]] = [[] for _ in range(len(chain[-1]) if chain else 0)]
    prev = EMPTY
    for label, cur in enumerate(chain, start=1):
        for r in range(len(cur)):
            rows[r].extend([label] * (cur[r] - prev[r]))
        prev = cur
    return rows


def knuth_rsk_inverse(insertion: Chain, recording: Chain) -> MarginMatrix:
    """Reverse bumping; inverse of :func:`knuth_rsk`."""
    insertion, recording = tuple(insertion), tuple(recording)
    sh = insertion[-1] if insertion else EMPTY
    if sh != (recording[-1] if recording else EMPTY):
        raise ValueError("insertion and recording shapes differ")
    p_rows = _rows_of_chain(insertion)
    prev_shape = (EMPTY,) + recording
    counts = [[0] * len(insertion) for _ in range(len(recording))]
    for i in range(len(recording), 0, -1):
        inner, outer = prev_shape[i - 1], prev_shape[i]
        # the boxes of a horizontal strip were added left to right
        cells = sorted(((r, c) for r in range(len(outer)) for c in range(inner[r], outer[r])),
                       key=lambda rc: rc[1], reverse=True)
        for r, _ in cells:
            v = p_rows[r].pop()
            if not p_rows[r]:
                p_rows.pop()
            for rr in range(r - 1, -1, -1):
                row = p_rows[rr]
                k = bisect.bisect_left(row, v) - 1
                row[k], v = v, row[k]
            counts[i - 1][v - 1] += 1
    return MarginMatrix(counts)


_TRANSFORMS: dict[str, tuple[Callable[[MarginMatrix], MarginMatrix], Callable[[MarginMatrix], MarginMatrix]]] = {
    "identity": (lambda m: m, lambda m: m),
    "row_reversal": (MarginMatrix.reverse_rows, MarginMatrix.reverse_rows),
    "column_reversal": (MarginMatrix.reverse_cols, MarginMatrix.reverse_cols),
    "rotation": (MarginMatrix.rotate, MarginMatrix.rotate),
}


@dataclass(frozen=True)
class Convention:
    """Knuth RSK of a transformed matrix, then optional conjugation, swap and evacuations.

    Transposed transforms are omitted: ``knuth_rsk(m.T)`` is ``knuth_rsk(m)``
    with its outputs swapped, so they duplicate a listed convention.
    """

    transform: str
    conjugate: bool
    swap: bool
    evacuate_first: bool
    evacuate_second: bool

    @property
    def name(self) -> str:
        parts = [self.transform]
        if self.conjugate:
            parts.append("conjugate")
        if self.swap:
            parts.append("swap")
        if self.evacuate_first:
            parts.append("evacuate_first")
        if self.evacuate_second:
            parts.append("evacuate_second")
        return "+".join(parts)

    def apply(self, m: MarginMatrix) -> tuple[RowStandardTableau, RowStandardTableau] | None:
        """The convention's tableau pair, or None when it does not produce row-standard tableaux."""
        ins, rec = knuth_rsk(_TRANSFORMS[self.transform][0](m))
        if self.conjugate:
            ins, rec = tuple(map(conjugate, ins)), tuple(map(conjugate, rec))
        first, second = (rec, ins) if self.swap else (ins, rec)
        try:
            a, b = RowStandardTableau(first), RowStandardTableau(second)
        except TableauError:
            return None
        if self.evacuate_first:
            a = evacuate(a)
        if self.evacuate_second:
            b = evacuate(b)
        return a, b

    def invert(self, qhat: RowStandardTableau, phat: RowStandardTableau) -> MarginMatrix:
        a = evacuate(qhat) if self.evacuate_first else qhat
        b = evacuate(phat) if self.evacuate_second else phat
        ins, rec = (b.chain, a.chain) if self.swap else (a.chain, b.chain)
        if self.conjugate:
            ins, rec = tuple(map(conjugate, ins)), tuple(map(conjugate, rec))
        return _TRANSFORMS[self.transform][1](knuth_rsk_inverse(ins, rec))


def candidate_conventions() -> list[Convention]:
    return [Convention(t, *flags) for t in _TRANSFORMS for flags in product((False, True), repeat=4)]


@dataclass
class CalibrationReport:
    survivors: list[Convention]
    domain: dict = field(default_factory=dict)
    classes: list[list[Convention]] = field(default_factory=list)

    @property
    def convention(self) -> Convention | None:
        """The fast-path convention.

        Only set when the domain was nonempty and every survivor falls in one
        output-equivalence class; the class's first member represents it.
        """
        if self.domain.get("matrices", 0) and len(self.classes) == 1:
            return self.classes[0][0]
        return None

    def to_json(self) -> dict:
        chosen = self.convention
        return {
            "survivors": [c.name for c in self.survivors],
            "classes": [[c.name for c in cls] for cls in self.classes],
            "domain": self.domain,
            "fast_path": chosen.name if chosen else None,
        }


def _compositions(n: int, max_parts: int) -> Iterable[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first, max_parts - 1):
            yield (first,) + rest


def probe_matrices(max_total: int = 5, max_parts: int = 3) -> list[MarginMatrix]:
    """Every margin matrix with total at most ``max_total``; used to compare conventions."""
    out: list[MarginMatrix] = []
    for n in range(1, max_total + 1):
        comps = list(_compositions(n, max_parts))
        for rm in comps:
            for cm in comps:
                out.extend(enumerate_margin_matrices(rm, cm))
    return out


def equivalence_classes(conventions: Sequence[Convention],
                        probes: Sequence[MarginMatrix]) -> list[list[Convention]]:
    """Group conventions whose outputs coincide on every probe matrix."""
    classes: list[list[Convention]] = []
    signatures: list[tuple] = []
    for conv in conventions:
        sig = tuple(conv.apply(m) for m in probes)
        for k, other in enumerate(signatures):
            if other == sig:
                classes[k].append(conv)
                break
        else:
            classes.append([conv])
            signatures.append(sig)
    return classes


def calibration_domain(max_size: int) -> list[MarginMatrix]:
    """Bordered matrices of every ``PP(p, q)``, permutation matrices, and small general matrices.

    The general family covers every margin matrix of total at most ``max_size``
    so that repeated entries are exercised too.
    """
    out: list[MarginMatrix] = []
    for p in range(1, max_size + 1):
        for q in range(1, max_size + 1):
            out.extend(tau_hat(t) for t in enumerate_pp(p, q))
    for n in range(1, max_size + 1):
        out.extend(permutation_matrix(w) for w in permutations(range(n)))
    out.extend(probe_matrices(max_size))
    return out


def calibrate(max_size: int = DEFAULT_CALIBRATION_SIZE, rng: random.Random | None = None,
              trials: int = 5, extra: Iterable[MarginMatrix] = ()) -> CalibrationReport:
    """Keep the candidate conventions that agree with the oracle on the whole domain."""
    from .oracle import oracle_variant_rsk

    if not 0 <= max_size <= MAX_CALIBRATION_SIZE:
        raise ValueError(f"calibration is exhaustive; max_size must lie in 0..{MAX_CALIBRATION_SIZE}")
    rng = rng if rng is not None else random.Random(CALIBRATION_SEED)
    domain = calibration_domain(max_size) + list(extra)
    survivors = candidate_conventions()
    for m in domain:
        expected = oracle_variant_rsk(m, rng, trials)
        survivors = [c for c in survivors if c.apply(m) == expected]
        if not survivors:
            break
    report = CalibrationReport(survivors, {
        "max_size": max_size,
        "matrices": len(domain),
        "families": ["tau_hat of PP(p,q)", "permutation matrices", "margin matrices of small total"],
        "trials": trials,
    }, equivalence_classes(survivors, probe_matrices()))
    log.info("calibration survivors: %s", [c.name for c in survivors])
    return report


@lru_cache(maxsize=None)
def active_convention() -> Convention | None:
    """Calibrated once per process with a fixed seed; None disables the fast path."""
    return calibrate().convention


def variant_rsk(m: MarginMatrix, rng: random.Random | None = None, *,
                method: str = "auto") -> tuple[RowStandardTableau, RowStandardTableau]:
    """``(Q^, P^)`` with contents the column and row margins of ``m``.

    ``method`` is ``"auto"`` (calibrated fast path when available), ``"fast"`` or
    ``"oracle"``.
    """
    conv = active_convention() if method in ("auto", "fast") else None
    if conv is not None:
        pair = conv.apply(m)
        if pair is None:
            raise RuntimeError(f"calibrated convention {conv.name} failed on {m}")
        return pair
    if method == "fast":
        raise RuntimeError("no calibrated convention; the fast path is disabled")
    from .oracle import oracle_variant_rsk

    return oracle_variant_rsk(m, rng if rng is not None else random.Random(CALIBRATION_SEED))


def variant_rsk_inverse(qhat: RowStandardTableau, phat: RowStandardTableau,
                        rng: random.Random | None = None, *, method: str = "auto") -> MarginMatrix:
    """The unique ``sigma`` with ``variant_rsk(sigma) == (qhat, phat)``."""
    if shape(qhat) != shape(phat):
        raise NoPreimageError(f"shapes differ: {shape(qhat)} vs {shape(phat)}")
    conv = active_convention() if method in ("auto", "fast") else None
    if conv is not None:
        m = conv.invert(qhat, phat)
        if conv.apply(m) != (qhat, phat):
            raise NoPreimageError(f"pair {(qhat, phat)} has no preimage")
        return m
    if method == "fast":
        raise RuntimeError("no calibrated convention; the fast path is disabled")
    return search_preimage(qhat, phat, rng)


def search_preimage(qhat: RowStandardTableau, phat: RowStandardTableau,
                    rng: random.Random | None = None) -> MarginMatrix:
    """Exhaustive oracle search over all matrices with the pair's margins."""
    from .oracle import oracle_variant_rsk

    rng = rng if rng is not None else random.Random(CALIBRATION_SEED)
    for m in enumerate_margin_matrices(tuple(phat.content), tuple(qhat.content)):
        if oracle_variant_rsk(m, rng) == (qhat, phat):
            return m
    raise NoPreimageError(f"no matrix maps to {(qhat, phat)}")
