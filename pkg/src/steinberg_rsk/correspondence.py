"""Partial permutations and admissible signed diagrams with tableau pairs.

``forward`` sends ``t`` in ``PP(p, q)`` to a triple ``(diagram, Q, P)`` with the
diagram admissible of signature ``(q, p)`` and ``Q``, ``P`` standard of shapes
``diagram+`` and ``diagram-``.  ``inverse`` undoes it.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from .matrices import PartialPermutation, enumerate_pp, pp_count, south_west, tau_hat
from .partitions import count_syt
from .rsk import variant_rsk, variant_rsk_inverse
from .signed_diagrams import (
    MINUS,
    PLUS,
    SignedYoungDiagram,
    dual as dual_diagram,
    enumerate_asyd,
    is_admissible,
    lambda_minus,
    lambda_plus,
    z_shape,
)
from .tableaux import RowStandardTableau, enumerate_syt, evacuate, extend, rectify, restrict, shape

__all__ = [
    "ConsistencyError",
    "CorrespondenceTriple",
    "CensusReport",
    "PartialPermutation",
    "census",
    "dual",
    "enumerate_pp",
    "enumerate_triples",
    "forward",
    "inverse",
    "pr",
    "tau_hat",
]


class ConsistencyError(RuntimeError):
    """The combinatorial pipeline produced something the theory rules out."""


@dataclass(frozen=True)
class CorrespondenceTriple:
    diagram: SignedYoungDiagram
    q_tab: RowStandardTableau
    p_tab: RowStandardTableau

    def __post_init__(self):
        if not is_admissible(self.diagram):
            raise ValueError(f"diagram {self.diagram} is not admissible")
        for name, tab, want in (("Q", self.q_tab, lambda_plus(self.diagram)),
                                ("P", self.p_tab, lambda_minus(self.diagram))):
            if not tab.is_standard:
                raise ValueError(f"{name} tableau {tab} is not standard")
            if shape(tab) != want:
                raise ValueError(f"{name} tableau has shape {shape(tab)}, expected {want}")

    def to_json(self) -> dict:
        return {
            "diagram": self.diagram.to_json(),
            "q_tab": self.q_tab.to_json(),
            "p_tab": self.p_tab.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> CorrespondenceTriple:
        try:
            return cls(
                SignedYoungDiagram.from_json(data["diagram"]),
                RowStandardTableau.from_json(data["q_tab"]),
                RowStandardTableau.from_json(data["p_tab"]),
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed triple JSON: {exc}") from exc


def forward(t: PartialPermutation, rng: random.Random | None = None, *,
            method: str = "auto") -> CorrespondenceTriple:
    qhat, phat = variant_rsk(tau_hat(t), rng, method=method)
    lam = shape(qhat)
    q_tab = restrict(qhat, t.q)
    p_tab = rectify(phat, 1)
    sh_q, sh_p = shape(q_tab), shape(p_tab)
    rows = []
    for i in range(max(len(sh_q), len(sh_p))):
        length = sh_q[i] + sh_p[i]
        rows.append((length, PLUS if sh_p[i] < lam[i] else MINUS))
    diagram = SignedYoungDiagram(rows)
    if not is_admissible(diagram):
        raise ConsistencyError(f"{t}: assembled diagram {diagram} is not admissible")
    if z_shape(diagram) != lam:
        raise ConsistencyError(f"{t}: z_shape {z_shape(diagram)} differs from {lam}")
    if (lambda_plus(diagram), lambda_minus(diagram)) != (sh_q, sh_p):
        raise ConsistencyError(f"{t}: sign counts of {diagram} differ from ({sh_q}, {sh_p})")
    return CorrespondenceTriple(diagram, q_tab, p_tab)


def inverse(tr: CorrespondenceTriple, rng: random.Random | None = None, *,
            method: str = "auto") -> PartialPermutation:
    sig = tr.diagram.signature
    lam = z_shape(tr.diagram)
    qhat = extend(tr.q_tab, lam)
    phat = evacuate(extend(evacuate(tr.p_tab), lam))
    sigma = variant_rsk_inverse(qhat, phat, rng, method=method)
    t = south_west(sigma)
    if (t.p, t.q) != (sig.p, sig.q):
        raise ConsistencyError(f"recovered {t} does not live in PP({sig.p},{sig.q})")
    return t


def pr(t: PartialPermutation, rng: random.Random | None = None, *, method: str = "auto") -> SignedYoungDiagram:
    return forward(t, rng, method=method).diagram


def dual(t: PartialPermutation, rng: random.Random | None = None, *, method: str = "auto") -> PartialPermutation:
    """The partial permutation in ``PP(q, p)`` whose triple is ``(dual diagram, P, Q)``."""
    tr = forward(t, rng, method=method)
    return inverse(CorrespondenceTriple(dual_diagram(tr.diagram), tr.p_tab, tr.q_tab), rng, method=method)


def enumerate_triples(p: int, q: int) -> list[CorrespondenceTriple]:
    """Every triple over ``ASYD(q, p)``; its length is ``|PP(p, q)|`` by the census identity."""
    out = []
    for d in enumerate_asyd((q, p)):
        for qt in enumerate_syt(lambda_plus(d)):
            for pt in enumerate_syt(lambda_minus(d)):
                out.append(CorrespondenceTriple(d, qt, pt))
    return out


@dataclass
class CensusReport:
    p: int
    q: int
    pp_count: int
    asyd_sum: int
    per_diagram: list[dict] = field(default_factory=list)
    injective: bool | None = None
    failure: str | None = None

    @property
    def identity_holds(self) -> bool:
        return self.pp_count == self.asyd_sum and self.failure is None

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "pp_count": self.pp_count,
            "asyd_sum": self.asyd_sum,
            "identity_holds": self.identity_holds,
            "injective": self.injective,
            "failure": self.failure,
            "per_diagram": self.per_diagram,
        }


def census(p: int, q: int, *, check_forward: bool = True, rng: random.Random | None = None,
           method: str = "auto") -> CensusReport:
    """Count both sides of ``|PP(p,q)| = sum over ASYD(q,p) of |SYT(d+)| |SYT(d-)|``.

    With ``check_forward`` the map is also run on every partial permutation to
    confirm that it is injective and hits each diagram the expected number of times.
    """
    diagrams = enumerate_asyd((q, p))
    expected = {d: count_syt(lambda_plus(d)) * count_syt(lambda_minus(d)) for d in diagrams}
    report = CensusReport(p, q, pp_count(p, q), sum(expected.values()))
    observed: Counter = Counter()
    if check_forward:
        seen: dict[CorrespondenceTriple, PartialPermutation] = {}
        for t in enumerate_pp(p, q):
            tr = forward(t, rng, method=method)
            if tr in seen:
                report.failure = f"{t} and {seen[tr]} both map to {tr.to_json()}"
                break
            if tr.diagram not in expected:
                report.failure = f"{t} maps outside ASYD({q},{p}): {tr.diagram}"
                break
            seen[tr] = t
            observed[tr.diagram] += 1
        report.injective = report.failure is None
        if report.failure is None:
            missing = next((d for d in diagrams if observed[d] != expected[d]), None)
            if missing is not None:
                report.failure = f"{missing} reached {observed[missing]} times, expected {expected[missing]}"
    for d in diagrams:
        entry = {"diagram": d.render(), "plus": lambda_plus(d).to_json(), "minus": lambda_minus(d).to_json(),
                 "count": expected[d]}
        if check_forward:
            entry["observed"] = observed[d]
        report.per_diagram.append(entry)
    return report

