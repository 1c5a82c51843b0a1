"""The invariant suite behind ``steinberg-rsk verify`` and the acceptance tests.

Each check returns a :class:`CheckResult`; none raises on a failed invariant.
Randomness comes from a per-check source derived from one seed, so a check's
outcome does not depend on which other checks ran before it.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import correspondence as corr
from .matrices import enumerate_pp, pp_count, random_pp, tau_hat
from .oracle import (
    bordered_flags,
    evacuation_chain,
    direct_sum,
    dual_orbit_check,
    jordan_type,
    module_matrices,
    oracle_schubert_tableaux,
    oracle_triple,
    oracle_variant_rsk,
    quotient_chain,
    sample_orbit_point,
    schubert_position,
    syd_of_pair,
)
from .partitions import Partition, add, count_syt, dominance_leq, partitions_of
from .rsk import probe_matrices, variant_rsk
from .signed_diagrams import (
    MINUS,
    PLUS,
    closure_leq,
    dimension_identity_holds,
    enumerate_syd,
    is_admissible,
    is_closure_maximal,
    lambda_minus,
    lambda_plus,
    odd_rows_agree,
    shape,
    z_shape,
)
from .tableaux import enumerate_syt, enumerate_tableaux, evacuate, rectify


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def fail(self, message: str) -> None:
        self.passed = False
        if len(self.failures) < 10:
            self.failures.append(message)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "cases": self.cases,
            "failures": self.failures,
            "seconds": round(self.seconds, 3),
        }


def _rng(seed: int, name: str) -> random.Random:
    return random.Random(f"{seed}:{name}")


def _pairs(pmax: int, qmax: int):
    return [(p, q) for p in range(1, pmax + 1) for q in range(1, qmax + 1)]


def _timed(fn: Callable[..., CheckResult]) -> Callable[..., CheckResult]:
    def wrapper(*args, **kwargs) -> CheckResult:
        start = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - start
        return res

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@_timed
def census_identity(pmax: int = 4, qmax: int = 4) -> CheckResult:
    """``|PP(p,q)|`` equals the SYT-weighted count of ``ASYD(q,p)``, and forward realises it."""
    res = CheckResult("census_identity", True)
    for p, q in _pairs(pmax, qmax):
        res.cases += 1
        if len(enumerate_pp(p, q)) != pp_count(p, q):
            res.fail(f"enumerate_pp({p},{q}) has {len(enumerate_pp(p, q))} elements, expected {pp_count(p, q)}")
        report = corr.census(p, q)
        if not report.identity_holds:
            res.fail(f"({p},{q}): {report.pp_count} vs {report.asyd_sum}; {report.failure}")
    return res


@_timed
def round_trip(pmax: int = 3, qmax: int = 3, *, seed: int = 0,
               sampled: dict[int, int] | None = None) -> CheckResult:
    """``inverse(forward(t)) == t`` and ``forward(inverse(tr)) == tr``.

    ``sampled`` maps a square size to a number of random partial permutations.
    """
    res = CheckResult("round_trip", True)
    for p, q in _pairs(pmax, qmax):
        for t in enumerate_pp(p, q):
            res.cases += 1
            back = corr.inverse(corr.forward(t))
            if back != t:
                res.fail(f"{t} came back as {back}")
        for tr in corr.enumerate_triples(p, q):
            res.cases += 1
            again = corr.forward(corr.inverse(tr))
            if again != tr:
                res.fail(f"triple {tr.to_json()} came back as {again.to_json()}")
    rng = _rng(seed, "round_trip")
    for n, count in (sampled or {}).items():
        for _ in range(count):
            t = random_pp(n, n, rng)
            res.cases += 1
            if corr.inverse(corr.forward(t)) != t:
                res.fail(f"sampled {t} does not round trip")
    return res


@_timed
def oracle_agreement(pmax: int = 3, qmax: int = 3, *, seed: int = 0, trials: int = 5) -> CheckResult:
    """The combinatorial triple equals the one read off a generic conormal point."""
    res = CheckResult("oracle_agreement", True)
    rng = _rng(seed, "oracle_agreement")
    for p, q in _pairs(pmax, qmax):
        for t in enumerate_pp(p, q):
            res.cases += 1
            geometric = oracle_triple(t, rng, trials)
            tr = corr.forward(t)
            if geometric != (tr.diagram, tr.q_tab, tr.p_tab):
                res.fail(f"{t}: oracle {geometric}, combinatorial {tr}")
    return res


@_timed
def fast_path_agreement(pmax: int = 3, qmax: int = 3, *, seed: int = 0, trials: int = 5) -> CheckResult:
    """The calibrated RSK fast path equals the oracle on every bordered matrix."""
    res = CheckResult("fast_path_agreement", True)
    rng = _rng(seed, "fast_path_agreement")
    for p, q in _pairs(pmax, qmax):
        for t in enumerate_pp(p, q):
            res.cases += 1
            m = tau_hat(t)
            if variant_rsk(m, method="fast") != oracle_variant_rsk(m, rng, trials):
                res.fail(f"variant RSK disagrees on {m.tolist()}")
    return res


@_timed
def admissibility(pmax: int = 4, qmax: int = 4, *, image_bound: int = 3) -> CheckResult:
    """Four characterisations of admissible diagrams agree.

    Shape identity, dimension identity, closure-maximality among diagrams with
    equal ``(d+, d-)``, and lying in the image of ``pr`` (the last only for
    ``p, q <= image_bound``).  The odd-row sign criterion is compared as well.
    """
    res = CheckResult("admissibility", True)
    for p, q in _pairs(pmax, qmax) + [(0, q) for q in range(qmax + 1)] + [(p, 0) for p in range(1, pmax + 1)]:
        image = None
        if 1 <= p <= image_bound and 1 <= q <= image_bound:
            image = {corr.pr(t) for t in enumerate_pp(p, q)}
        for d in enumerate_syd((q, p)):
            res.cases += 1
            verdicts = {
                "shape": is_admissible(d),
                "odd_rows": odd_rows_agree(d),
                "dimension": dimension_identity_holds(d),
                "maximal": is_closure_maximal(d),
            }
            if image is not None:
                verdicts["pr_image"] = d in image
            if len(set(verdicts.values())) != 1:
                res.fail(f"{d} in SYD({q},{p}): {verdicts}")
    return res


def _expected_module_type(kind: str, k: int) -> Partition:
    n = k // 2
    if k % 2:
        return Partition([n + 1] + [1] * n)
    if kind == MINUS:
        return Partition([n + 1] + [1] * (n - 1))
    return Partition([n] + [1] * n)


@_timed
def module_types(kmax: int = 9, *, samples: int = 500, max_dim: int = 10, seed: int = 0) -> CheckResult:
    """Jordan type of ``z`` on each indecomposable, and on random direct sums versus ``z_shape``."""
    res = CheckResult("module_types", True)
    for kind in (PLUS, MINUS):
        for k in range(1, kmax + 1):
            res.cases += 1
            got = jordan_type(module_matrices(kind, k).z())
            if got != _expected_module_type(kind, k):
                res.fail(f"U_{k}^{kind}: {got}, expected {_expected_module_type(kind, k)}")
    rng = _rng(seed, "module_types")
    for _ in range(samples):
        budget = rng.randint(1, max_dim)
        rows: list[tuple[int, str]] = []
        while budget:
            k = rng.randint(1, budget)
            rows.append((k, rng.choice((PLUS, MINUS))))
            budget -= k
        pt = direct_sum([module_matrices(kind, k) for k, kind in rows])
        d = syd_of_pair(pt)
        res.cases += 1
        if jordan_type(pt.z()) != z_shape(d):
            res.fail(f"{d}: jordan type {jordan_type(pt.z())}, z_shape {z_shape(d)}")
    return res


@_timed
def duality(pmax: int = 3, qmax: int = 3, *, seed: int = 0, trials: int = 5) -> CheckResult:
    """``dual`` is an involution into ``PP(q,p)`` and matches the geometric dual orbit."""
    res = CheckResult("duality", True)
    rng = _rng(seed, "duality")
    for p, q in _pairs(pmax, qmax):
        for t in enumerate_pp(p, q):
            res.cases += 1
            tv = corr.dual(t)
            if (tv.p, tv.q) != (q, p):
                res.fail(f"dual of {t} lives in PP({tv.p},{tv.q})")
            if corr.dual(tv) != t:
                res.fail(f"dual is not an involution at {t}")
            geo = dual_orbit_check(t, rng, trials)
            if geo != tv:
                res.fail(f"{t}: combinatorial dual {tv}, geometric {geo}")
    return res


@_timed
def tau_hat_consistency(pmax: int = 3, qmax: int = 3, *, seed: int = 0) -> CheckResult:
    """Relative position of the bordered flags equals the bordered matrix."""
    res = CheckResult("tau_hat_consistency", True)
    rng = _rng(seed, "tau_hat_consistency")
    for p, q in _pairs(pmax, qmax):
        for t in enumerate_pp(p, q):
            res.cases += 1
            x = sample_orbit_point(t, rng).x
            got = schubert_position(*bordered_flags(x))
            if got != tau_hat(t):
                res.fail(f"{t}: position {got.tolist()}, tau_hat {tau_hat(t).tolist()}")
    return res


def _hook_contents(n: int) -> list[tuple[int, ...]]:
    out = []
    for m in range(1, n + 1):
        k = n - m
        out.append((1,) * k + (m,))
        out.append((m,) + (1,) * k)
    return sorted(set(out))


@_timed
def tableau_engine(max_boxes: int = 6, pmax: int = 3, qmax: int = 3, *, seed: int = 0,
                   general_total: int = 5) -> CheckResult:
    """Evacuation is an involution; rectification and evacuation match the quotient flags.

    The geometric comparison runs on every bordered matrix with ``p <= pmax``,
    ``q <= qmax`` and on every margin matrix of total at most ``general_total``;
    the latter are the ones whose tableaux have repeated labels.
    """
    res = CheckResult("tableau_engine", True)
    for n in range(1, max_boxes + 1):
        for lam in partitions_of(n):
            tabs = enumerate_syt(lam)
            if len(tabs) != count_syt(lam):
                res.fail(f"|SYT{lam}| = {len(tabs)}, count_syt says {count_syt(lam)}")
            for content in [(1,) * n] + _hook_contents(n):
                for t in tabs if content == (1,) * n else enumerate_tableaux(lam, content):
                    res.cases += 1
                    e = evacuate(t)
                    if tuple(e.content) != tuple(reversed(t.content)) or evacuate(e) != t:
                        res.fail(f"evacuation fails on {t}")
                    for i in range(len(t) + 1):
                        r = rectify(t, i)
                        if tuple(r.content) != tuple(t.content)[i:] or r[len(r)].size != t[len(t)].size - t[i].size:
                            res.fail(f"rectify({t}, {i}) = {r}")
    rng = _rng(seed, "tableau_engine")
    matrices = [tau_hat(t) for p, q in _pairs(pmax, qmax) for t in enumerate_pp(p, q)]
    matrices += probe_matrices(general_total)
    for m in matrices:
        z, flag, tab = oracle_schubert_tableaux(m, rng)
        for i in range(1, len(flag.composition)):
            res.cases += 1
            if rectify(tab, i) != quotient_chain(z, flag, i):
                res.fail(f"rectify({tab}, {i}) = {rectify(tab, i)}, quotient flag gives {quotient_chain(z, flag, i)}")
        res.cases += 1
        if evacuate(tab) != evacuation_chain(z, flag):
            res.fail(f"evacuate({tab}) = {evacuate(tab)}, geometry gives {evacuation_chain(z, flag)}")
    return res


@_timed
def poset_lemmas(pmax: int = 4, qmax: int = 4) -> CheckResult:
    """``closure_leq`` implies dominance of shapes and of sign counts; ``sh <= d+ + d-``."""
    res = CheckResult("poset_lemmas", True)
    for p in range(pmax + 1):
        for q in range(qmax + 1):
            diagrams = enumerate_syd((q, p))
            for d in diagrams:
                res.cases += 1
                if not dominance_leq(shape(d), add(lambda_plus(d), lambda_minus(d))):
                    res.fail(f"{d}: shape not dominated by d+ + d-")
            for d in diagrams:
                for e in diagrams:
                    if not closure_leq(d, e):
                        continue
                    res.cases += 1
                    if not dominance_leq(shape(d), shape(e)):
                        res.fail(f"{d} <= {e} but shapes are not in dominance order")
                    if not (dominance_leq(lambda_plus(d), lambda_plus(e))
                            and dominance_leq(lambda_minus(d), lambda_minus(e))):
                        res.fail(f"{d} <= {e} but sign counts are not in dominance order")
                    if d != e and closure_leq(e, d):
                        res.fail(f"closure order is not antisymmetric on {d}, {e}")
    return res


def run_all(pmax: int = 3, qmax: int = 3, *, seed: int = 0, trials: int = 5) -> list[CheckResult]:
    """Every check at the given bounds; the CLI ``verify`` command."""
    return [
        census_identity(pmax, qmax),
        round_trip(pmax, qmax, seed=seed),
        oracle_agreement(pmax, qmax, seed=seed, trials=trials),
        fast_path_agreement(pmax, qmax, seed=seed, trials=trials),
        admissibility(pmax, qmax, image_bound=min(pmax, qmax)),
        module_types(seed=seed, samples=100),
        duality(pmax, qmax, seed=seed, trials=trials),
        tau_hat_consistency(pmax, qmax, seed=seed),
        tableau_engine(max_boxes=5, pmax=pmax, qmax=qmax, seed=seed, general_total=4),
        poset_lemmas(pmax, qmax),
    ]
