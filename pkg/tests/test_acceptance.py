"""Acceptance suite: one test per criterion, each printing a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the lines bypass output capture.
"""

import time

import pytest

from steinberg_rsk import verify
from steinberg_rsk.correspondence import dual
from steinberg_rsk.matrices import PartialPermutation, enumerate_pp, pp_count
from steinberg_rsk.partitions import count_syt
from steinberg_rsk.signed_diagrams import enumerate_asyd, lambda_minus, lambda_plus

SEED = 2024


@pytest.fixture
def report(capsys):
    def emit(number, title, passed, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if passed else 'FAIL'}] criterion {number} {title}: {detail}")

    return emit


def _summary(res, limit=None):
    text = f"{res.cases} cases in {res.seconds:.1f}s"
    if limit is not None:
        text += f" (limit {limit}s)"
    if res.failures:
        text += f"; first failure: {res.failures[0]}"
    return text


def test_criterion_1_census_identity(report):
    start = time.perf_counter()
    closed_form = {(p, q): pp_count(p, q) for p in range(1, 5) for q in range(1, 5)}
    weighted = {
        (p, q): sum(count_syt(lambda_plus(d)) * count_syt(lambda_minus(d)) for d in enumerate_asyd((q, p)))
        for p in range(1, 5) for q in range(1, 5)
    }
    listed = {(p, q): len(enumerate_pp(p, q)) for p in range(1, 5) for q in range(1, 5)}
    spots = (pp_count(1, 1), pp_count(2, 2), pp_count(2, 3), pp_count(3, 3)) == (2, 7, 13, 34)
    res = verify.census_identity(4, 4)
    elapsed = time.perf_counter() - start
    passed = closed_form == weighted == listed and spots and res.passed and elapsed < 10
    report(1, "census identity", passed, f"16 (p,q) pairs exact, spot values 2/7/13/34, "
                                         f"{elapsed:.1f}s (limit 10s)")
    assert passed, res.failures


def test_criterion_2_round_trip(report):
    res = verify.round_trip(3, 3, seed=SEED, sampled={4: 200, 5: 200})
    exhaustive = sum(pp_count(p, q) for p in range(1, 4) for q in range(1, 4))
    passed = res.passed and res.seconds < 60
    report(2, "round trip", passed, f"{exhaustive} exhaustive partial permutations plus their triples, "
                                    f"400 sampled at p=q=4,5; " + _summary(res, 60))
    assert passed, res.failures


def test_criterion_3_oracle_agreement(report):
    res = verify.oracle_agreement(3, 3, seed=SEED, trials=5)
    fast = verify.fast_path_agreement(3, 3, seed=SEED, trials=5)
    passed = res.passed and fast.passed and res.seconds + fast.seconds < 300
    report(3, "oracle agreement", passed, _summary(res, 300) + f"; variant RSK fast path {_summary(fast)}")
    assert passed, res.failures + fast.failures


def test_criterion_4_admissibility_equivalences(report):
    res = verify.admissibility(4, 4, image_bound=3)
    report(4, "admissibility equivalences", res.passed, _summary(res))
    assert res.passed, res.failures


def test_criterion_5_module_jordan_types(report):
    res = verify.module_types(9, samples=500, max_dim=10, seed=SEED)
    report(5, "module Jordan types", res.passed, _summary(res))
    assert res.passed, res.failures


def test_criterion_6_duality(report):
    res = verify.duality(3, 3, seed=SEED, trials=5)
    zero = PartialPermutation.zero(2, 2)
    anti = PartialPermutation(2, 2, [(1, 2), (2, 1)])
    ident = PartialPermutation(2, 2, [(1, 1), (2, 2)])
    e12 = PartialPermutation(2, 2, [(1, 2)])
    e21 = PartialPermutation(2, 2, [(2, 1)])
    fixtures = dual(zero) == anti and dual(anti) == zero and dual(ident) == e12 and dual(e12) == ident \
        and dual(e21) == e21
    passed = res.passed and fixtures
    report(6, "duality", passed, _summary(res) + f"; fixture pairs {'ok' if fixtures else 'WRONG'}")
    assert passed, res.failures


def test_criterion_7_tau_hat_consistency(report):
    res = verify.tau_hat_consistency(3, 3, seed=SEED)
    report(7, "bordered matrix consistency", res.passed, _summary(res))
    assert res.passed, res.failures


def test_criterion_8_tableau_engine(report):
    res = verify.tableau_engine(max_boxes=6, pmax=3, qmax=3, seed=SEED, general_total=5)
    report(8, "tableau engine", res.passed, _summary(res))
    assert res.passed, res.failures


def test_criterion_9_poset_lemmas(report):
    res = verify.poset_lemmas(4, 4)
    report(9, "poset lemmas", res.passed, _summary(res))
    assert res.passed, res.failures
