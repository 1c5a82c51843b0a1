import random

import pytest
from hypothesis import given, settings, strategies as st

from steinberg_rsk.correspondence import (
    CorrespondenceTriple,
    census,
    dual,
    enumerate_triples,
    forward,
    inverse,
    pr,
)
from steinberg_rsk.matrices import MarginMatrix, PartialPermutation, enumerate_pp, pp_count, random_pp, tau_hat
from steinberg_rsk.signed_diagrams import SignedYoungDiagram, enumerate_asyd
from steinberg_rsk.tableaux import RowStandardTableau

S = SignedYoungDiagram.parse
R = RowStandardTableau
PP = PartialPermutation

COL = R([(1,), (1, 1)])
ROW = R([(1,), (2,)])
BOX = R([(1,)])
ZERO = PP.zero(2, 2)
ANTI = PP(2, 2, [(1, 2), (2, 1)])
IDENT = PP(2, 2, [(1, 1), (2, 2)])
E12 = PP(2, 2, [(1, 2)])
E21 = PP(2, 2, [(2, 1)])


def test_partial_permutation_validation():
    with pytest.raises(ValueError):
        PP(1, 1, [(1, 1), (1, 1)])
    with pytest.raises(ValueError):
        PP(2, 2, [(1, 1), (1, 2)])
    with pytest.raises(ValueError):
        PP(2, 2, [(3, 1)])
    assert PP.from_json(E12.to_json()) == E12
    assert PP.from_matrix([[0, 1], [0, 0]]) == E12


def test_tau_hat_examples():
    assert tau_hat(PP.zero(1, 1)) == MarginMatrix([[1, 0], [0, 1]])
    assert tau_hat(PP(1, 1, [(1, 1)])) == MarginMatrix([[0, 1], [1, 0]])
    assert tau_hat(ZERO) == MarginMatrix([[1, 1, 0], [0, 0, 1], [0, 0, 1]])
    m = tau_hat(PP(3, 2, [(2, 1)]))
    assert m.row_margins == (2, 1, 1, 1) and m.col_margins == (1, 1, 3)


@pytest.mark.parametrize("t, rows, q_tab, p_tab", [
    (PP.zero(1, 1), ["+-"], BOX, BOX),
    (ZERO, ["+-", "+-"], COL, COL),
    (IDENT, ["-+-+"], ROW, ROW),
    (E12, ["+-+-"], ROW, ROW),
])
def test_forward_fixtures(t, rows, q_tab, p_tab):
    assert forward(t) == CorrespondenceTriple(S(rows), q_tab, p_tab)
    assert forward(t, random.Random(0), method="oracle") == forward(t)


def test_pr_fixtures():
    assert pr(PP(1, 1, [(1, 1)])) == S(["-+"])
    assert pr(ANTI) == S(["-+", "-+"])
    assert pr(E21) == S(["+-", "-+"])


def test_inverse_fixtures():
    assert inverse(CorrespondenceTriple(S(["+-"]), BOX, BOX)) == PP.zero(1, 1)
    assert inverse(CorrespondenceTriple(S(["+-", "+-"]), COL, COL)) == ZERO
    assert inverse(CorrespondenceTriple(S(["+-+-"]), ROW, ROW)) == E12


def test_dual_fixtures():
    assert dual(ZERO) == ANTI and dual(ANTI) == ZERO
    assert dual(IDENT) == E12
    assert dual(E21) == E21


def test_triple_validation():
    with pytest.raises(ValueError):
        CorrespondenceTriple(S(["+", "-"]), BOX, BOX)  # not admissible
    with pytest.raises(ValueError):
        CorrespondenceTriple(S(["+-", "+-"]), ROW, COL)  # Q has the wrong shape
    with pytest.raises(ValueError):
        CorrespondenceTriple(S(["+-+-"]), R([(1, 1)]), ROW)  # not standard
    tr = forward(E21)
    assert CorrespondenceTriple.from_json(tr.to_json()) == tr


@pytest.mark.parametrize("p, q", [(p, q) for p in range(1, 4) for q in range(1, 4)])
def test_round_trips_exhaustive(p, q):
    for t in enumerate_pp(p, q):
        assert inverse(forward(t)) == t
    triples = enumerate_triples(p, q)
    assert len(triples) == pp_count(p, q)
    for tr in triples:
        assert forward(inverse(tr)) == tr


@pytest.mark.parametrize("p, q", [(p, q) for p in range(1, 4) for q in range(1, 4)])
def test_pr_image_is_exactly_the_admissible_diagrams(p, q):
    assert {pr(t) for t in enumerate_pp(p, q)} == set(enumerate_asyd((q, p)))


@pytest.mark.parametrize("p, q", [(p, q) for p in range(1, 4) for q in range(1, 4)])
def test_dual_is_an_involution(p, q):
    for t in enumerate_pp(p, q):
        tv = dual(t)
        assert (tv.p, tv.q) == (q, p)
        assert dual(tv) == t
        assert pr(tv) == SignedYoungDiagram((n, "+" if s == "-" else "-") for n, s in pr(t).rows)


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 5), st.integers(4, 5), st.integers(0, 2**32))
def test_round_trip_sampled_large(p, q, seed):
    t = random_pp(p, q, random.Random(seed))
    assert inverse(forward(t)) == t


def test_census_examples():
    assert census(1, 1).pp_count == 2 and census(1, 1).identity_holds
    report = census(2, 2)
    assert report.to_json()["pp_count"] == 7
    assert all(entry["count"] == 1 == entry["observed"] for entry in report.per_diagram)
    assert census(2, 3).pp_count == 13
    assert census(3, 3, check_forward=False).asyd_sum == 34
