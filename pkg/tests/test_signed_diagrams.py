import pytest
from hypothesis import given, strategies as st

from steinberg_rsk.partitions import Partition, dominance_leq, add
from steinberg_rsk.signed_diagrams import (
    MINUS,
    PLUS,
    Signature,
    SignatureMismatchError,
    SignedYoungDiagram,
    boxes_in_first_columns,
    closure_leq,
    dimension_identity_holds,
    dual,
    enumerate_asyd,
    enumerate_syd,
    hasse_edges,
    is_admissible,
    is_closure_maximal,
    lambda_minus,
    lambda_plus,
    odd_rows_agree,
    orbit_dim,
    shape,
    z_shape,
)

S = SignedYoungDiagram.parse


def test_canonical_form_and_render():
    d = S(["+", "-+-", "-"])
    assert d.render() == ["-+-", "-", "+"]
    assert S(["-", "-+-", "+"]) == d
    assert d.signature == Signature(2, 3)
    assert SignedYoungDiagram.from_json(d.to_json()) == d
    with pytest.raises(ValueError):
        S(["++"])


def test_sign_counts():
    d = S(["+-+", "-+"])
    assert lambda_plus(d) == Partition([2, 1])
    assert lambda_minus(d) == Partition([1, 1])
    assert shape(d) == Partition([3, 2])


@pytest.mark.parametrize("rows, expected", [
    (["+-", "+-"], True),
    (["+", "-"], False),
    (["+-", "-+"], True),
    (["+-+", "-+-"], False),
    (["+-+", "+"], True),
])
def test_admissibility_examples(rows, expected):
    assert is_admissible(S(rows)) is expected


@pytest.mark.parametrize("rows, expected", [
    (["-+-+"], [2, 1, 1]),
    (["+-", "+-"], [2, 2]),
    (["+-+-"], [3, 1]),
    (["+"], [1]),
    (["-"], [1]),
])
def test_z_shape_examples(rows, expected):
    assert z_shape(S(rows)) == Partition(expected)


def test_boxes_in_first_columns():
    assert boxes_in_first_columns(S(["+-+-"]), PLUS, 1) == 1
    assert boxes_in_first_columns(S(["-+-+"]), PLUS, 1) == 0
    assert boxes_in_first_columns(S(["-+-+"]), PLUS, 9) == 2
    with pytest.raises(ValueError):
        boxes_in_first_columns(S(["+"]), PLUS, 2)


def test_closure_examples():
    assert closure_leq(S(["+-", "+-"]), S(["+-+-"]))
    assert not closure_leq(S(["+-+-"]), S(["+-", "+-"]))
    d = S(["+-+", "-"])
    assert closure_leq(d, d)
    with pytest.raises(SignatureMismatchError):
        closure_leq(S(["+"]), S(["-"]))


def test_orbit_dim_and_dual():
    assert orbit_dim(S(["+-", "+-"])) == 4
    assert orbit_dim(S(["+", "-"])) == 0
    assert orbit_dim(S(["-+-+"])) == 6
    assert dual(S(["+-", "+-"])) == S(["-+", "-+"])
    assert dual(S(["-+-", "+"])) == S(["+-+", "-"])


def test_enumeration_counts():
    assert {tuple(d.render()) for d in enumerate_syd((1, 1))} == {("+-",), ("-+",), ("-", "+")}
    assert len(enumerate_asyd((1, 1))) == 2
    assert len(enumerate_syd((2, 2))) == 10
    assert {tuple(d.render()) for d in enumerate_asyd((2, 2))} == {
        ("+-", "+-"), ("-+", "-+"), ("-+", "+-"), ("+-+", "-"), ("-+-", "+"), ("+-+-",), ("-+-+",),
    }
    assert enumerate_syd((0, 0)) == [SignedYoungDiagram()]


@pytest.mark.parametrize("q, p", [(q, p) for q in range(5) for p in range(5)])
def test_enumeration_is_exact_and_duplicate_free(q, p):
    diagrams = enumerate_syd((q, p))
    assert len(set(diagrams)) == len(diagrams)
    assert all(d.signature == Signature(q, p) for d in diagrams)
    # dual swaps the signature and is a bijection between the classes
    assert sorted(map(repr, map(dual, diagrams))) == sorted(map(repr, enumerate_syd((p, q))))


@pytest.mark.parametrize("q, p", [(q, p) for q in range(5) for p in range(5)])
def test_admissibility_characterisations_agree(q, p):
    for d in enumerate_syd((q, p)):
        a = is_admissible(d)
        assert odd_rows_agree(d) == a
        assert dimension_identity_holds(d) == a
        assert is_closure_maximal(d) == a


@pytest.mark.parametrize("q, p", [(q, p) for q in range(4) for p in range(4)])
def test_closure_is_a_partial_order(q, p):
    ds = enumerate_syd((q, p))
    for a in ds:
        for b in ds:
            if a != b and closure_leq(a, b):
                assert not closure_leq(b, a)
                assert dominance_leq(shape(a), shape(b))
            for c in ds:
                if closure_leq(a, b) and closure_leq(b, c):
                    assert closure_leq(a, c)


def test_poset_for_signature_one_one():
    ds = sorted(enumerate_syd((1, 1)), key=lambda d: d.render())
    edges = hasse_edges(ds)
    bottom = ds.index(S(["+", "-"]))
    assert sorted(edges) == sorted((bottom, j) for j in range(3) if j != bottom)


rows = st.lists(st.tuples(st.integers(1, 6), st.sampled_from([PLUS, MINUS])), max_size=5)


@given(rows, st.randoms())
def test_canonical_form_ignores_row_order(rs, rnd):
    shuffled = list(rs)
    rnd.shuffle(shuffled)
    assert SignedYoungDiagram(rs) == SignedYoungDiagram(shuffled)


@given(rows)
def test_dual_is_an_involution_and_swaps_signature(rs):
    d = SignedYoungDiagram(rs)
    assert dual(dual(d)) == d
    assert (dual(d).signature.q, dual(d).signature.p) == (d.signature.p, d.signature.q)


@given(rows)
def test_shape_is_dominated_by_sum_of_sign_counts(rs):
    d = SignedYoungDiagram(rs)
    assert dominance_leq(shape(d), add(lambda_plus(d), lambda_minus(d)))
    assert z_shape(d).size == shape(d).size
