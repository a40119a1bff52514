import pytest
from hypothesis import given, strategies as st

from horoclassify.dynkin import diagram, full_subdiagram
from horoclassify.rootsys import parse_type, root_system
from horoclassify.twoorbits import (
    LABELS,
    CandidateTriple,
    allowed_local_model,
    case_verdict,
    corsmooth_filter,
    dim_consistency,
    enumerate_product_triples,
    enumerate_simple_triples,
    fiber_case,
    fiber_case_table,
    isotropic_grassmannian_dim,
    lemma4cas_table,
)
from oracles import expected_product_triples, expected_simple_triples, printed_lists

MAX = 12


def _keys(entries):
    return {(lab, str(tr.g), tr.p_omit, frozenset(tr.q_omit)) for lab, tr, _, _ in entries}


@pytest.fixture(scope="module")
def simple():
    return enumerate_simple_triples(MAX)


@pytest.fixture(scope="module")
def product():
    return enumerate_product_triples(MAX)


def test_simple_survivors_match_printed_list(simple):
    assert _keys(simple) == expected_simple_triples(MAX)


def test_product_survivors_match_printed_list(product):
    assert _keys(product) == expected_product_triples(MAX)


def test_every_label_occurs(simple, product):
    assert {lab for lab, *_ in simple + product} == set(LABELS)


def test_strict_d_labelling_excludes_spinor_end():
    # P(w1), Q = P(w4) in D5 is not smooth along the closed orbit
    assert not corsmooth_filter(parse_type("D5"), 1, 4)
    assert corsmooth_filter(parse_type("D5"), 1, 2)


def _full_weight(g, coeffs):
    rs = root_system(g)
    return rs.weight({(rs.rank if k == "0" else int(k)): c for k, c in coeffs.items()})


@pytest.mark.parametrize("label", sorted(printed_lists()["local_weights"]))
def test_local_weights_and_smoothness(label):
    entry = printed_lists()["local_weights"][label]
    v = case_verdict(label)
    assert str(v.triple.g) == entry["G"]
    assert v.local_weight == _full_weight(v.triple.g, entry["weight"])
    assert v.local_model_ok is entry["smooth"]
    assert v.outcome == ("nonhomogeneous" if entry["smooth"] else "nonsmooth")


@pytest.mark.parametrize("label, dim", sorted(printed_lists()["homogeneous_targets"].items()))
def test_printed_target_dims(label, dim):
    v = case_verdict(label)
    assert v.target_dim == dim == v.dim_GH


def test_all_homogeneous_survivors_are_dimension_consistent(simple, product):
    for lab, tr, _, _ in simple + product:
        v = case_verdict(lab, tr)
        if v.outcome == "homogeneous":
            assert v.dim_GH == v.target_dim, (lab, tr.describe())
            assert dim_consistency(lab, tr)


def test_fiber_table_weights():
    printed = printed_lists()["fiber_local_weights"]
    assert [f.row for f in fiber_case_table()] == list(printed)
    for row, w in printed.items():
        assert fiber_case(row).local_weight == {int(k): c for k, c in w.items()}


@pytest.mark.parametrize("n", range(4, 10))
def test_fiber_dims(n):
    # Q^(n-1), P^(n-1), Gr(2, 2n), Q^7 and P^7
    assert fiber_case("1a").fiber_dim(n) == n - 1
    assert fiber_case("1b").fiber_dim(n) == n - 1
    assert fiber_case("2").fiber_dim(n) == 2 * (2 * n - 2)
    assert fiber_case("3a").fiber_dim() == fiber_case("3b").fiber_dim() == 7


@pytest.mark.parametrize("k, n, dim", [(1, 5, 3), (2, 7, 7), (2, 5, 3), (3, 7, 6), (4, 9, 10)])
def test_isotropic_grassmannian(k, n, dim):
    assert isotropic_grassmannian_dim(k, n) == dim


def test_four_levi_cases():
    rows = lemma4cas_table()
    assert [r["row"] for r in rows] == ["i", "ii", "iii", "iv"]
    assert all(r["dims_agree"] for r in rows)
    assert rows[3]["dim_target"] == 7 and rows[3]["dim_G/P"] == 5
    with pytest.raises(ValueError):
        lemma4cas_table(1)


@given(st.sampled_from(["B4", "C4", "F4", "D5", "A5"]), st.data())
def test_local_model_ignores_central_coordinates(name, data):
    d = diagram(parse_type(name))
    q = data.draw(st.sets(st.sampled_from(d.vertices), min_size=1, max_size=2))
    levi = full_subdiagram(d, [v for v in d.vertices if v not in q])
    w = data.draw(st.lists(st.integers(-2, 2), min_size=len(d.vertices), max_size=len(d.vertices)))
    shifted = [x + data.draw(st.integers(-3, 3)) if (k + 1) in q else x for k, x in enumerate(w)]
    assert allowed_local_model(levi, w) == allowed_local_model(levi, shifted)


def test_local_model_examples():
    d = diagram(parse_type("C3"))
    levi = full_subdiagram(d, [2, 3])  # C2
    assert allowed_local_model(levi, (5, 1, 0))
    assert not allowed_local_model(levi, (0, 0, 1))
    assert not allowed_local_model(levi, (0, 0, 0))


def test_triple_validation_and_description():
    with pytest.raises(ValueError):
        CandidateTriple("A3", 4, {1})
    with pytest.raises(ValueError):
        CandidateTriple("A3", 1, {1, 2, 3})
    assert CandidateTriple("G2xA1", 1, {2, 3}).describe() == {"G": "G2xA1", "P": "P(w1) x A1", "Q": "P(w2) x P(w0)"}
    with pytest.raises(ValueError):
        case_verdict("z")
    with pytest.raises(ValueError):
        dim_consistency("h")
