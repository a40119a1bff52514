import pytest
from hypothesis import given, strategies as st

from horoclassify import rootsys
from horoclassify.rootsys import (
    InvalidTypeError,
    is_antidominant,
    is_dominant,
    pairing,
    parse_type,
    root_system,
    simple_types,
)
from oracles import (
    TEXTBOOK_CARTAN,
    canonical_types,
    dominant_in_orbit,
    positive_root_count,
    roots_by_orbit,
    w0_levi_on_coweight,
    w0_levi_on_weight,
)

SMALL = [str(t) for t in simple_types(8)]
TINY = [str(t) for t in simple_types(4)]


@pytest.mark.parametrize("name", sorted(TEXTBOOK_CARTAN))
def test_cartan_matches_tables(name):
    assert [list(r) for r in root_system(name).cartan] == TEXTBOOK_CARTAN[name]


@pytest.mark.parametrize("name", SMALL)
def test_positive_roots_match_weyl_orbit(name):
    rs = root_system(name)
    roots = roots_by_orbit([list(r) for r in rs.cartan])
    positive = {r for r in roots if all(x >= 0 for x in r)}
    assert set(rs.positive_roots()) == positive
    assert len(roots) == 2 * len(positive)


@pytest.mark.parametrize("t", simple_types(8), ids=str)
def test_positive_root_counts(t):
    assert len(root_system(t).positive_roots()) == positive_root_count(t.family, t.rank)


def test_canonical_types_skip_duplicates():
    got = [(t.family, t.rank) for t in simple_types(9)]
    assert sorted(got) == sorted(canonical_types(9))
    assert ("B", 2) in [(t.family, t.rank) for t in simple_types(3, canonical=False)]


def test_parse_type_rejects_nonsense():
    for bad in ("X3", "E5", "F3", "G3", "A0", ""):
        with pytest.raises((InvalidTypeError, ValueError)):
            parse_type(bad)
    assert parse_type("G2xA1").rank == 3


@pytest.mark.parametrize(
    "name, levi, dim",
    [
        ("A4", [1, 3, 4], 6),      # Gr(2,5)
        ("B5", [2, 3, 4, 5], 9),   # odd quadric Q^9
        ("C4", [2, 3, 4], 7),      # P^7
        ("D6", [2, 3, 4, 5, 6], 10),
        ("B4", [1, 2, 3], 10),     # spinor variety of Spin(9)
        ("D5", [1, 2, 3, 4], 10),
        ("C3", [1, 2], 6),         # Lagrangian Grassmannian
        ("F4", [2, 3, 4], 15),
        ("E6", [1, 3, 4, 5, 6], 21),
        ("E7", [1, 2, 3, 4, 5, 6], 27),
        ("G2", [2], 5),
    ],
)
def test_flag_variety_dims(name, levi, dim):
    assert root_system(name).dim_flag_variety(levi) == dim


@pytest.mark.parametrize("name", SMALL)
def test_longest_word_length_is_number_of_positive_roots(name):
    rs = root_system(name)
    assert len(rs.longest_element_word(rs.vertices)) == len(rs.positive_roots())


@st.composite
def type_and_weight(draw, names=SMALL):
    rs = root_system(draw(st.sampled_from(names)))
    w = tuple(draw(st.lists(st.integers(-3, 3), min_size=rs.rank, max_size=rs.rank)))
    return rs, w


@given(type_and_weight(), st.data())
def test_reflection_is_involution(tw, data):
    rs, w = tw
    i = data.draw(st.sampled_from(rs.vertices))
    assert rs.reflect(i, rs.reflect(i, w)) == w
    assert rs.reflect_coweight(i, rs.reflect_coweight(i, w)) == w


@given(type_and_weight(), st.data())
def test_weyl_action_preserves_pairing(tw, data):
    rs, w = tw
    c = tuple(data.draw(st.lists(st.integers(-3, 3), min_size=rs.rank, max_size=rs.rank)))
    word = data.draw(st.lists(st.sampled_from(rs.vertices), max_size=12))
    assert pairing(rs.act_on_weight(word, w), rs.act_on_coweight(word, c)) == pairing(w, c)


@given(type_and_weight())
def test_dominant_representative(tw):
    rs, w = tw
    dom, word = rs.dominant_representative(w)
    assert is_dominant(dom)
    assert rs.act_on_weight(word, w) == dom
    assert rs.dominant_representative(dom) == (dom, ())


@given(type_and_weight(TINY))
def test_dominant_representative_against_orbit(tw):
    rs, w = tw
    assert rs.dominant_representative(w)[0] == dominant_in_orbit([list(r) for r in rs.cartan], w)


@given(type_and_weight(), st.data())
def test_levi_longest_element_swaps_dominant_and_antidominant(tw, data):
    rs, _ = tw
    levi = data.draw(st.sets(st.sampled_from(rs.vertices)))
    word = rs.longest_element_word(levi)
    assert len(word) == len(rs.positive_roots_supported_on(levi))
    w = tuple(
        data.draw(st.integers(0, 3)) if (k + 1) in levi else data.draw(st.integers(-3, 3))
        for k in range(rs.rank)
    )
    img = rs.act_on_weight(word, w)
    assert all(img[i - 1] <= 0 for i in levi)


@pytest.mark.parametrize("name", [str(t) for t in simple_types(5)])
def test_levi_longest_element_against_orbit_oracle(name):
    rs = root_system(name)
    cm = [list(r) for r in rs.cartan]
    for s in rs.vertices:
        levi = [v for v in rs.vertices if v != s]
        word = rs.longest_element_word(levi)
        cow = rs.simple_coroot(s)
        assert rs.act_on_coweight(word, cow) == w0_levi_on_coweight(cm, [v - 1 for v in levi], cow)
        for o in rs.vertices:
            lam = tuple(a - b for a, b in zip(rs.fundamental_weight(o), rs.fundamental_weight(s)))
            if o != s:
                assert rs.act_on_weight(word, lam) == w0_levi_on_weight(cm, [v - 1 for v in levi], lam)


def test_vertex_and_length_checks():
    rs = root_system("B3")
    with pytest.raises(IndexError):
        rs.reflect(4, (0, 0, 0))
    with pytest.raises(ValueError):
        rs.reflect(1, (0, 0))
    with pytest.raises(ValueError):
        pairing((1, 2), (1,))
    assert is_antidominant((0, -1)) and not is_antidominant((1, -1))
    assert rs.weight({1: 2, 3: -1}) == (2, 0, -1)


def test_module_wrappers_agree_with_methods():
    rs = root_system("C4")
    assert rootsys.positive_roots("C4") == rs.positive_roots()
    assert rootsys.longest_element_word("C4", [1, 2]) == rs.longest_element_word([1, 2])
    assert rootsys.cartan_matrix("C4") == rs.cartan
