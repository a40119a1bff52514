import pytest
from hypothesis import given, strategies as st

from horoclassify.horofan import (
    Color,
    ColoredFanRank1,
    NotProjectiveError,
    color_images,
    enumerate_rank1_embeddings,
    is_smooth_picard1_config,
    picard_number,
)
from horoclassify.rootsys import root_system, simple_types

PAIRS = [(str(t), a, b) for t in simple_types(7) for a in range(1, t.rank + 1) for b in range(1, t.rank + 1) if a != b]


@pytest.mark.parametrize("name, a, b", PAIRS[::7])
def test_two_colors_hit_opposite_rays(name, a, b):
    rs = root_system(name)
    gen = tuple(x - y for x, y in zip(rs.fundamental_weight(a), rs.fundamental_weight(b)))
    assert color_images(rs, gen, [a, b]) == {a: 1, b: -1}


def test_four_embeddings_and_their_picard_numbers():
    fans = enumerate_rank1_embeddings({"Da": 1, "Db": -1})
    assert len(fans) == 4
    assert [picard_number(f) for f in fans] == [3, 2, 2, 1]
    assert fans[-1].attached == ("Da", "Db")


@given(st.lists(st.sampled_from([1, -1, 0]), min_size=1, max_size=5))
def test_picard_drops_by_one_per_attached_color(images):
    named = {f"D{k}": v for k, v in enumerate(images)}
    for f in enumerate_rank1_embeddings(named):
        assert picard_number(f) == 1 + len(images) - len(f.attached)
        assert all(named[n] != 0 for n in f.attached)


def test_incomplete_fan_is_not_projective():
    f = ColoredFanRank1((1,), (Color("Da", 1, True), Color("Db", -1)))
    with pytest.raises(NotProjectiveError):
        picard_number(f)


def test_invalid_fans_rejected():
    with pytest.raises(ValueError):
        ColoredFanRank1((1, 1), ())
    with pytest.raises(ValueError):
        ColoredFanRank1((1, -1), (Color("D", 0, True),))
    with pytest.raises(ValueError):
        ColoredFanRank1((2, -1), ())


def test_smooth_picard_one_configurations():
    assert is_smooth_picard1_config(1, [(1,), (-1,)])
    assert is_smooth_picard1_config(2, [(1, 0), (0, 1), (-1, -1)])
    assert not is_smooth_picard1_config(2, [(1, 0), (1, 0)])
    assert not is_smooth_picard1_config(2, [(2, 0)])
    # rays not forming a basis
    assert not is_smooth_picard1_config(2, [], rays=[(2, 0), (0, 1), (-2, -1)])
    assert not is_smooth_picard1_config(2, [], rays=[(1, 0), (0, 1), (1, 1)])
