from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from noetherlab import (
    TaggedBox,
    box_contains,
    box_from_index,
    box_index,
    box_within,
    boxes_disjoint,
    first_box_containing,
    pt,
    squared_distance,
)
from noetherlab.errors import InvalidPointError
from noetherlab.geometry import iter_boxes_containing


def test_box_intervals():
    box = TaggedBox(tag=0, level=2, corners=(3,))
    assert box.intervals() == ((Fraction(3, 4), Fraction(5, 4)),)


def test_box_corner_bound_enforced():
    with pytest.raises(ValueError):
        TaggedBox(tag=0, level=0, corners=(2,))
    TaggedBox(tag=0, level=1, corners=(4,))  # 4 <= 4^1


def test_box_contains_is_strict():
    box = TaggedBox(tag=0, level=2, corners=(3,))  # (3/4, 5/4)
    assert box_contains(box, pt(1))
    assert not box_contains(box, pt(0))
    assert not box_contains(box, pt("3/4"))  # open endpoint


def test_box_equality_needs_tag():
    a = TaggedBox(tag=0, level=1, corners=(0,))
    b = TaggedBox(tag=1, level=1, corners=(0,))
    assert a != b and a.intervals() == b.intervals()


def test_first_index_is_first_box():
    assert box_from_index(1, 0) == TaggedBox(tag=0, level=0, corners=(-1,))


def test_enumeration_bijection_first_10k():
    for dim in (1, 2):
        for i in range(10_000):
            assert box_index(box_from_index(dim, i)) == i


def test_enumeration_order_is_index_order():
    # canonical order is defined as index order, so this is forced
    boxes = [box_from_index(1, i) for i in range(50)]
    assert [box_index(b) for b in boxes] == list(range(50))


@given(
    st.integers(min_value=0, max_value=3),
    st.integers(min_value=0, max_value=6),
    st.data(),
)
def test_roundtrip_from_box_side(level, tag, data):
    dim = data.draw(st.integers(min_value=1, max_value=3))
    bound = 4**level
    corners = tuple(
        data.draw(st.integers(min_value=-bound, max_value=bound)) for _ in range(dim)
    )
    box = TaggedBox(tag=tag, level=level, corners=corners)
    assert box_from_index(dim, box_index(box)) == box


def test_within_and_disjoint():
    outer = TaggedBox(tag=0, level=0, corners=(0,))  # (0, 2)
    inner = TaggedBox(tag=3, level=2, corners=(3,))  # (3/4, 5/4)
    assert box_within(inner, outer)
    assert not box_within(outer, inner)
    left = TaggedBox(tag=0, level=2, corners=(-1,))  # (-1/4, 1/4)
    assert boxes_disjoint(left, inner)
    assert not boxes_disjoint(outer, inner)


def test_iter_boxes_containing_matches_global_enumeration():
    x = pt("1/3")
    from_scan = []
    i = 0
    while len(from_scan) < 12:
        box = box_from_index(1, i)
        if box_contains(box, x):
            from_scan.append(box)
        i += 1
    gen = iter_boxes_containing(x)
    assert [next(gen) for _ in range(12)] == from_scan


def test_iter_boxes_tag_filter():
    x = pt(0)
    for box in [next(iter_boxes_containing(x, tag=t)) for t in range(4)]:
        assert box_contains(box, x)
    tagged = iter_boxes_containing(x, tag=2)
    assert all(next(tagged).tag == 2 for _ in range(8))


def test_first_box_within():
    within = TaggedBox(tag=0, level=0, corners=(0,))
    box = first_box_containing(pt(1), within=within)
    assert box_within(box, within) and box_contains(box, pt(1))


def test_squared_distance_exact():
    assert squared_distance(pt(0, 0), pt("3/5", "4/5")) == 1
    with pytest.raises(InvalidPointError):
        squared_distance(pt(0), pt(0, 0))
