import pytest

from kkschur.errors import OutOfRange
from kkschur.rectangles import (
    RectangleMultiset,
    is_rectangle_union,
    rectangle_decomposition,
    rectangle_multisets,
)


def test_parse_and_partition():
    P = RectangleMultiset.parse(3, "2^1,3^2")
    assert P.entries == ((2, 1), (3, 2))
    assert P.partition() == (3, 3, 2, 2)
    assert P.total == 3
    assert str(RectangleMultiset.parse(3, str(P))) == str(P)


def test_alpha_counts_distinct_widths():
    P = RectangleMultiset.of(3, {1: 2, 3: 1})
    assert [P.alpha(u) for u in range(5)] == [2, 2, 1, 1, 0]
    assert P.max_width() == 3
    assert P.without_multiplicity().entries == ((1, 1), (3, 1))


def test_of_accepts_widths():
    assert RectangleMultiset.of(3, [2, 2, 1]).entries == ((1, 1), (2, 2))


def test_width_out_of_range():
    with pytest.raises(OutOfRange):
        RectangleMultiset.of(3, [4])


@pytest.mark.parametrize("lam, widths", [((2, 2, 1, 1, 1), (1, 2)), ((3, 3), (3,)), ((3, 2, 2, 1, 1, 1), (1, 2, 3))])
def test_decomposition(lam, widths):
    assert is_rectangle_union(lam, 3)
    assert rectangle_decomposition(lam, 3).widths == widths


def test_not_a_union():
    assert not is_rectangle_union((2, 1), 3)
    assert rectangle_decomposition((2, 1), 3) is None


def test_enumeration_bounds():
    ms = rectangle_multisets(3, 2, 2)
    assert all(1 <= P.total <= 2 for P in ms)
    assert len(ms) == 3 + 6
    assert len(rectangle_multisets(3, 3, distinct_only=True)) == 7
