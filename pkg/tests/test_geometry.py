import pytest

from blpack.geometry import Packing, Placement, Point, Rect, fits_in_strip, overlaps, packing_height


def test_rect_rejects_zero_sides():
    with pytest.raises(ValueError):
        Rect(0, 3)
    with pytest.raises(ValueError):
        Rect(2, -1)


def test_touching_rectangles_do_not_overlap():
    a = Placement(Rect(2, 2), Point(0, 0))
    assert not overlaps(a, Placement(Rect(2, 2), Point(2, 0)))
    assert not overlaps(a, Placement(Rect(2, 2), Point(0, 2)))
    assert not overlaps(a, Placement(Rect(1, 1), Point(2, 2)))
    assert overlaps(a, Placement(Rect(2, 2), Point(1, 1)))


def test_strip_bounds():
    assert fits_in_strip(Placement(Rect(3, 1), Point(2, 0)), 5)
    assert not fits_in_strip(Placement(Rect(3, 1), Point(3, 0)), 5)
    assert not fits_in_strip(Placement(Rect(1, 1), Point(0, -1)), 5)


def test_packing_bookkeeping():
    pk = Packing(5, [Rect(2, 3), Rect(1, 1)])
    assert pk.origins() == [None, None] and packing_height(pk) == 0
    pk.place(0, (0, 0))
    pk.place(1, Point(2, 0))
    assert pk.origins() == [Point(0, 0), Point(2, 0)]
    assert packing_height(pk) == 3
    assert Point(1, 2).shift(dy=1) == Point(1, 3)
