import random

import pytest

from blpack.geometry import Point
from blpack.hole_model import (EdgeClass, Hole, HoleError, classify_all, classify_edge,
                               compute_canonical_ordering, dump, nv, parse_dump, probe,
                               rect_hole, signed_area2, simplify_cycle, traverse, validate_bls)
from blpack.partitioning import qn_partition

from fixtures import BLS_FIGURE, bls_figure_hole, sample_bls_holes


@pytest.fixture(scope="module")
def corpus():
    return [h for _, h in sample_bls_holes(120, min_k=1)]


def test_orientation_is_normalized():
    cw = rect_hole(0, 0, 4, 3)
    ccw = Hole([(0, 0), (4, 0), (4, 3), (0, 3)])
    assert signed_area2(cw.vertices) < 0 and signed_area2(ccw.vertices) < 0
    assert cw.area() == ccw.area() == 12
    assert cw.key() == ccw.key()


def test_collinear_and_duplicate_vertices_merge():
    h = Hole([(0, 0), (0, 2), (0, 5), (3, 5), (3, 5), (6, 5), (6, 0)])
    assert h.nv == 4


def test_spike_across_seam_is_removed():
    pts = simplify_cycle([(0, 0), (0, 4), (4, 4), (4, 0), (2, 0), (5, 0)])
    assert len(pts) == 4


def test_non_rectilinear_rejected():
    with pytest.raises(HoleError):
        Hole([(0, 0), (1, 1), (2, 0)])


def test_rectangle_classes():
    h = rect_hole(0, 0, 1, 1)
    got = sorted(c.value for c in classify_all(h))
    assert got == sorted(c.value for c in (EdgeClass.LEFTMOST, EdgeClass.RIGHTMOST,
                                           EdgeClass.TOPMOST, EdgeClass.BOTMOST))


def test_figure_notch_n2():
    h = bls_figure_hole()
    co = h.canonical()
    n2 = co.notches[0]
    assert classify_edge(h, n2) is EdgeClass.LEFT_NOTCH
    assert {h.vertex(n2), h.vertex(n2 + 1)} == {Point(12, 3), Point(12, 4)}


def _angle_class(h, i):
    """Independent classification: convex/reflex turns at both ends."""
    def turn(j):
        a, b, c = h.vertex(j - 1), h.vertex(j), h.vertex(j + 1)
        cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x)
        return "convex" if cross < 0 else "reflex"
    a, b = h.vertex(i), h.vertex(i + 1)
    d = "U" if b.y > a.y else "D" if b.y < a.y else "R" if b.x > a.x else "L"
    ends = {turn(i), turn(i + 1)}
    if ends == {"convex"}:
        return {"U": "leftmost", "D": "rightmost", "R": "topmost", "L": "botmost"}[d]
    if ends == {"reflex"}:
        return {"U": "left-notch", "D": "right-notch", "R": "top-notch", "L": "bottom-notch"}[d]
    return {"U": "plain-up", "D": "plain-down", "R": "plain-right", "L": "plain-left"}[d]


def test_classification_matches_angle_test(corpus):
    holes = corpus + [bls_figure_hole()]
    for h in holes:
        for i in range(h.nv):
            assert classify_edge(h, i).value == _angle_class(h, i)


def test_figure_canonical_ordering():
    h = bls_figure_hole()
    co = compute_canonical_ordering(h)
    assert co.k == 4
    assert len(co.notches) == 3
    assert [name for name, _ in co.sequence()] == ["R", "L1", "N2", "L2", "N3", "L3", "N4", "L4"]
    assert h.vertex(co.falling_corner) == Point(12, 15)
    xs = [h.vertex(e).x for e in co.leftmost]
    assert xs == [7, 1, 1, 0]
    assert h.vertex(co.rightmost).x == 24
    top = h.edge(co.topmost)
    assert top.y == 19


def test_rectangle_canonical():
    co = rect_hole(0, 0, 5, 2).canonical()
    assert co.k == 1 and co.notches == () and co.falling_corner is None


def test_canonical_counts_match_classification(corpus):
    for h in corpus:
        co = h.canonical()
        cls = classify_all(h)
        assert co.k == cls.count(EdgeClass.LEFTMOST)
        assert len(co.notches) == cls.count(EdgeClass.LEFT_NOTCH) == co.k - 1
        assert cls.count(EdgeClass.RIGHTMOST) == 1
        assert cls.count(EdgeClass.TOPMOST) == 1


def test_canonical_ordering_refuses_two_rightmost_edges():
    # two prongs on the right, hence two rightmost edges
    h = Hole([(0, 0), (0, 6), (6, 6), (6, 4), (2, 4), (2, 2), (6, 2), (6, 0)])
    assert not validate_bls(h)
    with pytest.raises(HoleError):
        compute_canonical_ordering(h)


def test_right_notch_reported():
    # U-shape opening rightward
    h = Hole([(0, 0), (0, 6), (6, 6), (6, 4), (2, 4), (2, 2), (6, 2), (6, 0)])
    res = validate_bls(h)
    assert not res and res.reason == "right notch"
    assert {res.where.a, res.where.b} == {Point(2, 2), Point(2, 4)}


def test_two_falling_corners_rejected():
    h = Hole([(0, 0), (0, 10), (2, 10), (2, 8), (4, 8), (4, 9), (6, 9), (6, 7), (8, 7), (8, 0)])
    assert not validate_bls(h)


def test_figure_and_rectangle_are_bls():
    assert validate_bls(bls_figure_hole())
    assert validate_bls(rect_hole(0, 0, 3, 3))


def test_traverse_full_cycle():
    h = rect_hole(0, 0, 3, 2)
    r = h.canonical().rightmost
    assert len(list(traverse(h, r, r))) == 4


def test_traverse_directions_mirror(corpus):
    for h in corpus[:40]:
        cw = [(e.a, e.b) for e in traverse(h, 0, 0)]
        acw = [(e.b, e.a) for e in traverse(h, 0, 0, clockwise=False)]
        assert sorted(cw) == sorted(acw)
        assert cw[1:] == acw[::-1][:-1] or cw == acw[::-1]


def test_nv():
    assert nv(rect_hole(0, 0, 1, 1)) == 4
    assert len(BLS_FIGURE) == 44 and nv(bls_figure_hole()) == 42


def test_qn_split_vertex_budget(corpus):
    for h in corpus:
        k = h.canonical().k
        if k < 2:
            continue
        parts = qn_partition(h).parts
        assert sum(p.nv for p in parts) <= h.nv + 4 * (k - 1)


def test_horizontal_edges_have_interior_on_correct_side(corpus):
    for h in corpus[:60]:
        for e in h.edges():
            if e.a.y != e.b.y:
                continue
            X = e.a.x + e.b.x  # doubled midpoint
            Y = 2 * e.a.y
            above, below = probe(h, X, Y + 1), probe(h, X, Y - 1)
            if e.b.x < e.a.x:  # leftward
                assert above == 1 and below == -1
            else:
                assert above == -1 and below == 1


def test_dump_round_trip():
    h = bls_figure_hole()
    text = dump(h)
    first = text.splitlines()[0]
    assert first == "24 15"
    assert parse_dump(text).key() == h.key()


def test_probe_rectangle():
    h = rect_hole(0, 0, 2, 2)
    assert probe(h, 1, 1) == 1
    assert probe(h, 0, 1) == 0
    assert probe(h, 5, 1) == -1


def test_random_rotation_invariance():
    rng = random.Random(5)
    pts = list(BLS_FIGURE)
    for _ in range(5):
        s = rng.randrange(len(pts))
        assert Hole(pts[s:] + pts[:s]).key() == bls_figure_hole().key()
