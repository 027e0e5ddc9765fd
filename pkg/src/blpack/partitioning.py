"""Reducing a BLS-hole to nice holes.

Each left notch N_i (i >= 2) has its upper vertex Q_i. The vertical segment
from Q_i up to the boundary (ending at QN_i) and the horizontal segment from
Q_i rightward (ending at QW_i) are the two cuts used here:

* cutting along every Q_i-QN_i segment gives k nice holes S_1..S_k;
* cutting first along the Q_i-QW_i segments that are shorter than the
  rectangle width leaves sub-holes in which every remaining notch is wide;
  there each S_i can be grown by the box [x(Q_i), x(QW_i)] x [y(Q_i), y(QN_i)]
  (minus the part above the falling corner, if that corner lies in the box)
  so that no placement straddling two S_i is missed.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .geometry import Point, Rect
from .hole_model import Hole, HoleError, probe
from .nice_hole_scan import VisitCounter, all_bl_locs


@dataclass(frozen=True)
class Anchor:
    """Cut endpoints of notch i. ``*_edge`` is the boundary edge holding the point."""

    i: int
    q: Point
    q_vertex: int
    qn: Optional[Point] = None
    qn_star: Optional[Point] = None
    qn_edge: int = -1
    qw: Optional[Point] = None
    qw_edge: int = -1


@dataclass
class NotchAnchors:
    anchors: dict[int, Anchor] = field(default_factory=dict)

    def __getitem__(self, i: int) -> Anchor:
        return self.anchors[i]

    def __iter__(self):
        return iter(self.anchors[i] for i in sorted(self.anchors))

    def __len__(self) -> int:
        return len(self.anchors)


def _notch_table(h: Hole) -> dict[int, int]:
    """Edge index of N_i -> i."""
    return {e: j + 2 for j, e in enumerate(h.canonical().notches)}


def compute_qn_points(h: Hole, counter: Optional[VisitCounter] = None) -> dict[int, tuple]:
    """QN_i, QN_i* and the edge holding QN_i, by one clockwise pass from R."""
    co = h.canonical()
    notch = _notch_table(h)
    V = h.vertices
    n = h.nv
    out: dict[int, tuple] = {}
    pending: list[tuple[int, Point]] = []
    start = co.rightmost
    for s in range(n):
        e = (start + s) % n
        a, b = V[e], V[(e + 1) % n]
        if counter is not None:
            counter.anchors += 1
        if a.y == b.y and a.x < b.x:
            while pending and a.x < pending[-1][1].x <= b.x:
                i, q = pending.pop()
                if a.y <= q.y:
                    raise HoleError(f"upward ray from Q_{i} resolved below it", q)
                hit = Point(q.x, a.y)
                nxt = V[(e + 2) % n]
                if hit == b and nxt.x == b.x and nxt.y < b.y:
                    out[i] = (nxt, b, (e + 1) % n)
                else:
                    out[i] = (hit, hit, e)
        if e in notch:
            pending.append((notch[e], b))
    if pending or len(out) != len(notch):
        raise HoleError("some QN point was not found before returning to R", pending)
    return out


def compute_qw_points(h: Hole, counter: Optional[VisitCounter] = None) -> dict[int, tuple]:
    """QW_i and the edge holding it, by one anticlockwise pass from the topmost edge."""
    co = h.canonical()
    notch = _notch_table(h)
    V = h.vertices
    n = h.nv
    out: dict[int, tuple] = {}
    pending: list[tuple[int, Point]] = []
    t = co.topmost
    for s in range(n):
        e = (t - s) % n
        a, b = V[(e + 1) % n], V[e]  # anticlockwise travel a -> b
        if counter is not None:
            counter.anchors += 1
        if a.x == b.x and a.y < b.y:
            while pending and a.y < pending[-1][1].y <= b.y:
                i, q = pending.pop()
                if a.x <= q.x:
                    raise HoleError(f"rightward ray from Q_{i} resolved left of it", q)
                hit = Point(a.x, q.y)
                nxt = V[(e - 1) % n]
                if hit == b and nxt.y == b.y and nxt.x < b.x:
                    out[i] = (nxt, (e - 1) % n)
                else:
                    out[i] = (hit, e)
        if e in notch:
            pending.append((notch[e], a))
    if pending or len(out) != len(notch):
        raise HoleError("some QW point was not found before returning to the top", pending)
    return out


def compute_anchors(h: Hole, counter: Optional[VisitCounter] = None) -> NotchAnchors:
    co = h.canonical()
    qn = compute_qn_points(h, counter)
    qw = compute_qw_points(h, counter)
    res = NotchAnchors()
    n = h.nv
    for j, e in enumerate(co.notches):
        i = j + 2
        qv = (e + 1) % n
        p, ps, pe = qn[i]
        w, we = qw[i]
        res.anchors[i] = Anchor(i, h.vertices[qv], qv, p, ps, pe, w, we)
    return res


# ---------------------------------------------------------------------------
# cutting a hole along chords


def _turn_rank(d_in: tuple[int, int], d_out: tuple[int, int]) -> int:
    cross = d_in[0] * d_out[1] - d_in[1] * d_out[0]
    if cross < 0:
        return 0  # right turn
    if cross == 0 and d_in[0] * d_out[0] + d_in[1] * d_out[1] > 0:
        return 1  # straight on
    if cross > 0:
        return 2
    return 3  # back the way we came


def _unit(a: Point, b: Point) -> tuple[int, int]:
    return ((b.x > a.x) - (b.x < a.x), (b.y > a.y) - (b.y < a.y))


def split_hole(h: Hole, chords: Sequence[tuple[Point, int, Point, int]]) -> list[Hole]:
    """Cut h along interior axis-parallel chords.

    Each chord is (p, ep, q, eq) where p lies on edge ep of h and q on edge
    eq. Chords may share endpoints but must not cross. Faces are traced with
    a sharpest-right-turn rule, so every piece comes out clockwise.
    """
    if not chords:
        return [h]
    V = h.vertices
    n = h.nv
    extra: dict[int, list[Point]] = defaultdict(list)
    for p, ep, q, eq in chords:
        for pt, e in ((p, ep), (q, eq)):
            a, b = V[e], V[(e + 1) % n]
            if pt == a or pt == b:
                continue
            if not (min(a.x, b.x) <= pt.x <= max(a.x, b.x) and min(a.y, b.y) <= pt.y <= max(a.y, b.y)):
                raise HoleError(f"chord end {pt} is not on edge {e}", (a, b))
            extra[e].append(pt)
    ring: list[Point] = []
    for e in range(n):
        a = V[e]
        ring.append(a)
        if e in extra:
            pts = sorted(set(extra[e]), key=lambda p: abs(p.x - a.x) + abs(p.y - a.y))
            ring.extend(pts)
    out: dict[Point, list[Point]] = defaultdict(list)
    m = len(ring)
    for k in range(m):
        out[ring[k]].append(ring[(k + 1) % m])
    for p, _, q, _ in chords:
        out[p].append(q)
        out[q].append(p)

    used: set[tuple[Point, Point]] = set()
    pieces: list[Hole] = []
    limit = 2 * (m + 2 * len(chords))
    for u0 in ring:
        for v0 in out[u0]:
            if (u0, v0) in used:
                continue
            cyc = []
            u, v = u0, v0
            while True:
                used.add((u, v))
                cyc.append(u)
                u, v = v, _next(out, u, v)
                if (u, v) == (u0, v0):
                    break
                if len(cyc) > limit:
                    raise HoleError("face tracing does not close")
            pieces.append(Hole(cyc))
    return pieces


def _next(out, u: Point, v: Point) -> Point:
    outs = out[v]
    if len(outs) == 1:
        return outs[0]
    d = _unit(u, v)
    return min(outs, key=lambda w: _turn_rank(d, _unit(v, w)))


# ---------------------------------------------------------------------------
# partitions


@dataclass
class PartitionResult:
    """Pieces of a hole and, per piece, the label of its origin.

    For QN partitions ``labels[j]`` is the notch index i of the leftmost edge
    L_i the piece contains (1 for the piece holding R of the parent).
    """

    parts: list[Hole]
    cuts: list[tuple[Point, Point]]
    labels: list[int] = field(default_factory=list)


def qw_partition(h: Hole, w: int, anchors: Optional[NotchAnchors] = None,
                 counter: Optional[VisitCounter] = None) -> PartitionResult:
    if h.canonical().k == 1:
        return PartitionResult([h], [])
    anchors = anchors or compute_anchors(h, counter)
    narrow = [a for a in anchors if a.qw.x - a.q.x < w]
    if not narrow:
        return PartitionResult([h], [])
    n = h.nv
    chords = [(a.q, (a.q_vertex - 1) % n, a.qw, a.qw_edge) for a in narrow]
    parts = split_hole(h, chords)
    return PartitionResult(parts, [(a.q, a.qw) for a in narrow])


def qn_partition(h: Hole, anchors: Optional[NotchAnchors] = None,
                 counter: Optional[VisitCounter] = None) -> PartitionResult:
    co = h.canonical()
    if co.k == 1:
        return PartitionResult([h], [], [1])
    anchors = anchors or compute_anchors(h, counter)
    n = h.nv
    chords = [(a.q, (a.q_vertex - 1) % n, a.qn, a.qn_edge) for a in anchors]
    parts = split_hole(h, chords)
    by_r = {(a.qn_star, a.q): a.i for a in anchors}
    labels = []
    for s in parts:
        r = s.canonical().rightmost
        key = (s.vertex(r), s.vertex(r + 1))
        labels.append(by_r.get(key, 1))
    if sorted(labels) != list(range(1, co.k + 1)):
        raise HoleError(f"QN partition produced labels {labels}")
    return PartitionResult(parts, [(a.q, a.qn) for a in anchors], labels)


def expansion_path(a: Anchor, cf: Optional[Point]) -> list[Point]:
    """Boundary from QN_i* to Q_i around B_i, replacing the cut."""
    if cf is not None and a.q.x <= cf.x <= a.qw.x and a.q.y <= cf.y <= a.qn.y:
        mid = [Point(cf.x, a.qn.y), cf, Point(a.qw.x, cf.y)]
    else:
        mid = [Point(a.qw.x, a.qn.y)]
    return [a.qn_star, a.qn, *mid, a.qw, a.q]


def expand_nice_hole(S: Hole, a: Optional[Anchor], cf: Optional[Point]) -> Hole:
    """S_i* for a piece of a QN partition (identity for S_1)."""
    if a is None:
        return S
    r = S.canonical().rightmost
    top, bot = S.vertex(r), S.vertex(r + 1)
    if (top, bot) != (a.qn_star, a.q):
        raise HoleError("piece does not end at the cut of its notch", (top, bot))
    V = S.vertices
    n = S.nv
    ring = [V[(r + 1 + t) % n] for t in range(n - 1)]  # Q_i ... up to the vertex before QN_i*
    return Hole(ring + expansion_path(a, cf)[:-1])


def _fits_bbox(h: Hole, r: Rect) -> bool:
    x0, y0, x1, y1 = h.bbox()
    return x1 - x0 >= r.w and y1 - y0 >= r.h


def all_bl_locs_bls(h: Hole, r: Rect, counter: Optional[VisitCounter] = None,
                    skip: bool = True) -> set[Point]:
    """All feasible BL-stable positions for r inside a BLS-hole."""
    if skip and not _fits_bbox(h, r):
        return set()
    if h.canonical().k == 1:
        return set(all_bl_locs(h, r, counter))
    out: set[Point] = set()
    for part in qw_partition(h, r.w, counter=counter).parts:
        if skip and not _fits_bbox(part, r):
            continue
        out |= _wide_notch_locs(part, r, counter)
    return out


def _wide_notch_locs(h: Hole, r: Rect, counter: Optional[VisitCounter]) -> set[Point]:
    co = h.canonical()
    if co.k == 1:
        return set(all_bl_locs(h, r, counter))
    anchors = compute_anchors(h, counter)
    cf = h.vertex(co.falling_corner) if co.falling_corner is not None else None
    qn = qn_partition(h, anchors, counter)
    out: set[Point] = set()
    for S, i in zip(qn.parts, qn.labels):
        Sx = expand_nice_hole(S, anchors[i] if i >= 2 else None, cf)
        out |= set(all_bl_locs(Sx, r, counter))
    return out


# ---------------------------------------------------------------------------
# the original (flawed) scheme, kept for benchmarking


def flawed_all_bl_locs_bls(h: Hole, r: Rect, counter: Optional[VisitCounter] = None,
                           skip: bool = True) -> set[Point]:
    """Same result as :func:`all_bl_locs_bls`, computed without the QW pre-cut.

    Only the QN partition is used. For a notch whose QW segment is shorter
    than r is wide, the bar is allowed to keep sliding past the cut along the
    parent boundary: the whole part of h above that segment is searched again.
    Pieces report only the points they own, so the union is exact, but
    boundary stretches to the right of many narrow notches get swept once per
    notch.
    """
    if skip and not _fits_bbox(h, r):
        return set()
    co = h.canonical()
    if co.k == 1:
        return set(all_bl_locs(h, r, counter))
    anchors = compute_anchors(h, counter)
    cf = h.vertex(co.falling_corner) if co.falling_corner is not None else None
    qn = qn_partition(h, anchors, counter)
    owner = _Ownership(qn, anchors)
    n = h.nv
    out: set[Point] = set()
    for j, (S, i) in enumerate(zip(qn.parts, qn.labels)):
        if i >= 2 and anchors[i].qw.x - anchors[i].q.x < r.w:
            a = anchors[i]
            pieces = split_hole(h, [(a.q, (a.q_vertex - 1) % n, a.qw, a.qw_edge)])
            up = next(p for p in pieces if probe(p, 2 * a.q.x + 1, 2 * a.q.y + 1) > 0)
            found = all_bl_locs_bls(up, r, counter, skip=False)
        else:
            Sx = expand_nice_hole(S, anchors[i] if i >= 2 else None, cf)
            found = set(all_bl_locs(Sx, r, counter))
        out |= {p for p in found if owner(p) == j}
    return out


class _Ownership:
    """Assigns every point of the parent hole to one piece of a QN partition.

    A point on the cut of notch i belongs to the piece labelled i; any other
    point belongs to the piece whose closure contains it.
    """

    def __init__(self, qn: PartitionResult, anchors: NotchAnchors):
        self.parts = qn.parts
        self.index_of_label = {lab: j for j, lab in enumerate(qn.labels)}
        self.cuts = [(a.q.x, a.q.y, a.qn.y, a.i) for a in anchors]

    def __call__(self, p: Point) -> int:
        for x, y0, y1, i in self.cuts:
            if p.x == x and y0 <= p.y <= y1:
                return self.index_of_label[i]
        for j, s in enumerate(self.parts):
            if probe(s, 2 * p.x, 2 * p.y) >= 0:
                return j
        return -1
