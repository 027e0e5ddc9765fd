"""The bottom-left packer: a store of live holes, the per-rectangle search and
the hole update after each placement."""

from __future__ import annotations

import os
import time
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .geometry import Packing, Point, Rect, packing_height
from .hole_model import Hole, HoleError, probe
from .nice_hole_scan import VisitCounter
from .partitioning import all_bl_locs_bls

# When set, every search also runs without the bounding-box skip and the two
# answers are compared. Tests switch this on.
CHECK_SKIP = os.environ.get("BLPACK_CHECK_SKIP", "") not in ("", "0")

SearchFn = Callable[[Hole, Rect, Optional[VisitCounter]], set]


class PackError(RuntimeError):
    pass


@dataclass
class HoleStore:
    W: int
    ceiling: int
    holes: list[Hole] = field(default_factory=list)
    placed: int = 0

    def total_nv(self) -> int:
        return sum(h.nv for h in self.holes)

    def cycles(self) -> set:
        return {h.key() for h in self.holes}


def init_store(W: int, rects: Sequence[Rect]) -> HoleStore:
    if W < 1:
        raise ValueError("strip width must be positive")
    if not rects:
        raise ValueError("no rectangles: the initial hole would have zero height")
    if max(r.w for r in rects) > W:
        raise ValueError("a rectangle is wider than the strip")
    total = sum(r.h for r in rects)
    if total >= 2 ** 62:
        raise OverflowError("sum of heights exceeds the coordinate range")
    return HoleStore(W, total, [Hole([(0, 0), (0, total), (W, total), (W, 0)])])


@dataclass
class Step:
    """Work done for one placement."""

    holes_examined: int = 0
    edges_visited: int = 0
    candidates: int = 0
    nv_after: int = 0


def find_bl_location(store: HoleStore, r: Rect, step: Optional[Step] = None,
                     search: SearchFn = all_bl_locs_bls) -> Point:
    """Lexicographically smallest (y, x) BL-stable position over all holes."""
    best: Optional[tuple[int, int]] = None
    counter = VisitCounter()
    # holes in order of their lowest point, so that later ones can be skipped
    for h in sorted(store.holes, key=lambda h: h.bbox()[1]):
        x0, y0, x1, y1 = h.bbox()
        if best is not None and y0 > best[0]:
            break
        if x1 - x0 < r.w or y1 - y0 < r.h:
            if CHECK_SKIP and search(h, r, None, skip=False):
                raise AssertionError("bounding-box skip dropped a location")
            continue
        if step is not None:
            step.holes_examined += 1
        locs = search(h, r, counter)
        if CHECK_SKIP and search(h, r, None, skip=False) != locs:
            raise AssertionError("bounding-box skip changed the result")
        if step is not None:
            step.candidates += len(locs)
        for p in locs:
            if best is None or (p.y, p.x) < best:
                best = (p.y, p.x)
    if step is not None:
        step.edges_visited += counter.total
    if best is None:
        raise PackError(f"no hole admits {r.w}x{r.h}")
    return Point(best[1], best[0])


def _split_at(a: Point, b: Point, cuts) -> list[Point]:
    """a, the cut points strictly inside segment ab in travel order, b."""
    inner = [c for c in cuts if c != a and c != b and _on_segment(c, a, b)]
    inner.sort(key=lambda c: abs(c.x - a.x) + abs(c.y - a.y))
    return [a, *inner, b]


def _on_segment(c: Point, a: Point, b: Point) -> bool:
    if a.x == b.x:
        return c.x == a.x and min(a.y, b.y) <= c.y <= max(a.y, b.y)
    return c.y == a.y and min(a.x, b.x) <= c.x <= max(a.x, b.x)


def _unit(a: Point, b: Point) -> tuple[int, int]:
    return ((b.x > a.x) - (b.x < a.x), (b.y > a.y) - (b.y < a.y))


def _rank(d_in, d_out) -> int:
    cross = d_in[0] * d_out[1] - d_in[1] * d_out[0]
    if cross < 0:
        return 0
    if cross == 0 and d_in[0] * d_out[0] + d_in[1] * d_out[1] > 0:
        return 1
    return 2 if cross > 0 else 3


def carve(h: Hole, x: int, y: int, w: int, hh: int) -> list[Hole]:
    """Holes left over after placing the box [x, x+w] x [y, y+hh] inside h.

    The hole boundary and the box boundary (taken with the box on the left of
    travel) are cut at each other's vertices. Pieces running along both in
    opposite directions cancel; the remaining directed pieces are linked into
    cycles, always turning as far right as possible so that pinch points
    separate into distinct holes.
    """
    corners = [Point(x, y), Point(x + w, y), Point(x + w, y + hh), Point(x, y + hh)]
    V = h.vertices
    n = len(V)
    segs: Counter = Counter()
    for i in range(n):
        pts = _split_at(V[i], V[(i + 1) % n], corners)
        for a, b in zip(pts, pts[1:]):
            segs[(a, b)] += 1
    # anticlockwise around the box
    for k in range(4):
        a, b = corners[k], corners[(k + 1) % 4]
        pts = _split_at(a, b, V)
        for u, v in zip(pts, pts[1:]):
            if segs[(v, u)]:
                segs[(v, u)] -= 1
            else:
                segs[(u, v)] += 1
    out: dict[Point, list[Point]] = defaultdict(list)
    for (a, b), c in segs.items():
        for _ in range(c):
            out[a].append(b)
    holes: list[Hole] = []
    while out:
        start = min(out)
        u, v = start, out[start].pop()
        if not out[start]:
            del out[start]
        cyc = [start]
        while v != start:
            cyc.append(v)
            nxt = out.get(v)
            if not nxt:
                raise HoleError("boundary splice left an open chain", v)
            d = _unit(u, v)
            w_ = min(nxt, key=lambda q: _rank(d, _unit(v, q)))
            nxt.remove(w_)
            if not nxt:
                del out[v]
            u, v = v, w_
        holes.append(Hole(cyc))
    return holes


def place_and_update(store: HoleStore, r: Rect, at: Point) -> None:
    X, Y = 2 * at.x + 1, 2 * at.y + 1
    for j, h in enumerate(store.holes):
        x0, y0, x1, y1 = h.bbox()
        if x0 <= at.x < x1 and y0 <= at.y < y1 and probe(h, X, Y) > 0:
            break
    else:
        raise PackError(f"no hole contains the lower-left cell at {tuple(at)}")
    if at.x + r.w > x1 or at.y + r.h > y1:
        raise PackError("rectangle leaves its hole")
    store.holes[j:j + 1] = carve(h, at.x, at.y, r.w, r.h)
    store.placed += 1


@dataclass
class PackReport:
    packing: Packing
    height: int
    steps: list[Step]
    wall_ms: float

    @property
    def total_edge_visits(self) -> int:
        return sum(s.edges_visited for s in self.steps)


def _pack(W: int, rects: Sequence[Rect], search: SearchFn,
          observer: Optional[Callable[[HoleStore, Packing], None]] = None) -> PackReport:
    t0 = time.perf_counter()
    rects = list(rects)
    store = init_store(W, rects)
    pk = Packing(W, rects)
    steps = []
    for i, r in enumerate(rects):
        st = Step()
        at = find_bl_location(store, r, st, search)
        place_and_update(store, r, at)
        pk.place(i, at)
        st.nv_after = store.total_nv()
        steps.append(st)
        if observer is not None:
            observer(store, pk)
    return PackReport(pk, packing_height(pk), steps, (time.perf_counter() - t0) * 1e3)


def pack(W: int, rects: Sequence[Rect],
         observer: Optional[Callable[[HoleStore, Packing], None]] = None) -> PackReport:
    """Bottom-left packing of ``rects`` in input order.

    ``observer`` is called with the hole store and the partial packing after
    every placement.
    """
    return _pack(W, rects, all_bl_locs_bls, observer)
