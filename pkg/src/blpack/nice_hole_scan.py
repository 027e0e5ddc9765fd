"""Sweeps over a nice hole: the floor staircase C, the ceiling staircase D and
the BL-stable candidates M derived from them.

For a bar of width w whose left end sits at integer abscissa p (with
x(L) <= p <= x(R) - w), f(p) is the lowest height at which the bar fits above
the lower boundary and g(p) the highest height at which it fits below the
upper boundary. Both are step functions of p. C and D encode them as point
pairs, and M is read off from the breakpoints of f and g.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .geometry import Point, Rect
from .hole_model import Hole, HoleError


class HEdge(NamedTuple):
    """A horizontal boundary edge spanning [x0, x1] at height y, x0 < x1."""

    x0: int
    x1: int
    y: int


@dataclass
class VisitCounter:
    """Counts edge touches made by the sweeps (for the linear-work checks)."""

    fb: int = 0
    ft: int = 0
    anchors: int = 0

    @property
    def total(self) -> int:
        return self.fb + self.ft + self.anchors

    def add(self, other: "VisitCounter") -> None:
        self.fb += other.fb
        self.ft += other.ft
        self.anchors += other.anchors


class NiceHole:
    """Read-only view of a hole with a single leftmost edge.

    ``fb`` lists the horizontal edges of the lower boundary from L to R and
    ``ft`` those of the upper boundary. ``falling_corner`` is the point where
    the upper boundary drops, if it does.
    """

    def __init__(self, hole: Hole):
        co = hole.canonical()
        if co.k != 1:
            raise HoleError(f"nice hole must have one leftmost edge, found {co.k}")
        self.hole = hole
        n = hole.nv
        li, ri = co.leftmost[0], co.rightmost
        V = hole.vertices
        self.xL = V[li].x
        self.xR = V[ri].x
        self.yL_low, self.yL_high = V[li].y, V[(li + 1) % n].y

        # lower boundary: anticlockwise from the lower vertex of L to the lower vertex of R
        fb: list[HEdge] = []
        i = li
        stop = (ri + 1) % n
        while i != stop:
            j = (i - 1) % n
            a, b = V[i], V[j]
            if a.y == b.y:
                if b.x <= a.x:
                    raise HoleError("lower boundary is not x-monotone", (a, b))
                fb.append(HEdge(a.x, b.x, a.y))
            i = j
        # upper boundary: clockwise from the upper vertex of L to the upper vertex of R
        ft: list[HEdge] = []
        cf: Optional[Point] = None
        i = (li + 1) % n
        while i != ri:
            j = (i + 1) % n
            a, b = V[i], V[j]
            if a.y == b.y:
                if b.x <= a.x:
                    raise HoleError("upper boundary is not x-monotone", (a, b))
                ft.append(HEdge(a.x, b.x, a.y))
            elif b.y < a.y:
                if cf is not None:
                    raise HoleError("upper boundary drops twice", b)
                cf = b
            elif cf is not None:
                raise HoleError("upper boundary rises after its drop", (a, b))
            i = j
        _check_contiguous(fb, self.xL, self.xR)
        _check_contiguous(ft, self.xL, self.xR)
        self.fb = fb
        self.ft = ft
        self.falling_corner = cf

    @property
    def width(self) -> int:
        return self.xR - self.xL


def _check_contiguous(edges: Sequence[HEdge], xl: int, xr: int) -> None:
    if not edges or edges[0].x0 != xl or edges[-1].x1 != xr:
        raise HoleError("boundary does not span L to R")
    for a, b in zip(edges, edges[1:]):
        if a.x1 != b.x0:
            raise HoleError("boundary horizontals are not contiguous", (a, b))


def as_nice(s: Hole | NiceHole) -> NiceHole:
    return s if isinstance(s, NiceHole) else NiceHole(s)


# ---------------------------------------------------------------------------
# deque helpers


def setup(edges: Sequence[HEdge], i: int, j: int, counter: Optional[VisitCounter] = None) -> deque:
    """Deque of the edges in ``edges[i:j]`` that lie strictly above every later one.

    Front to back the edges run left to right with strictly decreasing y.
    """
    q: deque = deque()
    for t in range(j - 1, i - 1, -1):
        e = edges[t]
        if not q or e.y > q[0].y:
            q.appendleft(e)
    if counter is not None:
        counter.fb += j - i
    return q


def merge(q: deque, q2: deque, counter: Optional[VisitCounter] = None) -> deque:
    """Append ``q2`` to ``q``, dropping the back of ``q`` that ``q2`` dominates."""
    if q2:
        top = q2[0].y
        while q and q[-1].y <= top:
            q.pop()
            if counter is not None:
                counter.fb += 1
        q.extend(q2)
    return q


# ---------------------------------------------------------------------------
# staircases


@dataclass(frozen=True)
class CandidateStaircase:
    """Points c_0..c_{2k-1} encoding a step function on [lo, hi].

    Consecutive points (c_{2i}, c_{2i+1}) form horizontal segments. For the
    floor role ("C") the function value at p is the lowest segment covering p,
    for the ceiling role ("D") the highest.
    """

    points: tuple[Point, ...]
    role: str
    w: int

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @property
    def lo(self) -> int:
        return self.points[0].x

    @property
    def hi(self) -> int:
        return self.points[-1].x

    def runs(self) -> list[tuple[int, int]]:
        return decode_runs(self)

    def value(self, p: int) -> int:
        pick = min if self.role == "C" else max
        vals = [self.points[2 * i].y for i in range(len(self.points) // 2)
                if self.points[2 * i].x <= p <= self.points[2 * i + 1].x]
        if not vals:
            raise ValueError(f"{p} outside [{self.lo}, {self.hi}]")
        return pick(vals)

    def check(self) -> None:
        """Raise AssertionError if the pair and ordering invariants fail."""
        pts = self.points
        assert len(pts) % 2 == 0 and len(pts) >= 2, "odd or empty staircase"
        for a, b in zip(pts, pts[1:]):
            assert a.x <= b.x, "x decreases"
        for i in range(0, len(pts), 2):
            assert pts[i].y == pts[i + 1].y, "segment not horizontal"
        for i in range(1, len(pts) - 1, 2):
            a, b = pts[i], pts[i + 1]
            assert a.x == b.x and a.y != b.y, "pair is not a vertical step"


def staircase_from_runs(runs: Sequence[tuple[int, int]], hi: int, role: str, w: int) -> CandidateStaircase:
    """Encode a step function given as (start, value) runs over [runs[0][0], hi].

    Each step gets one pair placed at the abscissa where the function takes
    the lower value (floor) or the higher value (ceiling).
    """
    lo, v0 = runs[0]
    pts = [Point(lo, v0)]
    low_side = role == "C"
    for (_, u), (p, v) in zip(runs, runs[1:]):
        rises = v > u
        x = p - 1 if rises == low_side else p
        pts += [Point(x, u), Point(x, v)]
    pts.append(Point(hi, runs[-1][1]))
    return CandidateStaircase(tuple(pts), role, w)


def decode_runs(st: CandidateStaircase) -> list[tuple[int, int]]:
    """Inverse of :func:`staircase_from_runs`, in O(len(st))."""
    pts = st.points
    pick = min if st.role == "C" else max
    segs = [(pts[i].x, pts[i + 1].x, pts[i].y) for i in range(0, len(pts), 2)]
    out: list[tuple[int, int]] = []

    def emit(p: int, v: int) -> None:
        if out and out[-1][0] == p:
            out[-1] = (p, v)
            if len(out) >= 2 and out[-2][1] == v:
                out.pop()
        elif not out or out[-1][1] != v:
            out.append((p, v))

    for s, (a, b, y) in enumerate(segs):
        # value at a: pick over every segment containing a
        va = y
        t = s - 1
        while t >= 0 and segs[t][1] >= a:
            va = pick(va, segs[t][2])
            t -= 1
        t = s + 1
        while t < len(segs) and segs[t][0] <= a:
            va = pick(va, segs[t][2])
            t += 1
        emit(a, va)
        if b > a + 1:
            emit(a + 1, y)
        if b > a:
            vb = y
            t = s + 1
            while t < len(segs) and segs[t][0] <= b:
                vb = pick(vb, segs[t][2])
                t += 1
            emit(b, vb)
    return out


def runs_value(runs: Sequence[tuple[int, int]], p: int) -> int:
    lo, hi = 0, len(runs) - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if runs[mid][0] <= p:
            lo = mid
        else:
            hi = mid - 1
    return runs[lo][1]


def _compress(runs: list[tuple[int, int]]) -> list[tuple[int, int]]:
    out: list[tuple[int, int]] = []
    for p, v in runs:
        if out and out[-1][0] == p:
            out[-1] = (p, v)
        elif not out or out[-1][1] != v:
            out.append((p, v))
    return out


def floor_runs(S: Hole | NiceHole, w: int, counter: Optional[VisitCounter] = None) -> list[tuple[int, int]]:
    """Runs of f over [x(L), x(R) - w] by a deque sweep of the lower boundary.

    The bar with left end p overlaps edge e iff x0(e) - w < p < x1(e). Edges
    enter the deque in batches at p = x0 - w + 1 and expire at p = x1; the
    deque front is always the highest overlapping edge.
    """
    S = as_nice(S)
    lo, hi = S.xL, S.xR - w
    if hi < lo:
        return []
    fb = S.fb
    m = len(fb)
    q: deque = deque()
    runs: list[tuple[int, int]] = []
    i = 0
    # event abscissae: batch entries and expiries, clipped to [lo, hi]
    p = lo
    while p <= hi:
        j = i
        while j < m and fb[j].x0 - w + 1 <= p:
            j += 1
        if j > i:
            q = merge(q, setup(fb, i, j, counter), counter)
            i = j
        while q and q[0].x1 <= p:
            q.popleft()
            if counter is not None:
                counter.fb += 1
        runs.append((p, q[0].y))
        nxt = hi + 1
        if i < m:
            nxt = min(nxt, max(p + 1, fb[i].x0 - w + 1))
        if q:
            nxt = min(nxt, max(p + 1, q[0].x1))
        p = nxt
    return _compress(runs)


def ceiling_runs(S: Hole | NiceHole, w: int, counter: Optional[VisitCounter] = None) -> list[tuple[int, int]]:
    """Runs of g over [x(L), x(R) - w].

    The upper boundary rises up to the falling corner and stays flat after
    it, so g(p) is the ceiling just right of p, clamped to y(c_f) once the
    bar reaches past x(c_f).
    """
    S = as_nice(S)
    lo, hi = S.xL, S.xR - w
    if hi < lo:
        return []
    runs: list[tuple[int, int]] = []
    for e in S.ft:
        if counter is not None:
            counter.ft += 1
        if e.x1 <= lo:
            continue
        if e.x0 > hi:
            break
        runs.append((max(e.x0, lo), e.y))
    cf = S.falling_corner
    if cf is not None and cf.x - w + 1 <= hi:
        cut = max(cf.x - w + 1, lo)
        runs = ([(p, v) for p, v in runs if p < cut]
                + [(cut, min(runs_value(runs, cut), cf.y))]
                + [(p, min(v, cf.y)) for p, v in runs if p > cut])
    return _compress(runs)


def bottom_function(S: Hole | NiceHole, w: int, counter: Optional[VisitCounter] = None) -> CandidateStaircase:
    S = as_nice(S)
    runs = floor_runs(S, w, counter)
    if not runs:
        return CandidateStaircase((), "C", w)
    return staircase_from_runs(runs, S.xR - w, "C", w)


def top_function(S: Hole | NiceHole, w: int, counter: Optional[VisitCounter] = None) -> CandidateStaircase:
    S = as_nice(S)
    runs = ceiling_runs(S, w, counter)
    if not runs:
        return CandidateStaircase((), "D", w)
    return staircase_from_runs(runs, S.xR - w, "D", w)


def placing_function(S: Hole | NiceHole, r: Rect, C: CandidateStaircase, D: CandidateStaircase) -> list[Point]:
    """Points (p, f(p)) where the rectangle fits and cannot slide down or left.

    Only p = x(L) and breakpoints of f or g can qualify, so a merge over the
    two run lists suffices.
    """
    if not C.points or not D.points:
        return []
    S = as_nice(S)
    h = r.h
    fr, gr = decode_runs(C), decode_runs(D)
    out: list[Point] = []
    a = b = 0
    prev_f = prev_g = None
    while a < len(fr) or b < len(gr):
        pa = fr[a][0] if a < len(fr) else None
        pb = gr[b][0] if b < len(gr) else None
        p = min(x for x in (pa, pb) if x is not None)
        fp = fr[a][1] if pa == p else prev_f
        gp = gr[b][1] if pb == p else prev_g
        if pa == p:
            a += 1
        if pb == p:
            b += 1
        if gp - fp >= h and (p == S.xL or prev_f > fp or prev_g - fp < h):
            out.append(Point(p, fp))
        prev_f, prev_g = fp, gp
    return out


def all_bl_locs(S: Hole | NiceHole, r: Rect, counter: Optional[VisitCounter] = None) -> list[Point]:
    """All feasible BL-stable lower-left positions for r inside nice hole S."""
    S = as_nice(S)
    if S.width < r.w:
        return []
    C = bottom_function(S, r.w, counter)
    D = top_function(S, r.w, counter)
    return placing_function(S, r, C, D)
