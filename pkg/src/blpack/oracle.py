"""Slow reference implementations used to check the fast path.

Nothing here calls into the hole or sweep code: every routine works from
raw coordinates with its own (deliberately naive) geometry.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .geometry import Packing, Placement, Point, Rect, fits_in_strip, overlaps
from .hole_model import Hole


class OracleBudgetError(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleConfig:
    mode: str = "candidate"  # or "grid"
    max_cells: int = 2_000_000


# ---------------------------------------------------------------------------
# BL placement by enumeration


def oracle_bl_location(pk: Packing, r: Rect, config: OracleConfig = OracleConfig()) -> Point:
    """Lexicographically smallest (y, x) feasible position for r.

    Candidate mode only tries x in {0} + right sides and y in {0} + top sides.
    That is enough: at the (y, x)-minimum the rectangle can move neither down
    nor left, so its bottom rests on the floor or on a top side and its left
    side touches the wall or a right side. Grid mode scans every integer
    position and exists to check that argument on small inputs.
    """
    placed = pk.placed()
    W = pk.W
    if r.w > W:
        raise ValueError("rectangle wider than the strip")
    if config.mode == "grid":
        top = max((p.y_max for p in placed), default=0)
        if (top + 1) * (W - r.w + 1) * max(1, len(placed)) > config.max_cells * 50:
            raise OracleBudgetError("grid scan too large")
        for y in range(top + 1):
            for x in range(W - r.w + 1):
                cand = Placement(r, Point(x, y))
                if not any(overlaps(cand, q) for q in placed):
                    return Point(x, y)
        raise AssertionError("unreachable: the top of the packing is always free")
    xs = sorted({0, *(p.x_max for p in placed)})
    ys = sorted({0, *(p.y_max for p in placed)})
    for y in ys:
        for x in xs:
            if x + r.w > W:
                break
            cand = Placement(r, Point(x, y))
            if not any(overlaps(cand, q) for q in placed):
                return Point(x, y)
    raise AssertionError("unreachable: the top of the packing is always free")


def oracle_pack(W: int, rects: Sequence[Rect], config: OracleConfig = OracleConfig()) -> Packing:
    pk = Packing(W, list(rects))
    for i, r in enumerate(rects):
        pk.place(i, oracle_bl_location(pk, r, config))
    return pk


# ---------------------------------------------------------------------------
# validators


@dataclass(frozen=True)
class Check:
    ok: bool
    message: str = ""
    where: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


def validate_packing(pk: Packing) -> Check:
    placed = [(i, p) for i, p in enumerate(pk.placements) if p is not None]
    for i, p in placed:
        if not fits_in_strip(p, pk.W):
            return Check(False, f"rectangle {i} at {tuple(p.origin)} leaves the strip", (i,))
    for a in range(len(placed)):
        i, p = placed[a]
        for j, q in placed[a + 1:]:
            if overlaps(p, q):
                return Check(False, f"rectangles {i} and {j} overlap", (i, j))
    return Check(True)


def validate_bl_stability(pk: Packing) -> Check:
    """Every placed rectangle is blocked both leftward and downward.

    With integer coordinates an epsilon shift is infeasible exactly when the
    rectangle touches the wall/floor or shares a side segment of positive
    length with a neighbour.
    """
    placed = [(i, p) for i, p in enumerate(pk.placements) if p is not None]
    for i, p in placed:
        left = p.x_min == 0 or any(
            q.x_max == p.x_min and q.y_min < p.y_max and p.y_min < q.y_max
            for j, q in placed if j != i)
        if not left:
            return Check(False, f"rectangle {i} can slide left", (i, "left"))
        down = p.y_min == 0 or any(
            q.y_max == p.y_min and q.x_min < p.x_max and p.x_min < q.x_max
            for j, q in placed if j != i)
        if not down:
            return Check(False, f"rectangle {i} can slide down", (i, "down"))
    return Check(True)


# ---------------------------------------------------------------------------
# holes from scratch


def _merge_straight(cycle: list[tuple[int, int]]) -> list[tuple[int, int]]:
    n = len(cycle)
    keep = []
    for i in range(n):
        a, b, c = cycle[i - 1], cycle[i], cycle[(i + 1) % n]
        if not ((a[0] == b[0] == c[0]) or (a[1] == b[1] == c[1])):
            keep.append(b)
    return keep


def cycle_key(cycle: Iterable[Sequence[int]]) -> tuple[tuple[int, int], ...]:
    c = [(int(p[0]), int(p[1])) for p in cycle]
    i = min(range(len(c)), key=c.__getitem__)
    return tuple(c[i:] + c[:i])


def extract_holes(pk: Packing, ceiling: Optional[int] = None,
                  max_cells: int = 4_000_000) -> list[Hole]:
    """Holes of a packing, by flood fill over a compressed cell grid."""
    placed = pk.placed()
    if ceiling is None:
        ceiling = sum(r.h for r in pk.rects)
    xs = sorted({0, pk.W, *(p.x_min for p in placed), *(p.x_max for p in placed)})
    ys = sorted({0, ceiling, *(p.y_min for p in placed), *(p.y_max for p in placed)})
    if ys[-1] > ceiling:
        raise ValueError("a rectangle reaches above the ceiling")
    nx, ny = len(xs) - 1, len(ys) - 1
    if nx * ny > max_cells:
        raise OracleBudgetError(f"{nx * ny} cells exceed budget")
    xi = {x: i for i, x in enumerate(xs)}
    yi = {y: i for i, y in enumerate(ys)}
    free = [[True] * nx for _ in range(ny)]
    for p in placed:
        for row in range(yi[p.y_min], yi[p.y_max]):
            for col in range(xi[p.x_min], xi[p.x_max]):
                free[row][col] = False

    comp = [[-1] * nx for _ in range(ny)]
    ncomp = 0
    for r0 in range(ny):
        for c0 in range(nx):
            if not free[r0][c0] or comp[r0][c0] >= 0:
                continue
            comp[r0][c0] = ncomp
            todo = deque([(r0, c0)])
            while todo:
                r, c = todo.popleft()
                for rr, cc in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                    if 0 <= rr < ny and 0 <= cc < nx and free[rr][cc] and comp[rr][cc] < 0:
                        comp[rr][cc] = ncomp
                        todo.append((rr, cc))
            ncomp += 1

    # directed unit sides with the free cell on their right, per component
    out_edges: list[dict] = [defaultdict(list) for _ in range(ncomp)]

    def same(r, c, k):
        return 0 <= r < ny and 0 <= c < nx and comp[r][c] == k

    for r in range(ny):
        for c in range(nx):
            k = comp[r][c]
            if k < 0:
                continue
            x0, x1, y0, y1 = xs[c], xs[c + 1], ys[r], ys[r + 1]
            E = out_edges[k]
            if not same(r - 1, c, k):
                E[(x1, y0)].append((x0, y0))
            if not same(r + 1, c, k):
                E[(x0, y1)].append((x1, y1))
            if not same(r, c - 1, k):
                E[(x0, y0)].append((x0, y1))
            if not same(r, c + 1, k):
                E[(x1, y1)].append((x1, y0))

    holes = []
    for k in range(ncomp):
        E = out_edges[k]
        while E:
            start = min(E)
            cycle = [start]
            prev = None
            cur = start
            while True:
                outs = E[cur]
                nxt = _pick_rightmost(prev, cur, outs)
                outs.remove(nxt)
                if not outs:
                    del E[cur]
                prev, cur = cur, nxt
                if cur == start:
                    break
                cycle.append(cur)
            holes.append(Hole(_merge_straight(cycle)))
    return holes


def _pick_rightmost(prev, cur, outs):
    """Among outgoing sides prefer the sharpest right turn."""
    if len(outs) == 1 or prev is None:
        return outs[0]
    dx, dy = cur[0] - prev[0], cur[1] - prev[1]

    def rank(q):
        ex, ey = q[0] - cur[0], q[1] - cur[1]
        cross = dx * ey - dy * ex
        dot = dx * ex + dy * ey
        if cross < 0:
            return 0
        if cross == 0 and dot > 0:
            return 1
        if cross > 0:
            return 2
        return 3

    return min(outs, key=rank)


def hole_cycle_set(holes: Iterable) -> set:
    return {cycle_key(h.vertices if hasattr(h, "vertices") else h) for h in holes}


# ---------------------------------------------------------------------------
# per-hole brute force


class _CellMask:
    """Which unit cells of a rectilinear cycle's bounding box are interior."""

    def __init__(self, vertices: Sequence[Sequence[int]]):
        pts = [(int(p[0]), int(p[1])) for p in vertices]
        self.x0 = min(p[0] for p in pts)
        self.y0 = min(p[1] for p in pts)
        self.x1 = max(p[0] for p in pts)
        self.y1 = max(p[1] for p in pts)
        nx, ny = self.x1 - self.x0, self.y1 - self.y0
        verticals = []
        n = len(pts)
        for i in range(n):
            (ax, ay), (bx, by) = pts[i], pts[(i + 1) % n]
            if ax == bx and ay != by:
                verticals.append((ax, min(ay, by), max(ay, by)))
        self.inside = []
        for row in range(ny):
            yc = self.y0 + row  # cell [yc, yc+1]; compare against its centre
            cuts = sorted(x for x, lo, hi in verticals if lo <= yc < hi)
            line = [False] * nx
            for a, b in zip(cuts[0::2], cuts[1::2]):
                for col in range(a - self.x0, b - self.x0):
                    line[col] = True
            self.inside.append(line)
        # 2-D prefix sums of interior cells
        self.pre = [[0] * (nx + 1) for _ in range(ny + 1)]
        for r in range(ny):
            acc = 0
            for c in range(nx):
                acc += self.inside[r][c]
                self.pre[r + 1][c + 1] = self.pre[r][c + 1] + acc

    def full(self, x: int, y: int, w: int, h: int) -> bool:
        """All cells of [x, x+w] x [y, y+h] are interior (empty boxes are True)."""
        c0, r0 = x - self.x0, y - self.y0
        c1, r1 = c0 + w, r0 + h
        if c0 < 0 or r0 < 0 or c1 > self.x1 - self.x0 or r1 > self.y1 - self.y0:
            return w == 0 or h == 0
        P = self.pre
        return P[r1][c1] - P[r0][c1] - P[r1][c0] + P[r0][c0] == w * h

    def cell(self, c: int, r: int) -> bool:
        x, y = c - self.x0, r - self.y0
        if 0 <= x < self.x1 - self.x0 and 0 <= y < self.y1 - self.y0:
            return self.inside[y][x]
        return False


def grid_bl_stable_set(h, r: Rect) -> set[Point]:
    """Integer positions where r lies inside the hole and touches it on the left and below."""
    verts = h.vertices if hasattr(h, "vertices") else h
    m = _CellMask(verts)
    out = set()
    for y in range(m.y0, m.y1 - r.h + 1):
        for x in range(m.x0, m.x1 - r.w + 1):
            if not m.full(x, y, r.w, r.h):
                continue
            if m.full(x - 1, y, 1, r.h) or m.full(x, y - 1, r.w, 1):
                continue
            out.add(Point(x, y))
    return out


def _column_extents(vertices) -> dict[int, tuple[int, int]]:
    """For each unit column [x, x+1] the lowest and highest horizontal edge crossing it."""
    pts = [(int(p[0]), int(p[1])) for p in vertices]
    n = len(pts)
    ext: dict[int, list[int]] = {}
    for i in range(n):
        (ax, ay), (bx, by) = pts[i], pts[(i + 1) % n]
        if ay == by:
            for x in range(min(ax, bx), max(ax, bx)):
                lo_hi = ext.setdefault(x, [ay, ay])
                lo_hi[0] = min(lo_hi[0], ay)
                lo_hi[1] = max(lo_hi[1], ay)
    return {x: (a, b) for x, (a, b) in ext.items()}


def brute_floor_ceiling(h, w: int) -> dict[int, tuple[int, int]]:
    """Pointwise f and g of a nice hole for a bar of width w.

    For every integer p from the left wall to the right wall minus w:
    f(p) is the highest floor under the bar and g(p) the lowest ceiling
    over it, read off column by column.
    """
    verts = h.vertices if hasattr(h, "vertices") else h
    ext = _column_extents(verts)
    lo_x, hi_x = min(ext), max(ext) + 1
    out = {}
    for p in range(lo_x, hi_x - w + 1):
        cols = [ext[x] for x in range(p, p + w)]
        out[p] = (max(c[0] for c in cols), min(c[1] for c in cols))
    return out
