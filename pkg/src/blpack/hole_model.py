"""Hole boundaries: clockwise rectilinear vertex cycles and their special edges.

Coordinates have y pointing up. A hole boundary is stored clockwise, so the
hole interior always lies to the right of the direction of travel.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

from .geometry import Point


class HoleError(ValueError):
    """Raised when a vertex cycle is not a valid (BLS-)hole."""

    def __init__(self, message: str, where=None):
        super().__init__(message)
        self.where = where


UP, DOWN, LEFT, RIGHT = "U", "D", "L", "R"


def direction(a: Point, b: Point) -> str:
    if a.x == b.x:
        if b.y > a.y:
            return UP
        if b.y < a.y:
            return DOWN
    elif a.y == b.y:
        return RIGHT if b.x > a.x else LEFT
    raise HoleError(f"edge {a}->{b} is not axis-aligned or has zero length", (a, b))


def signed_area2(pts: Sequence[Point]) -> int:
    """Twice the shoelace area; negative for clockwise cycles."""
    n = len(pts)
    s = 0
    for i in range(n):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return s


def simplify_cycle(pts: Iterable[Sequence[int]]) -> list[Point]:
    """Drop repeated points and interior vertices of straight runs.

    Zero-area spikes (a->b->a) collapse as well, since the middle vertex of
    three collinear points is always removed.
    """
    out: list[Point] = []
    for p in pts:
        p = Point(int(p[0]), int(p[1]))
        if out and out[-1] == p:
            continue
        out.append(p)
        while len(out) >= 3 and _collinear(out[-3], out[-2], out[-1]):
            del out[-2]
            if len(out) >= 2 and out[-1] == out[-2]:
                out.pop()
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()
    # the seam between the end and the start of the list
    changed = True
    while changed and len(out) >= 3:
        changed = False
        if _collinear(out[-2], out[-1], out[0]):
            out.pop()
            changed = True
        elif _collinear(out[-1], out[0], out[1]):
            out.pop(0)
            changed = True
        if len(out) > 1 and out[0] == out[-1]:
            out.pop()
            changed = True
    return out


def _collinear(a: Point, b: Point, c: Point) -> bool:
    return (a.x == b.x == c.x) or (a.y == b.y == c.y)


class EdgeClass(enum.Enum):
    LEFTMOST = "leftmost"
    RIGHTMOST = "rightmost"
    TOPMOST = "topmost"
    BOTMOST = "botmost"
    LEFT_NOTCH = "left-notch"
    RIGHT_NOTCH = "right-notch"
    TOP_NOTCH = "top-notch"
    BOTTOM_NOTCH = "bottom-notch"
    PLAIN_UP = "plain-up"
    PLAIN_DOWN = "plain-down"
    PLAIN_LEFT = "plain-left"
    PLAIN_RIGHT = "plain-right"


# (edge, pred, succ) -> class; anything missing is a plain edge
_CLASS_TABLE = {
    (UP, LEFT, RIGHT): EdgeClass.LEFTMOST,
    (UP, RIGHT, LEFT): EdgeClass.LEFT_NOTCH,
    (DOWN, RIGHT, LEFT): EdgeClass.RIGHTMOST,
    (DOWN, LEFT, RIGHT): EdgeClass.RIGHT_NOTCH,
    (RIGHT, UP, DOWN): EdgeClass.TOPMOST,
    (RIGHT, DOWN, UP): EdgeClass.TOP_NOTCH,
    (LEFT, DOWN, UP): EdgeClass.BOTMOST,
    (LEFT, UP, DOWN): EdgeClass.BOTTOM_NOTCH,
}
_PLAIN = {UP: EdgeClass.PLAIN_UP, DOWN: EdgeClass.PLAIN_DOWN,
          LEFT: EdgeClass.PLAIN_LEFT, RIGHT: EdgeClass.PLAIN_RIGHT}


class EdgeRef(NamedTuple):
    """Edge ``index`` of a hole, running from vertex a to vertex b."""

    index: int
    a: Point
    b: Point

    @property
    def x_min(self) -> int:
        return min(self.a.x, self.b.x)

    @property
    def x_max(self) -> int:
        return max(self.a.x, self.b.x)

    @property
    def y_min(self) -> int:
        return min(self.a.y, self.b.y)

    @property
    def y_max(self) -> int:
        return max(self.a.y, self.b.y)

    @property
    def x(self) -> int:
        if self.a.x != self.b.x:
            raise HoleError("horizontal edge has no single x")
        return self.a.x

    @property
    def y(self) -> int:
        if self.a.y != self.b.y:
            raise HoleError("vertical edge has no single y")
        return self.a.y

    @property
    def upper(self) -> Point:
        return self.a if self.a.y >= self.b.y else self.b

    @property
    def lower(self) -> Point:
        return self.a if self.a.y < self.b.y else self.b


@dataclass(frozen=True)
class CanonicalOrdering:
    """Special vertical edges of a BLS-hole, by edge index.

    ``leftmost[j]`` is L_{j+1}; ``notches[j]`` is N_{j+2}, the left notch
    traversed just before it. ``falling_corner`` is a vertex index.
    """

    leftmost: tuple[int, ...]
    notches: tuple[int, ...]
    rightmost: int
    topmost: int
    falling_corner: Optional[int]

    @property
    def k(self) -> int:
        return len(self.leftmost)

    def sequence(self) -> list[tuple[str, int]]:
        seq = [("R", self.rightmost), ("L1", self.leftmost[0])]
        for j, (n, l) in enumerate(zip(self.notches, self.leftmost[1:]), start=2):
            seq += [(f"N{j}", n), (f"L{j}", l)]
        return seq


class Hole:
    """A clockwise rectilinear vertex cycle.

    The constructor normalizes: repeated and collinear vertices are removed
    and an anticlockwise input is reversed. Edge i runs from vertex i to
    vertex i+1 (cyclically).
    """

    __slots__ = ("vertices", "_dirs", "_canon", "_bbox")

    def __init__(self, vertices: Iterable[Sequence[int]], *, normalize: bool = True):
        pts = simplify_cycle(vertices) if normalize else [Point(*p) for p in vertices]
        if len(pts) < 4 or len(pts) % 2:
            raise HoleError(f"hole needs an even number (>= 4) of vertices, got {len(pts)}")
        if normalize and signed_area2(pts) > 0:
            pts.reverse()
            pts = pts[-1:] + pts[:-1]
        self.vertices: list[Point] = pts
        n = len(pts)
        self._dirs = [direction(pts[i], pts[(i + 1) % n]) for i in range(n)]
        for i in range(n):
            if (self._dirs[i] in (UP, DOWN)) == (self._dirs[i - 1] in (UP, DOWN)):
                raise HoleError("edges must alternate between horizontal and vertical", i)
        self._canon: Optional[CanonicalOrdering] = None
        self._bbox = None

    # -- basic access -------------------------------------------------------
    @property
    def nv(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"Hole({self.vertices!r})"

    def vertex(self, i: int) -> Point:
        return self.vertices[i % len(self.vertices)]

    def edge(self, i: int) -> EdgeRef:
        n = len(self.vertices)
        i %= n
        return EdgeRef(i, self.vertices[i], self.vertices[(i + 1) % n])

    def edges(self) -> list[EdgeRef]:
        return [self.edge(i) for i in range(len(self.vertices))]

    def dir(self, i: int) -> str:
        return self._dirs[i % len(self._dirs)]

    def area2(self) -> int:
        return -signed_area2(self.vertices)

    def area(self) -> float:
        return self.area2() / 2

    def bbox(self) -> tuple[int, int, int, int]:
        if self._bbox is None:
            xs = [p.x for p in self.vertices]
            ys = [p.y for p in self.vertices]
            self._bbox = (min(xs), min(ys), max(xs), max(ys))
        return self._bbox

    def canonical(self) -> CanonicalOrdering:
        if self._canon is None:
            self._canon = compute_canonical_ordering(self)
        return self._canon

    def key(self) -> tuple[Point, ...]:
        """Rotation-independent identity: the cycle started at its smallest vertex."""
        i = min(range(len(self.vertices)), key=self.vertices.__getitem__)
        return tuple(self.vertices[i:] + self.vertices[:i])


def nv(h: Hole) -> int:
    return h.nv


def classify_edge(h: Hole, e: int | EdgeRef) -> EdgeClass:
    i = e.index if isinstance(e, EdgeRef) else e
    d = h.dir(i)
    return _CLASS_TABLE.get((d, h.dir(i - 1), h.dir(i + 1)), _PLAIN[d])


def is_falling_corner(h: Hole, v: int) -> bool:
    """Vertex v is a falling corner: entered downward, left rightward."""
    return h.dir(v - 1) == DOWN and h.dir(v) == RIGHT


def classify_all(h: Hole) -> list[EdgeClass]:
    dirs = h._dirs
    n = len(dirs)
    return [_CLASS_TABLE.get((dirs[i], dirs[i - 1], dirs[(i + 1) % n]), _PLAIN[dirs[i]])
            for i in range(n)]


@dataclass(frozen=True)
class BLSCheck:
    ok: bool
    reason: str = ""
    where: object = None

    def __bool__(self) -> bool:
        return self.ok


def validate_bls(h: Hole) -> BLSCheck:
    falling = None
    for i, c in enumerate(classify_all(h)):
        if c is EdgeClass.RIGHT_NOTCH:
            return BLSCheck(False, "right notch", h.edge(i))
        if c is EdgeClass.TOP_NOTCH:
            return BLSCheck(False, "top notch", h.edge(i))
    for v in range(h.nv):
        if is_falling_corner(h, v):
            if falling is not None:
                return BLSCheck(False, "second falling corner", h.vertex(v))
            falling = v
    return BLSCheck(True)


def compute_canonical_ordering(h: Hole) -> CanonicalOrdering:
    """One clockwise pass starting at the rightmost edge."""
    classes = classify_all(h)
    n = h.nv
    rights = [i for i, c in enumerate(classes) if c is EdgeClass.RIGHTMOST]
    if len(rights) != 1:
        raise HoleError(f"expected one rightmost edge, found {len(rights)}", rights)
    r = rights[0]
    leftmost: list[int] = []
    notches: list[int] = []
    topmost = []
    falling = None
    falling_step = last_left_step = 0
    expect_left = True
    for step in range(1, n + 1):
        i = (r + step) % n
        c = classes[i]
        if c is EdgeClass.LEFTMOST:
            if not expect_left:
                raise HoleError("two leftmost edges without a notch between them", h.edge(i))
            leftmost.append(i)
            last_left_step = step
            expect_left = False
        elif c is EdgeClass.LEFT_NOTCH:
            if expect_left:
                raise HoleError("left notch not preceded by a leftmost edge", h.edge(i))
            notches.append(i)
            expect_left = True
        elif c is EdgeClass.TOPMOST:
            topmost.append(i)
        elif c in (EdgeClass.RIGHT_NOTCH, EdgeClass.TOP_NOTCH):
            raise HoleError(f"{c.value} present", h.edge(i))
        if h.dir(i - 1) == DOWN and h.dir(i) == RIGHT:
            if falling is not None:
                raise HoleError("second falling corner", h.vertex(i))
            falling = i
            falling_step = step
    if expect_left or not leftmost:
        raise HoleError("canonical ordering does not end with a leftmost edge")
    if falling is not None and falling_step < last_left_step:
        raise HoleError("falling corner before the last leftmost edge", h.vertex(falling))
    if len(topmost) != 1:
        raise HoleError(f"expected one topmost edge, found {len(topmost)}", topmost)
    return CanonicalOrdering(tuple(leftmost), tuple(notches), r, topmost[0], falling)


def is_nice(h: Hole) -> bool:
    try:
        co = h.canonical()
    except HoleError:
        return False
    return co.k == 1


def traverse(h: Hole, start: int, stop: int, clockwise: bool = True) -> Iterator[EdgeRef]:
    """Edges on the boundary path from vertex ``start`` to vertex ``stop``.

    With start == stop the whole cycle is produced. Anticlockwise edges are
    reported with their endpoints in travel order.
    """
    n = h.nv
    start %= n
    stop %= n
    i = start
    while True:
        if clockwise:
            e = h.edge(i)
            yield e
            i = (i + 1) % n
        else:
            j = (i - 1) % n
            yield EdgeRef(j, h.vertices[i], h.vertices[j])
            i = j
        if i == stop:
            return


def probe(h: Hole, X: int, Y: int) -> int:
    """Locate the point (X/2, Y/2): 1 inside, 0 on the boundary, -1 outside."""
    pts = h.vertices
    n = len(pts)
    inside = False
    for i in range(n):
        ax, ay = pts[i]
        bx, by = pts[(i + 1) % n]
        ax, ay, bx, by = 2 * ax, 2 * ay, 2 * bx, 2 * by
        if ax == bx:
            if X == ax and min(ay, by) <= Y <= max(ay, by):
                return 0
            if (ay > Y) != (by > Y) and X < ax:
                inside = not inside
        elif Y == ay and min(ax, bx) <= X <= max(ax, bx):
            return 0
    return 1 if inside else -1


def contains(h: Hole, x, y) -> bool:
    """Closed containment for a point with integer or half-integer coordinates."""
    return probe(h, int(round(2 * x)), int(round(2 * y))) >= 0


def dump(h: Hole) -> str:
    """One "x y" line per vertex, clockwise, from the upper vertex of R."""
    rs = [i for i, c in enumerate(classify_all(h)) if c is EdgeClass.RIGHTMOST]
    start = rs[0] if rs else 0
    n = h.nv
    return "".join(f"{h.vertices[(start + j) % n].x} {h.vertices[(start + j) % n].y}\n"
                   for j in range(n))


def parse_dump(text: str) -> Hole:
    pts = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            x, y = line.split()[:2]
            pts.append((int(x), int(y)))
    return Hole(pts)


def rect_hole(x0: int, y0: int, x1: int, y1: int) -> Hole:
    return Hole([(x0, y0), (x0, y1), (x1, y1), (x1, y0)])
