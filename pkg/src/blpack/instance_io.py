"""Text formats for instances and packings, and the instance generators.

Instance text: first line "W n", then n lines "w h". Packing text: a line
"height H", then one "x y" line per rectangle in input order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .geometry import Packing, Point, Rect


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


@dataclass(frozen=True)
class Instance:
    W: int
    rects: tuple[Rect, ...]

    def __post_init__(self):
        if self.W < 1:
            raise ValueError("strip width must be positive")
        if not self.rects:
            raise ValueError("instance has no rectangles")
        for r in self.rects:
            if r.w > self.W:
                raise ValueError(f"rectangle {r.w}x{r.h} is wider than the strip")

    @property
    def n(self) -> int:
        return len(self.rects)


def _ints(line: str, count: int, lineno: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(f"expected {count} integers, got {line!r}", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"not an integer in {line!r}", lineno) from None


def parse_instance(text: str) -> Instance:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("empty input", 1)
    W, n = _ints(lines[0], 2, 1)
    if W < 1:
        raise ParseError("strip width must be positive", 1)
    if n < 1:
        raise ParseError("instance has no rectangles", 1)
    if len(lines) - 1 != n:
        raise ParseError(f"header announces {n} rectangles, found {len(lines) - 1}", len(lines))
    rects = []
    for k, line in enumerate(lines[1:], start=2):
        w, h = _ints(line, 2, k)
        if w < 1 or h < 1:
            raise ParseError(f"degenerate rectangle {w}x{h}", k)
        if w > W:
            raise ParseError(f"rectangle width {w} exceeds strip width {W}", k)
        rects.append(Rect(w, h))
    return Instance(W, tuple(rects))


def serialize_instance(inst: Instance) -> str:
    return f"{inst.W} {len(inst.rects)}\n" + "".join(f"{r.w} {r.h}\n" for r in inst.rects)


def serialize_packing(pk: Packing) -> str:
    if any(p is None for p in pk.placements):
        raise ValueError("packing has unplaced rectangles")
    height = max((p.y_max for p in pk.placements), default=0)
    return f"height {height}\n" + "".join(f"{p.origin.x} {p.origin.y}\n" for p in pk.placements)


def parse_packing(text: str, inst: Instance) -> Packing:
    lines = [ln for ln in text.split("\n") if ln.strip() and not ln.startswith("#")]
    if not lines or not lines[0].startswith("height"):
        raise ParseError("missing 'height' header", 1)
    try:
        int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise ParseError("bad height header", 1) from None
    body = lines[1:]
    if len(body) != inst.n:
        raise ParseError(f"expected {inst.n} positions, found {len(body)}", len(lines))
    pk = Packing(inst.W, list(inst.rects))
    for i, line in enumerate(body):
        x, y = _ints(line, 2, i + 2)
        pk.place(i, Point(x, y))
    return pk


# ---------------------------------------------------------------------------
# generators

FAMILIES = ("random", "decreasing-width", "staircase-flaw", "bls-fixture")


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    seed: int = 0
    n: int = 20
    W: int = 30
    max_dim: int = 10
    extra: dict = field(default_factory=dict, compare=False, hash=False)


def generate(spec: GeneratorSpec) -> Instance:
    if spec.family == "random":
        return random_instance(spec.seed, spec.n, spec.W, spec.max_dim)
    if spec.family == "decreasing-width":
        return decreasing_width_instance(spec.seed, spec.n, spec.W, spec.max_dim)
    if spec.family == "staircase-flaw":
        return staircase_flaw_instance(spec.n)
    if spec.family == "bls-fixture":
        return bls_fixture_instance()
    raise ValueError(f"unknown family {spec.family!r}; choose from {', '.join(FAMILIES)}")


def random_instance(seed: int, n: int, W: int, max_dim: int = 10) -> Instance:
    rng = random.Random(seed)
    return Instance(W, tuple(Rect(rng.randint(1, min(max_dim, W)), rng.randint(1, max_dim))
                             for _ in range(n)))


def decreasing_width_instance(seed: int, n: int, W: int, max_dim: int = 10) -> Instance:
    inst = random_instance(seed, n, W, max_dim)
    return Instance(W, tuple(sorted(inst.rects, key=lambda r: -r.w)))


# Blocker right ends of the fixture, bottom to top, as (right end, height) in
# the coordinates of the BLS-hole figure; the strip is that picture shifted
# right by FIXTURE_SHIFT.
_FIXTURE_LAYERS = [
    (13, 1), (7, 1), (8, 1), (12, 1), (6, 1), (1, 1), (3, 1), (4, 4), (5, 1),
    (2, 1), (1, 1), (3, 1), (7, 1), (0, 1), (2, 1), (6, 1), (12, 2),
]
FIXTURE_SHIFT = 28
FIXTURE_W = 54
# (x, y, w, h) in strip coordinates, listed in (y, x) order
_FIXTURE_FILLERS = [(41, 0, 4, 6), (45, 0, 4, 8), (49, 0, 3, 10), (52, 0, 2, 15),
                    (34, 4, 2, 5), (40, 15, 14, 30)]


def bls_fixture_instance() -> Instance:
    """A BL order whose packing leaves the BLS-hole figure (shifted) as a hole.

    Blockers span from the left wall to the figure's left boundary. Each is
    wider than half the strip, so BL can only stack them. The remaining
    rectangles then land where the figure has them.
    """
    rects = [Rect(right + FIXTURE_SHIFT, h) for right, h in _FIXTURE_LAYERS]
    rects += [Rect(w, h) for _, _, w, h in _FIXTURE_FILLERS]
    return Instance(FIXTURE_W, tuple(rects))


def bls_fixture_positions() -> list[Point]:
    """Where BL is expected to put each rectangle of the fixture."""
    out, y = [], 0
    for _, h in _FIXTURE_LAYERS:
        out.append(Point(0, y))
        y += h
    out += [Point(x, y0) for x, y0, _, _ in _FIXTURE_FILLERS]
    return out


def staircase_flaw_instance(n: int, gap: int = 3, width: int = 100, comb_share: int = 8) -> Instance:
    """Comb of thin blockers whose notches are all narrow, then wide probes.

    The first part alternates short and long blockers (both wider than half
    the strip, so they stack). Each long blocker ends ``gap`` short of the
    right wall and forms a left notch whose rightward ray is only ``gap``
    long. A full-width lid closes the comb into one hole. Every later probe
    is full width, so it fits the comb's bounding box but nowhere inside it,
    and each probe search has to sweep the whole comb. One rectangle in
    ``comb_share`` is a blocker.
    """
    if n < 8:
        raise ValueError("staircase-flaw needs n >= 8")
    W = width
    blockers = max(4, n // comb_share)
    probes = n - blockers - 1
    short, long_ = W // 2 + 10, W - gap
    rects = [Rect(short if k % 2 == 0 else long_, 1) for k in range(blockers)]
    rects.append(Rect(W, 1))
    rects += [Rect(W, 2)] * probes
    return Instance(W, tuple(rects))
