"""Shared hand-built holes."""

import random

from blpack.geometry import Packing, Point, Rect
from blpack.hole_model import Hole, HoleError, validate_bls
from blpack.oracle import extract_holes, oracle_pack

# The BLS-hole figure, vertices A..I' as drawn (anticlockwise; Hole reorients).
BLS_FIGURE = [
    (7, 1), (13, 1), (13, 6), (17, 6), (17, 8), (21, 8), (21, 10), (24, 10),
    (24, 15), (12, 15), (12, 19), (6, 19), (6, 18), (2, 18), (2, 17), (0, 17),
    (0, 16), (7, 16), (7, 15), (3, 15), (3, 14), (1, 14), (1, 13), (2, 13),
    (2, 12), (5, 12), (5, 11), (4, 11), (4, 7), (3, 7), (3, 6), (1, 6),
    (1, 5), (2, 5), (2, 5), (6, 5), (6, 9), (8, 9), (8, 4), (12, 4),
    (12, 3), (8, 3), (8, 2), (7, 2),
]


def bls_figure_hole() -> Hole:
    return Hole(BLS_FIGURE)


# Figure 1 packing scaled by 4: (x, y, w, h) in BL order. W = 24 and the
# drawn strip top sits at y = 30.
FIG1_W = 24
FIG1_TOP = 30
FIG1_RECTS = [
    (0, 0, 8, 4), (8, 0, 4, 8), (12, 0, 8, 4), (20, 0, 4, 6), (0, 8, 22, 4),
    (0, 12, 4, 12), (4, 12, 4, 8), (8, 12, 4, 6), (12, 12, 4, 8), (16, 12, 8, 5),
]
FIG1_HOLES = [
    [(0, 4), (0, 8), (8, 8), (8, 4)],
    [(12, 4), (12, 8), (22, 8), (22, 12), (24, 12), (24, 6), (20, 6), (20, 4)],
    [(0, 24), (0, 30), (24, 30), (24, 17), (16, 17), (16, 20), (12, 20), (12, 18),
     (8, 18), (8, 20), (4, 20), (4, 24)],
]


def fig1_packing() -> Packing:
    pk = Packing(FIG1_W, [Rect(w, h) for _, _, w, h in FIG1_RECTS])
    for i, (x, y, _, _) in enumerate(FIG1_RECTS):
        pk.place(i, Point(x, y))
    return pk


def random_rects(rng: random.Random, n: int, W: int, max_dim: int = 10) -> list[Rect]:
    return [Rect(rng.randint(1, min(max_dim, W)), rng.randint(1, max_dim)) for _ in range(n)]


def sample_bls_holes(count: int, *, min_k: int = 2, max_nv: int = 60, seed: int = 0):
    """Holes of BL packings of random instances, with (rng, hole) pairs.

    Packings are built by the oracle so the corpus does not depend on the
    code under test. A lid a few units above the top rectangle keeps the
    topmost hole small.
    """
    out = []
    s = seed
    while len(out) < count:
        s += 1
        rng = random.Random(s)
        W = rng.randint(10, 40)
        n = rng.randint(10, 40)
        rects = [Rect(rng.randint(1, max(1, W // rng.choice([1, 2, 3, 4]))), rng.randint(1, 6))
                 for _ in range(n)]
        pk = oracle_pack(W, rects)
        for h in extract_holes(pk, ceiling=max(p.y_max for p in pk.placed()) + 3):
            if h.canonical().k >= min_k and h.nv <= max_nv:
                out.append((rng, h))
    return out[:count]


def random_nice_hole(rng: random.Random) -> Hole:
    """An x-monotone hole: a jagged floor under a ceiling that rises, may drop once, then stays flat."""
    while True:
        xs = sorted(rng.sample(range(1, 30), rng.randint(1, 8)))
        width = xs[-1] + rng.randint(1, 5)
        cuts = [0] + xs + [width]
        floor = [rng.randint(0, 6) for _ in range(len(cuts) - 1)]
        top = max(floor) + rng.randint(1, 4)
        steps = sorted(rng.sample(range(1, width), min(width - 1, rng.randint(0, 4))))
        cxs = [0] + steps + [width]
        ceil = [top]
        for _ in steps:
            ceil.append(ceil[-1] + rng.randint(1, 3))
        if len(steps) >= 1 and rng.random() < 0.6:
            # drop at the last step down to somewhere above the floor it covers
            j = len(steps)
            lo = max(f for f, a, b in zip(floor, cuts, cuts[1:]) if b > cxs[j] and a < width)
            ceil[j] = rng.randint(lo + 1, ceil[j - 1] - 1) if ceil[j - 1] - 1 > lo else ceil[j]
        pts = [(0, floor[0])]
        pts += [(0, ceil[0])]
        for a, (x, y) in enumerate(zip(cxs[1:-1], ceil[1:])):
            pts += [(x, ceil[a]), (x, y)]
        pts += [(width, ceil[-1]), (width, floor[-1])]
        for b in range(len(cuts) - 2, 0, -1):
            pts += [(cuts[b], floor[b]), (cuts[b], floor[b - 1])]
        try:
            h = Hole(pts)
            if validate_bls(h) and h.canonical().k == 1:
                return h
        except HoleError:
            continue
