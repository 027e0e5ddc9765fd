"""Integer points, rectangles and the feasibility predicates of a strip packing."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence


class Point(NamedTuple):
    x: int
    y: int

    def shift(self, dx: int = 0, dy: int = 0) -> "Point":
        return Point(self.x + dx, self.y + dy)


@dataclass(frozen=True)
class Rect:
    w: int
    h: int

    def __post_init__(self):
        if self.w < 1 or self.h < 1:
            raise ValueError(f"degenerate rectangle {self.w}x{self.h}")


@dataclass(frozen=True)
class Placement:
    rect: Rect
    origin: Point

    @property
    def x_min(self) -> int:
        return self.origin.x

    @property
    def x_max(self) -> int:
        return self.origin.x + self.rect.w

    @property
    def y_min(self) -> int:
        return self.origin.y

    @property
    def y_max(self) -> int:
        return self.origin.y + self.rect.h


@dataclass
class Packing:
    """Strip width plus one optional placement per input rectangle.

    ``placements[i]`` is None while rectangle i is unplaced.
    """

    W: int
    rects: list[Rect]
    placements: list[Optional[Placement]] = field(default_factory=list)

    def __post_init__(self):
        if not self.placements:
            self.placements = [None] * len(self.rects)

    def placed(self) -> list[Placement]:
        return [p for p in self.placements if p is not None]

    def place(self, i: int, at: Point) -> None:
        self.placements[i] = Placement(self.rects[i], Point(*at))

    def origins(self) -> list[Optional[Point]]:
        return [None if p is None else p.origin for p in self.placements]


def overlaps(a: Placement, b: Placement) -> bool:
    """True iff the open rectangles of a and b intersect."""
    return (a.x_min < b.x_max and b.x_min < a.x_max
            and a.y_min < b.y_max and b.y_min < a.y_max)


def fits_in_strip(p: Placement, W: int) -> bool:
    return p.x_min >= 0 and p.x_max <= W and p.y_min >= 0


def packing_height(pk: Packing | Sequence[Placement]) -> int:
    placed = pk.placed() if isinstance(pk, Packing) else list(pk)
    return max((p.y_max for p in placed), default=0)
