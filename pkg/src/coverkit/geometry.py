"""Planar primitives in screen coordinates.

The y axis grows downward and positive angles turn from +x toward +y,
so what reads as "counterclockwise" in math terms is clockwise on screen.
Angles are plain float radians; functions that produce a canonical angle
return a value in (-pi, pi].
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateRayError, EmptyInputError

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite point ({self.x}, {self.y})")

    def translated(self, dx: float, dy: float) -> "Point2":
        return Point2(self.x + dx, self.y + dy)


@dataclass(frozen=True)
class Rect:
    """Axis-aligned rectangle given by top-left corner and size."""

    left: float
    top: float
    width: float
    height: float

    def __post_init__(self):
        if self.width < 0 or self.height < 0:
            raise ValueError(f"negative rect size {self.width}x{self.height}")

    @property
    def right(self) -> float:
        return self.left + self.width

    @property
    def bottom(self) -> float:
        return self.top + self.height

    @property
    def center(self) -> Point2:
        return Point2(self.left + self.width / 2.0, self.top + self.height / 2.0)

    def corners(self) -> tuple[Point2, Point2, Point2, Point2]:
        # top-left, top-right, bottom-right, bottom-left
        return (
            Point2(self.left, self.top),
            Point2(self.right, self.top),
            Point2(self.right, self.bottom),
            Point2(self.left, self.bottom),
        )

    def contains_point(self, p: Point2) -> bool:
        return self.left <= p.x <= self.right and self.top <= p.y <= self.bottom

    def contains_rect(self, other: "Rect") -> bool:
        return (
            other.left >= self.left
            and other.top >= self.top
            and other.right <= self.right
            and other.bottom <= self.bottom
        )

    def translated(self, dx: float, dy: float) -> "Rect":
        return Rect(self.left + dx, self.top + dy, self.width, self.height)

    def inflated(self, dx: float, dy: float) -> "Rect":
        return Rect(self.left - dx, self.top - dy, self.width + 2 * dx, self.height + 2 * dy)


def distance(a: Point2, b: Point2) -> float:
    return math.hypot(b.x - a.x, b.y - a.y)


def limited_radian(angle: float) -> float:
    """Reduce an angle into (-pi, pi]."""
    a = math.fmod(angle, TWO_PI)
    if a > math.pi:
        a -= TWO_PI
    elif a <= -math.pi:
        a += TWO_PI
    return a


def line_angle(tail: Point2, head: Point2) -> float:
    """Direction of the ray tail->head, in (-pi, pi]."""
    if tail.x == head.x and tail.y == head.y:
        raise DegenerateRayError("ray endpoints coincide")
    return limited_radian(math.atan2(head.y - tail.y, head.x - tail.x))


def point_to_point(start: Point2, angle: float, dist: float) -> Point2:
    """The point at the given distance from start along angle."""
    return Point2(start.x + dist * math.cos(angle), start.y + dist * math.sin(angle))


def is_convex(apexes: list[Point2] | tuple[Point2, ...]) -> bool:
    """Whether the closed polygon is convex; collinear apexes count as convex.

    Works for either traversal direction: all non-zero cross products must
    share one sign.
    """
    n = len(apexes)
    if n < 3:
        return False
    sign = 0
    for i in range(n):
        a, b, c = apexes[i], apexes[(i + 1) % n], apexes[(i + 2) % n]
        cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x)
        if cross == 0:
            continue
        s = 1 if cross > 0 else -1
        if sign == 0:
            sign = s
        elif s != sign:
            return False
    return True


def point_segment_distance(p: Point2, a: Point2, b: Point2) -> float:
    """Distance from p to the closed segment [a, b]; a == b degrades to a point."""
    abx, aby = b.x - a.x, b.y - a.y
    den = abx * abx + aby * aby
    if den == 0.0:
        return distance(p, a)
    t = ((p.x - a.x) * abx + (p.y - a.y) * aby) / den
    if t <= 0.0:
        return distance(p, a)
    if t >= 1.0:
        return distance(p, b)
    return math.hypot(p.x - (a.x + t * abx), p.y - (a.y + t * aby))


def frame_around(rects: list[Rect], padding: float = 0.0) -> Rect:
    """Smallest rect containing every input, grown by padding on each side."""
    if not rects:
        raise EmptyInputError("frame_around of no rects")
    left = min(r.left for r in rects)
    top = min(r.top for r in rects)
    right = max(r.right for r in rects)
    bottom = max(r.bottom for r in rects)
    return Rect(left - padding, top - padding, right - left + 2 * padding, bottom - top + 2 * padding)
