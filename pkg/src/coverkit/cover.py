"""Covers: ordered sets of invisible sensitive nodes over an object.

A node is a circle, a convex polygon or a strip (a rectangle with two
semicircular caps; the two points are the cap centers and the strip width
is twice the radius). Earlier nodes win where nodes overlap, so covers
list small grab areas before big ones.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import InvalidCoverError, InvalidPolygonError
from .geometry import Point2, Rect, distance, is_convex, point_segment_distance


class MovementFreedom(enum.Enum):
    NONE = "none"            # catchable by nothing; blocks everything beneath
    FREEZE = "freeze"        # caught but never moved
    ALL = "all"              # moves anywhere
    NS = "ns"                # vertical movement only
    WE = "we"                # horizontal movement only
    TRANSPARENT = "transparent"  # pointer falls through to objects beneath


class CursorHint(enum.Enum):
    DEFAULT = "Default"
    SIZE_ALL = "SizeAll"
    HAND = "Hand"
    SIZE_NS = "SizeNS"
    SIZE_WE = "SizeWE"


class Resizing(enum.Enum):
    NONE = "none"
    NS = "ns"
    WE = "we"
    ANY = "any"


@dataclass(frozen=True)
class CircleShape:
    center: Point2
    radius: float

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError(f"circle radius {self.radius} must be positive")

    def translated(self, dx: float, dy: float) -> "CircleShape":
        return CircleShape(self.center.translated(dx, dy), self.radius)


@dataclass(frozen=True)
class PolygonShape:
    apexes: tuple[Point2, ...]

    def __post_init__(self):
        if len(self.apexes) < 3:
            raise InvalidPolygonError(f"polygon needs >= 3 apexes, got {len(self.apexes)}")
        if not is_convex(self.apexes):
            raise InvalidPolygonError("polygon node must be convex")

    def translated(self, dx: float, dy: float) -> "PolygonShape":
        return PolygonShape(tuple(p.translated(dx, dy) for p in self.apexes))


@dataclass(frozen=True)
class StripShape:
    a: Point2
    b: Point2
    radius: float

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError(f"strip radius {self.radius} must be positive")

    def translated(self, dx: float, dy: float) -> "StripShape":
        return StripShape(self.a.translated(dx, dy), self.b.translated(dx, dy), self.radius)


NodeShape = CircleShape | PolygonShape | StripShape


@dataclass(frozen=True)
class CoverNode:
    id: int
    shape: NodeShape
    freedom: MovementFreedom = MovementFreedom.ALL
    cursor: CursorHint = CursorHint.SIZE_ALL

    def translated(self, dx: float, dy: float) -> "CoverNode":
        return CoverNode(self.id, self.shape.translated(dx, dy), self.freedom, self.cursor)


@dataclass(frozen=True)
class Cover:
    nodes: tuple[CoverNode, ...] = field(default_factory=tuple)

    def __post_init__(self):
        for pos, node in enumerate(self.nodes):
            if node.id != pos:
                raise InvalidCoverError(f"node at position {pos} has id {node.id}")

    def __len__(self) -> int:
        return len(self.nodes)

    def translated(self, dx: float, dy: float) -> "Cover":
        return Cover(tuple(n.translated(dx, dy) for n in self.nodes))


def _polygon_contains(apexes: tuple[Point2, ...], p: Point2) -> bool:
    # convex polygon, boundary inclusive, either traversal direction
    sign = 0
    n = len(apexes)
    for i in range(n):
        a, b = apexes[i], apexes[(i + 1) % n]
        cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)
        if cross == 0:
            continue
        s = 1 if cross > 0 else -1
        if sign == 0:
            sign = s
        elif s != sign:
            return False
    return True


def node_contains(shape: NodeShape, p: Point2) -> bool:
    """Boundary-inclusive point test for one node shape."""
    if isinstance(shape, CircleShape):
        return distance(shape.center, p) <= shape.radius
    if isinstance(shape, StripShape):
        return point_segment_distance(p, shape.a, shape.b) <= shape.radius
    return _polygon_contains(shape.apexes, p)


class HitKind(enum.Enum):
    MISS = "miss"
    CAUGHT = "caught"
    BLOCKED = "blocked"
    TRANSPARENT = "transparent"


@dataclass(frozen=True)
class CoverHit:
    kind: HitKind
    node: CoverNode | None = None


def cover_hit(cover: Cover, p: Point2) -> CoverHit:
    """Scan nodes in order and report what the point lands on.

    The first containing node decides. NONE blocks (nothing beneath this
    object may be reached), TRANSPARENT hands the point to whatever lies
    beneath the whole object, anything else catches.
    """
    for node in cover.nodes:
        if not node_contains(node.shape, p):
            continue
        if node.freedom is MovementFreedom.NONE:
            return CoverHit(HitKind.BLOCKED, node)
        if node.freedom is MovementFreedom.TRANSPARENT:
            return CoverHit(HitKind.TRANSPARENT, node)
        return CoverHit(HitKind.CAUGHT, node)
    return CoverHit(HitKind.MISS, None)


CORNER_RADIUS = 5.0
HALF_STRIP = 3.0


def rect_polygon(rc: Rect) -> PolygonShape:
    return PolygonShape(rc.corners())


def standard_rect_cover(
    rc: Rect,
    resizing: Resizing,
    corner_radius: float = CORNER_RADIUS,
    half_strip: float = HALF_STRIP,
) -> Cover:
    """The classic rectangle cover.

    ANY: circles on the corners, strips along the borders, one polygon for
    the whole area, in that order so the small grab areas win. NS and WE
    keep only the two relevant border strips. NONE is just the area node.
    Border strips sit with their median line on the visual border.
    """
    tl, tr, br, bl = rc.corners()
    nodes: list[CoverNode] = []

    def add(shape: NodeShape, freedom: MovementFreedom, cursor: CursorHint):
        nodes.append(CoverNode(len(nodes), shape, freedom, cursor))

    if resizing is Resizing.ANY:
        for corner in (tl, tr, br, bl):
            add(CircleShape(corner, corner_radius), MovementFreedom.ALL, CursorHint.HAND)
        add(StripShape(tl, tr, half_strip), MovementFreedom.NS, CursorHint.SIZE_NS)
        add(StripShape(tr, br, half_strip), MovementFreedom.WE, CursorHint.SIZE_WE)
        add(StripShape(bl, br, half_strip), MovementFreedom.NS, CursorHint.SIZE_NS)
        add(StripShape(tl, bl, half_strip), MovementFreedom.WE, CursorHint.SIZE_WE)
    elif resizing is Resizing.NS:
        add(StripShape(tl, tr, half_strip), MovementFreedom.NS, CursorHint.SIZE_NS)
        add(StripShape(bl, br, half_strip), MovementFreedom.NS, CursorHint.SIZE_NS)
    elif resizing is Resizing.WE:
        add(StripShape(tl, bl, half_strip), MovementFreedom.WE, CursorHint.SIZE_WE)
        add(StripShape(tr, br, half_strip), MovementFreedom.WE, CursorHint.SIZE_WE)
    add(rect_polygon(rc), MovementFreedom.ALL, CursorHint.SIZE_ALL)
    return Cover(tuple(nodes))
