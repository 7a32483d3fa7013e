"""Concrete figures: primitives, resizable rectangles, polygon families,
figures with N-node covers and areas with transparent holes.

Conventions shared by the whole family:
  - small grab nodes are 5 px circles or 5 px half-width strips;
  - node counts that depend on size are frozen for the duration of a drag
    and recomputed on release (``on_release``), so a caught node id stays
    valid no matter how wildly the figure is resized;
  - scaling drags work from the ratio between the figure size and the
    pointer distance recorded when the drag started, so the grabbed spot
    tracks the pointer instead of jumping to it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .cover import (
    CircleShape,
    Cover,
    CoverNode,
    CursorHint,
    MovementFreedom,
    NodeShape,
    PolygonShape,
    Resizing,
    StripShape,
    rect_polygon,
    standard_rect_cover,
)
from .errors import InvalidHoleError, InvalidRingError
from .geometry import (
    Point2,
    Rect,
    distance,
    frame_around,
    limited_radian,
    line_angle,
    point_to_point,
)
from .moveable import MouseButton, MoveableObject

MIN_RADIUS = 10.0
MIN_SIDE = 10.0
SMALL_NODE = 5.0          # radius of small grab circles and side strips
BORDER_SPACING = 8.0      # arc step between border circles of a round border
RING_SPACING = 12.0       # arc step between ring border trapezes
RING_HALF_DEPTH = 4.0     # radial half-depth of ring border trapezes
RADII_GAP = 8.0           # enforced clearance between paired radii
CHAR_W = 8.0
CHAR_H = 16.0


def border_circle_count(radius: float, spacing: float = BORDER_SPACING) -> int:
    """How many small circles cover a full circular border of this radius."""
    return max(8, math.ceil(2.0 * math.pi * radius / spacing))


def ring_sector_count(r_outer: float) -> int:
    return max(8, math.ceil(2.0 * math.pi * r_outer / RING_SPACING))


def _compensation(center: Point2, pt: Point2, angle: float) -> float:
    # pressing exactly at the rotation center pins the compensation at zero
    if pt.x == center.x and pt.y == center.y:
        return 0.0
    return limited_radian(line_angle(center, pt) - angle)


def _capsule_bounds(a: Point2, b: Point2, r: float) -> Rect:
    left = min(a.x, b.x) - r
    top = min(a.y, b.y) - r
    return Rect(left, top, max(a.x, b.x) + r - left, max(a.y, b.y) + r - top)


class Figure(MoveableObject):
    """Base for scene figures; carries the dump identity of the class."""

    kind = "figure"
    angle = 0.0


# ---------------------------------------------------------------------------
# primitives: one node, move only

class PrimitiveCircle(Figure):
    kind = "primcircle"

    def __init__(self, center: Point2, radius: float, allowed_button: MouseButton | None = None):
        super().__init__()
        self.center = center
        self.radius = radius
        self.allowed_button = allowed_button

    def _build_cover(self) -> Cover:
        return Cover((CoverNode(0, CircleShape(self.center, self.radius)),))

    def bounds(self) -> Rect:
        r = self.radius
        return Rect(self.center.x - r, self.center.y - r, 2 * r, 2 * r)

    def _shift(self, dx: float, dy: float) -> None:
        self.center = self.center.translated(dx, dy)

    def move_node(self, node_id, dx, dy, pt, button) -> bool:
        if self.allowed_button is not None and button is not self.allowed_button:
            return False
        self.move_by(dx, dy)
        return True


class PrimitiveRect(Figure):
    kind = "primrect"

    def __init__(self, rc: Rect, allowed_button: MouseButton | None = None):
        super().__init__()
        self.rc = rc
        self.allowed_button = allowed_button

    def _build_cover(self) -> Cover:
        return Cover((CoverNode(0, rect_polygon(self.rc)),))

    def bounds(self) -> Rect:
        return self.rc

    def _shift(self, dx, dy) -> None:
        self.rc = self.rc.translated(dx, dy)

    def move_node(self, node_id, dx, dy, pt, button) -> bool:
        if self.allowed_button is not None and button is not self.allowed_button:
            return False
        self.move_by(dx, dy)
        return True


class PrimitiveStrip(Figure):
    kind = "primstrip"

    def __init__(self, a: Point2, b: Point2, radius: float, allowed_button: MouseButton | None = None):
        super().__init__()
        self.a = a
        self.b = b
        self.radius = radius
        self.allowed_button = allowed_button

    def _build_cover(self) -> Cover:
        return Cover((CoverNode(0, StripShape(self.a, self.b, self.radius)),))

    def bounds(self) -> Rect:
        return _capsule_bounds(self.a, self.b, self.radius)

    def _shift(self, dx, dy) -> None:
        self.a = self.a.translated(dx, dy)
        self.b = self.b.translated(dx, dy)

    def move_node(self, node_id, dx, dy, pt, button) -> bool:
        if self.allowed_button is not None and button is not self.allowed_button:
            return False
        self.move_by(dx, dy)
        return True


# ---------------------------------------------------------------------------
# resizable rectangle

_RECT_ROLES = {
    Resizing.NONE: ("area",),
    Resizing.NS: ("edge-t", "edge-b", "area"),
    Resizing.WE: ("edge-l", "edge-r", "area"),
    Resizing.ANY: (
        "corner-tl", "corner-tr", "corner-br", "corner-bl",
        "edge-t", "edge-r", "edge-b", "edge-l", "area",
    ),
}


class RectangleStandard(Figure):
    """Rectangle with the classic corner/border/area cover."""

    kind = "rect"

    def __init__(self, rc: Rect, resizing: Resizing = Resizing.ANY,
                 min_width: float = MIN_SIDE, min_height: float = MIN_SIDE):
        super().__init__()
        self.rc = rc
        self.resizing = resizing
        self.min_width = min_width
        self.min_height = min_height

    def _build_cover(self) -> Cover:
        return standard_rect_cover(self.rc, self.resizing)

    def _roles(self) -> tuple[str, ...]:
        return _RECT_ROLES[self.resizing]

    def bounds(self) -> Rect:
        return self.rc

    def _shift(self, dx, dy) -> None:
        self.rc = self.rc.translated(dx, dy)

    # edge moves keep the opposite edge fixed and respect the minimums
    def _stretch(self, left=0.0, top=0.0, right=0.0, bottom=0.0) -> None:
        rc = self.rc
        new_left = min(rc.left + left, rc.right - self.min_width)
        new_right = max(rc.right + right, new_left + self.min_width)
        new_top = min(rc.top + top, rc.bottom - self.min_height)
        new_bottom = max(rc.bottom + bottom, new_top + self.min_height)
        self.rc = Rect(new_left, new_top, new_right - new_left, new_bottom - new_top)

    def _apply_role(self, role: str, dx: float, dy: float) -> None:
        if role == "corner-tl":
            self._stretch(left=dx, top=dy)
        elif role == "corner-tr":
            self._stretch(right=dx, top=dy)
        elif role == "corner-br":
            self._stretch(right=dx, bottom=dy)
        elif role == "corner-bl":
            self._stretch(left=dx, bottom=dy)
        elif role == "edge-t":
            self._stretch(top=dy)
        elif role == "edge-b":
            self._stretch(bottom=dy)
        elif role == "edge-l":
            self._stretch(left=dx)
        elif role == "edge-r":
            self._stretch(right=dx)

    def _geometry_changed(self) -> None:
        """Everything that must follow a resize; subclasses extend."""
        self.define_cover()

    def move_node(self, node_id, dx, dy, pt, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        role = self._roles()[node_id]
        if role == "area":
            self.move_by(dx, dy)
            return True
        if dx == 0.0 and dy == 0.0:
            return False
        self._apply_role(role, dx, dy)
        self._geometry_changed()
        return True

    def move_by(self, dx, dy) -> None:
        super().move_by(dx, dy)
        self._moved_whole()

    def _moved_whole(self) -> None:
        """Hook for subclasses that track the rect position."""


# ---------------------------------------------------------------------------
# regular polygon, resizable and rotatable

class RegularPolygonRsRt(Figure):
    kind = "polygon"

    def __init__(self, center: Point2, radius: float, n_apexes: int, angle: float = 0.0,
                 resizable: bool = True, rotatable: bool = True, min_radius: float = MIN_RADIUS):
        if n_apexes < 3:
            raise ValueError(f"regular polygon needs >= 3 apexes, got {n_apexes}")
        if radius < min_radius:
            raise ValueError(f"radius {radius} below minimum {min_radius}")
        super().__init__()
        self.center = center
        self.radius = radius
        self.n_apexes = n_apexes
        self.angle = angle
        self.resizable = resizable
        self.rotatable = rotatable
        self.min_radius = min_radius
        self.compensation = 0.0
        self._scale0: float | None = None

    def apexes(self) -> tuple[Point2, ...]:
        n = self.n_apexes
        return tuple(
            point_to_point(self.center, self.angle + 2.0 * math.pi * i / n, self.radius)
            for i in range(n)
        )

    def _build_cover(self) -> Cover:
        pts = self.apexes()
        nodes: list[CoverNode] = []
        if self.resizable:
            for i in range(self.n_apexes):
                nodes.append(CoverNode(
                    len(nodes), StripShape(pts[i], pts[(i + 1) % self.n_apexes], SMALL_NODE),
                    MovementFreedom.ALL, CursorHint.HAND))
        nodes.append(CoverNode(len(nodes), PolygonShape(pts),
                               MovementFreedom.ALL, CursorHint.SIZE_ALL))
        return Cover(tuple(nodes))

    def bounds(self) -> Rect:
        pts = self.apexes()
        left = min(p.x for p in pts)
        top = min(p.y for p in pts)
        return Rect(left, top, max(p.x for p in pts) - left, max(p.y for p in pts) - top)

    def _shift(self, dx, dy) -> None:
        self.center = self.center.translated(dx, dy)

    def start_resizing(self, pt, node_id, shape) -> None:
        d = distance(self.center, pt)
        self._scale0 = self.radius / d if d > 0 else None

    def start_rotation(self, pt) -> None:
        self.compensation = _compensation(self.center, pt, self.angle)

    def _rotate_to(self, pt: Point2) -> bool:
        if pt.x == self.center.x and pt.y == self.center.y:
            return False
        self.angle = line_angle(self.center, pt) - self.compensation
        self.define_cover()
        return True

    def _scale_to(self, pt: Point2) -> bool:
        if self._scale0 is None:
            d = distance(self.center, pt)
            if d == 0:
                return False
            self._scale0 = self.radius / d
        self.radius = max(self.min_radius, self._scale0 * distance(self.center, pt))
        self.define_cover()
        return True

    def move_node(self, node_id, dx, dy, pt, button) -> bool:
        if button is MouseButton.RIGHT:
            return self.rotatable and self._rotate_to(pt)
        if self.resizable and node_id < self.n_apexes:
            return self._scale_to(pt)
        self.move_by(dx, dy)
        return True


class PerforatedPolygonRsRt(Figure):
    """Two similar regular borders; the material is the area between them."""

    kind = "perforated"

    def __init__(self, center: Point2, r_inner: float, r_outer: float, n_apexes: int,
                 angle: float = 0.0, resizable: bool = True, rotatable: bool = True,
                 min_radius: float = MIN_RADIUS, gap: float = RADII_GAP):
        if n_apexes < 3:
            raise ValueError(f"perforated polygon needs >= 3 apexes, got {n_apexes}")
        if not (min_radius <= r_inner and r_inner <= r_outer - gap):
            raise InvalidRingError(
                f"need {min_radius} <= r_inner <= r_outer - {gap}, got {r_inner}, {r_outer}")
        super().__init__()
        self.center = center
        self.r_inner = r_inner
        self.r_outer = r_outer
        self.n_apexes = n_apexes
        self.angle = angle
        self.resizable = resizable
        self.rotatable = rotatable
        self.min_radius = min_radius
        self.gap = gap
        self.compensation = 0.0
        self._scale0: float | None = None
        self._scaling_outer = True

    def _ring_apexes(self, radius: float) -> tuple[Point2, ...]:
        n = self.n_apexes
        return tuple(
            point_to_point(self.center, self.angle + 2.0 * math.pi * i / n, radius)
            for i in range(n)
        )

    def _build_cover(self) -> Cover:
        outer = self._ring_apexes(self.r_outer)
        inner = self._ring_apexes(self.r_inner)
        n = self.n_apexes
        nodes: list[CoverNode] = []
        if self.resizable:
            for i in range(n):
                nodes.append(CoverNode(len(nodes), StripShape(outer[i], outer[(i + 1) % n], SMALL_NODE),
                                       MovementFreedom.ALL, CursorHint.HAND))
            for i in range(n):
                nodes.append(CoverNode(len(nodes), StripShape(inner[i], inner[(i + 1) % n], SMALL_NODE),
                                       MovementFreedom.ALL, CursorHint.HAND))
        for i in range(n):
            j = (i + 1) % n
            quad = PolygonShape((outer[i], outer[j], inner[j], inner[i]))
            nodes.append(CoverNode(len(nodes), quad, MovementFreedom.ALL, CursorHint.SIZE_ALL))
        return Cover(tuple(nodes))

    def bounds(self) -> Rect:
        pts = self._ring_apexes(self.r_outer)
        left = min(p.x for p in pts)
        top = min(p.y for p in pts)
        return Rect(left, top, max(p.x for p in pts) - left, max(p.y for p in pts) - top)

    def _shift(self, dx, dy) -> None:
        self.center = self.center.translated(dx, dy)

    def start_resizing(self, pt, node_id, shape) -> None:
        self._scale0 = None
        if not self.resizable or not isinstance(shape, StripShape):
            return
        self._scaling_outer = node_id < self.n_apexes
        base = self.r_outer if self._scaling_outer else self.r_inner
        d = distance(self.center, pt)
        if d > 0:
            self._scale0 = base / d

    def start_rotation(self, pt) -> None:
        self.compensation = _compensation(self.center, pt, self.angle)

    def move_node(self, node_id, dx, dy, pt, button) -> bool:
        if button is MouseButton.RIGHT:
            if not self.rotatable or (pt.x == self.center.x and pt.y == self.center.y):
                return False
            self.angle = line_angle(self.center, pt) - self.compensation
            self.define_cover()
            return True
        if self.resizable and node_id < 2 * self.n_apexes:
            if self._scale0 is None:
                return False
            target = self._scale0 * distance(self.center, pt)
            if self._scaling_outer:
                self.r_outer = max(self.r_inner + self.gap, target)
            else:
                self.r_inner = min(max(self.min_radius, target), self.r_outer - self.gap)
            self.define_cover()
            return True
        self.move_by(dx, dy)
        return True


class ChatoyantPolygonRsRt(Figure):
    """Polygon with one center and freely moveable apexes; may be nonconvex."""

    kind = "chatoyant"

    def __init__(self, center: Point2, apexes: list[Point2], angle: float = 0.0,
                 rotatable: bool = True, min_radius: float = MIN_RADIUS):
        if len(apexes) < 3:
            raise ValueError(f"chatoyant polygon needs >= 3 apexes, got {len(apexes)}")
        super().__init__()
        self.center = center
        self.apex_points = list(apexes)
        self.angle = angle
        self.rotatable = rotatable
        self.min_radius = min_radius
        self.compensation = 0.0
        self._scale_vecs: list[tuple[float, float]] | None = None
        self._press_dist = 0.0
        self._rot_vecs: list[tuple[float, float]] | None = None
        self._rot_angle0 = 0.0

    @property
    def n_apexes(self) -> int:
        return len(self.apex_points)

    def _build_cover(self) -> Cover:
        n = self.n_apexes
        pts = self.apex_points
        nodes: list[CoverNode] = []
        for p in pts:
            nodes.append(CoverNode(len(nodes), CircleShape(p, SMALL_NODE),
                                   MovementFreedom.ALL, CursorHint.HAND))
        nodes.append(CoverNode(len(nodes), CircleShape(self.center, SMALL_NODE),
                               MovementFreedom.ALL, CursorHint.HAND))
        for i in range(n):
            nodes.append(CoverNode(len(nodes), StripShape(pts[i], pts[(i + 1) % n], SMALL_NODE),
                                   MovementFreedom.ALL, CursorHint.HAND))
        for i in range(n):
            tri = PolygonShape((self.center, pts[i], pts[(i + 1) % n]))
            nodes.append(CoverNode(len(nodes), tri, MovementFreedom.ALL, CursorHint.SIZE_ALL))
        return Cover(tuple(nodes))

    def bounds(self) -> Rect:
        pts = [*self.apex_points, self.center]
        left = min(p.x for p in pts)
        top = min(p.y for p in pts)
        return Rect(left, top, max(p.x for p in pts) - left, max(p.y for p in pts) - top)

    def _shift(self, dx, dy) -> None:
        self.center = self.center.translated(dx, dy)
        self.apex_points = [p.translated(dx, dy) for p in self.apex_points]

    def start_resizing(self, pt, node_id, shape) -> None:
        self._scale_vecs = None
        if isinstance(shape, StripShape):
            d = distance(self.center, pt)
            if d > 0:
                self._press_dist = d
                self._scale_vecs = [(p.x - self.center.x, p.y - self.center.y)
                                    for p in self.apex_points]

    def start_rotation(self, pt) -> None:
        self.compensation = _compensation(self.center, pt, self.angle)
        self._rot_angle0 = self.angle
        self._rot_vecs = [(p.x - self.center.x, p.y - self.center.y) for p in self.apex_points]

    def move_node(self, node_id, dx, dy, pt, button) -> bool:
        n = self.n_apexes
        if button is MouseButton.RIGHT:
            if not self.rotatable or self._rot_vecs is None:
                return False
            if pt.x == self.center.x and pt.y == self.center.y:
                return False
            self.angle = line_angle(self.center, pt) - self.compensation
            rot = self.angle - self._rot_angle0
            cos_r, sin_r = math.cos(rot), math.sin(rot)
            self.apex_points = [
                Point2(self.center.x + vx * cos_r - vy * sin_r,
                       self.center.y + vx * sin_r + vy * cos_r)
                for vx, vy in self._rot_vecs
            ]
            self.define_cover()
            return True
        if node_id < n:
            self.apex_points[node_id] = self.apex_points[node_id].translated(dx, dy)
            self.define_cover()
            return True
        if node_id == n:
            self.center = self.center.translated(dx, dy)
            self.define_cover()
            return True
        if node_id <= 2 * n:
            if self._scale_vecs is None:
                return False
            shortest = min(math.hypot(vx, vy) for vx, vy in self._scale_vecs)
            k = distance(self.center, pt) / self._press_dist
            if shortest > 0:
                k = max(k, self.min_radius / shortest)
            self.apex_points = [Point2(self.center.x + vx * k, self.center.y + vy * k)
                                for vx, vy in self._scale_vecs]
            self.define_cover()
            return True
        self.move_by(dx, dy)
        return True


# ---------------------------------------------------------------------------
# figures with N-node covers: rebuild is deferred to release

class NNodeFigure(Figure):
    """Node count is a function of size, so rebuilding mid-drag would pull
    the caught node out from under the pointer. Resizes only mark the cover
    stale; the rebuild happens when the object is released."""

    def __init__(self):
        super().__init__()
        self._pending_rebuild = False

    def _mark_stale(self) -> None:
        self._pending_rebuild = True

    def on_release(self) -> None:
        if self._pending_rebuild:
            self.define_cover()
            self._pending_rebuild = False


class CircleRsRt(NNodeFigure):
    kind = "circle"

    def __init__(self, center: Point2, radius: float, min_radius: float = MIN_RADIUS):
        if radius < min_radius:
            raise ValueError(f"radius {radius} below minimum {min_radius}")
        super().__init__()
        self.center = center
        self.radius = radius
        self.min_radius = min_radius
        self._scale0: float | None = None

    def _build_cover(self) -> Cover:
        k = border_circle_count(self.radius)
        nodes = [
            CoverNode(i, CircleShape(point_to_point(self.center, 2.0 * math.pi * i / k, self.radius),
                                     SMALL_NODE),
                      MovementFreedom.ALL, CursorHint.HAND)
            for i in range(k)
        ]
        nodes.append(CoverNode(k, CircleShape(self.center, max(1.0, self.radius - SMALL_NODE)),
                               MovementFreedom.ALL, CursorHint.SIZE_ALL))
        return Cover(tuple(nodes))

    def border_node_count(self) -> int:
        return border_circle_count(self.radius)

    def bounds(self) -> Rect:
        r = self.radius
        return Rect(self.center.x - r, self.center.y - r, 2 * r, 2 * r)

    def _shift(self, dx, dy) -> None:
        self.center = self.center.translated(dx, dy)

    def start_resizing(self, pt, node_id, shape) -> None:
        d = distance(self.center, pt)
        self._scale0 = self.radius / d if d > 0 else None

    def move_node(self, node_id, dx, dy, pt, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        if node_id < len(self.cover()) - 1:
            if self._scale0 is None:
                return False
            self.radius = max(self.min_radius, self._scale0 * distance(self.center, pt))
            self._mark_stale()
            return True
        self.move_by(dx, dy)
        return True


class RingRsRt(NNodeFigure):
    kind = "ring"

    def __init__(self, center: Point2, r_inner: float, r_outer: float,
                 min_radius: float = MIN_RADIUS, gap: float = RADII_GAP):
        if not 0 < r_inner < r_outer:
            raise InvalidRingError(f"need 0 < r_inner < r_outer, got {r_inner}, {r_outer}")
        super().__init__()
        self.center = center
        self.r_inner = r_inner
        self.r_outer = r_outer
        self.min_radius = min_radius
        self.gap = gap
        self._scale0: float | None = None
        self._scaling_outer = True
        self._sectors_caught = 0

    def sector_count(self) -> int:
        return ring_sector_count(self.r_outer)

    def _trapeze(self, r0: float, r1: float, a0: float, a1: float) -> PolygonShape:
        return PolygonShape((
            point_to_point(self.center, a0, r0),
            point_to_point(self.center, a0, r1),
            point_to_point(self.center, a1, r1),
            point_to_point(self.center, a1, r0),
        ))

    def _build_cover(self) -> Cover:
        m = self.sector_count()
        step = 2.0 * math.pi / m
        nodes: list[CoverNode] = []
        for i in range(m):
            a0, a1 = i * step, (i + 1) * step
            nodes.append(CoverNode(len(nodes),
                                   self._trapeze(self.r_outer - RING_HALF_DEPTH,
                                                 self.r_outer + RING_HALF_DEPTH, a0, a1),
                                   MovementFreedom.ALL, CursorHint.HAND))
        for i in range(m):
            a0, a1 = i * step, (i + 1) * step
            nodes.append(CoverNode(len(nodes),
                                   self._trapeze(max(0.0, self.r_inner - RING_HALF_DEPTH),
                                                 self.r_inner + RING_HALF_DEPTH, a0, a1),
                                   MovementFreedom.ALL, CursorHint.HAND))
        for i in range(m):
            a0, a1 = i * step, (i + 1) * step
            nodes.append(CoverNode(len(nodes), self._trapeze(self.r_inner, self.r_outer, a0, a1),
                                   MovementFreedom.ALL, CursorHint.SIZE_ALL))
        return Cover(tuple(nodes))

    def bounds(self) -> Rect:
        r = self.r_outer
        return Rect(self.center.x - r, self.center.y - r, 2 * r, 2 * r)

    def _shift(self, dx, dy) -> None:
        self.center = self.center.translated(dx, dy)

    def start_resizing(self, pt, node_id, shape) -> None:
        self._scale0 = None
        self._sectors_caught = self.sector_count()
        if node_id >= 2 * self._sectors_caught:
            return
        self._scaling_outer = node_id < self._sectors_caught
        base = self.r_outer if self._scaling_outer else self.r_inner
        d = distance(self.center, pt)
        if d > 0:
            self._scale0 = base / d

    def move_node(self, node_id, dx, dy, pt, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        m = self._sectors_caught or self.sector_count()
        if node_id < 2 * m:
            if self._scale0 is None:
                return False
            target = self._scale0 * distance(self.center, pt)
            if self._scaling_outer:
                self.r_outer = max(self.r_inner + self.gap, target)
            else:
                self.r_inner = min(max(self.min_radius, target), self.r_outer - self.gap)
            self._mark_stale()
            return True
        self.move_by(dx, dy)
        return True


class StripRsRt(NNodeFigure):
    kind = "strip"

    def __init__(self, c0: Point2, c1: Point2, radius: float,
                 rotatable: bool = True, min_radius: float = MIN_RADIUS,
                 min_length: float = MIN_SIDE):
        if radius < min_radius:
            raise ValueError(f"radius {radius} below minimum {min_radius}")
        if distance(c0, c1) < min_length:
            raise ValueError("strip endpoints closer than the minimum length")
        super().__init__()
        self.c0 = c0
        self.c1 = c1
        self.radius = radius
        self.rotatable = rotatable
        self.min_radius = min_radius
        self.min_length = min_length
        self.angle = line_angle(c0, c1)
        self.compensation = 0.0
        self._length = distance(c0, c1)
        self._rot_center = self.midpoint()
        self._scale0: float | None = None
        self._fan_count_caught = 0

    def midpoint(self) -> Point2:
        return Point2((self.c0.x + self.c1.x) / 2.0, (self.c0.y + self.c1.y) / 2.0)

    def fan_count(self) -> int:
        """Small circles per semicircular end cap, spaced along the arc."""
        return max(4, math.ceil(math.pi * self.radius / BORDER_SPACING)) + 1

    def _axis_distance(self, pt: Point2) -> float:
        ux = (self.c1.x - self.c0.x) / distance(self.c0, self.c1)
        uy = (self.c1.y - self.c0.y) / distance(self.c0, self.c1)
        return abs((pt.x - self.c0.x) * uy - (pt.y - self.c0.y) * ux)

    def _build_cover(self) -> Cover:
        perp = self.angle + math.pi / 2.0
        off_x = self.radius * math.cos(perp)
        off_y = self.radius * math.sin(perp)
        k = self.fan_count()
        nodes: list[CoverNode] = [
            CoverNode(0, StripShape(self.c0.translated(off_x, off_y),
                                    self.c1.translated(off_x, off_y), SMALL_NODE),
                      MovementFreedom.ALL, CursorHint.HAND),
            CoverNode(1, StripShape(self.c0.translated(-off_x, -off_y),
                                    self.c1.translated(-off_x, -off_y), SMALL_NODE),
                      MovementFreedom.ALL, CursorHint.HAND),
        ]
        for j in range(k):
            a = self.angle + math.pi / 2.0 + math.pi * j / (k - 1)
            nodes.append(CoverNode(len(nodes),
                                   CircleShape(point_to_point(self.c0, a, self.radius), SMALL_NODE),
                                   MovementFreedom.ALL, CursorHint.HAND))
        for j in range(k):
            a = self.angle - math.pi / 2.0 + math.pi * j / (k - 1)
            nodes.append(CoverNode(len(nodes),
                                   CircleShape(point_to_point(self.c1, a, self.radius), SMALL_NODE),
                                   MovementFreedom.ALL, CursorHint.HAND))
        nodes.append(CoverNode(len(nodes), StripShape(self.c0, self.c1, self.radius),
                               MovementFreedom.ALL, CursorHint.SIZE_ALL))
        return Cover(tuple(nodes))

    def bounds(self) -> Rect:
        return _capsule_bounds(self.c0, self.c1, self.radius)

    def _shift(self, dx, dy) -> None:
        self.c0 = self.c0.translated(dx, dy)
        self.c1 = self.c1.translated(dx, dy)
        self._rot_center = self.midpoint()

    def start_resizing(self, pt, node_id, shape) -> None:
        self._scale0 = None
        self._fan_count_caught = self.fan_count()
        if node_id in (0, 1):
            d = self._axis_distance(pt)
            if d > 0:
                self._scale0 = self.radius / d

    def start_rotation(self, pt) -> None:
        self._rot_center = self.midpoint()
        self._length = distance(self.c0, self.c1)
        self.compensation = _compensation(self._rot_center, pt, self.angle)

    def move_node(self, node_id, dx, dy, pt, button) -> bool:
        if button is MouseButton.RIGHT:
            if not self.rotatable:
                return False
            center = self._rot_center
            if pt.x == center.x and pt.y == center.y:
                return False
            self.angle = line_angle(center, pt) - self.compensation
            self.c0 = point_to_point(center, self.angle + math.pi, self._length / 2.0)
            self.c1 = point_to_point(self.c0, self.angle, self._length)
            self.define_cover()
            return True
        k = self._fan_count_caught or self.fan_count()
        if node_id in (0, 1):
            if self._scale0 is None:
                return False
            self.radius = max(self.min_radius, self._scale0 * self._axis_distance(pt))
            self._mark_stale()
            return True
        if node_id < 2 + 2 * k:
            length = distance(self.c0, self.c1)
            if node_id < 2 + k:
                ux = (self.c0.x - self.c1.x) / length
                uy = (self.c0.y - self.c1.y) / length
                d = max(self.min_length, (pt.x - self.c1.x) * ux + (pt.y - self.c1.y) * uy)
                self.c0 = Point2(self.c1.x + ux * d, self.c1.y + uy * d)
            else:
                ux = (self.c1.x - self.c0.x) / length
                uy = (self.c1.y - self.c0.y) / length
                d = max(self.min_length, (pt.x - self.c0.x) * ux + (pt.y - self.c0.y) * uy)
                self.c1 = Point2(self.c0.x + ux * d, self.c0.y + uy * d)
            self._rot_center = self.midpoint()
            self._mark_stale()
            return True
        self.move_by(dx, dy)
        return True


class CircleInsidePolyRsRt(NNodeFigure):
    """Regular polygon pierced by a round hole; the hole lets the pointer
    through to whatever lies beneath."""

    kind = "circleinpoly"

    def __init__(self, center: Point2, radius: float, n_apexes: int, hole_radius: float,
                 hole_center: Point2 | None = None, angle: float = 0.0,
                 rotatable: bool = True, min_radius: float = MIN_RADIUS, gap: float = RADII_GAP):
        if n_apexes < 3:
            raise ValueError(f"polygon needs >= 3 apexes, got {n_apexes}")
        super().__init__()
        self.center = center
        self.radius = radius
        self.n_apexes = n_apexes
        self.hole_radius = hole_radius
        self.hole_center = hole_center if hole_center is not None else center
        self.angle = angle
        self.rotatable = rotatable
        self.min_radius = min_radius
        self.gap = gap
        if hole_radius < min_radius or self._hole_slack() < 0:
            raise InvalidHoleError(
                f"hole radius {hole_radius} does not fit a {n_apexes}-gon of radius {radius}")
        self.compensation = 0.0
        self._scale0: float | None = None
        self._scaling_hole = False
        self._hole_nodes_caught = 0
        self._rot_angle0 = 0.0
        self._rot_hole_vec = (0.0, 0.0)

    def apothem(self) -> float:
        return self.radius * math.cos(math.pi / self.n_apexes)

    def _hole_slack(self) -> float:
        used = distance(self.center, self.hole_center) + self.hole_radius + self.gap
        return self.apothem() - used

    def apexes(self) -> tuple[Point2, ...]:
        n = self.n_apexes
        return tuple(
            point_to_point(self.center, self.angle + 2.0 * math.pi * i / n, self.radius)
            for i in range(n)
        )

    def hole_node_count(self) -> int:
        return border_circle_count(self.hole_radius)

    def _build_cover(self) -> Cover:
        k = self.hole_node_count()
        pts = self.apexes()
        n = self.n_apexes
        nodes: list[CoverNode] = []
        for i in range(k):
            nodes.append(CoverNode(
                len(nodes),
                CircleShape(point_to_point(self.hole_center, 2.0 * math.pi * i / k,
                                           self.hole_radius), SMALL_NODE),
                MovementFreedom.ALL, CursorHint.HAND))
        for i in range(n):
            nodes.append(CoverNode(len(nodes), StripShape(pts[i], pts[(i + 1) % n], SMALL_NODE),
                                   MovementFreedom.ALL, CursorHint.HAND))
        nodes.append(CoverNode(len(nodes), CircleShape(self.hole_center, self.hole_radius),
                               MovementFreedom.TRANSPARENT, CursorHint.DEFAULT))
        nodes.append(CoverNode(len(nodes), PolygonShape(pts),
                               MovementFreedom.ALL, CursorHint.SIZE_ALL))
        return Cover(tuple(nodes))

    def bounds(self) -> Rect:
        pts = self.apexes()
        left = min(p.x for p in pts)
        top = min(p.y for p in pts)
        return Rect(left, top, max(p.x for p in pts) - left, max(p.y for p in pts) - top)

    def _shift(self, dx, dy) -> None:
        self.center = self.center.translated(dx, dy)
        self.hole_center = self.hole_center.translated(dx, dy)

    def start_resizing(self, pt, node_id, shape) -> None:
        self._scale0 = None
        self._hole_nodes_caught = self.hole_node_count()
        if node_id < self._hole_nodes_caught:
            self._scaling_hole = True
            d = distance(self.hole_center, pt)
            if d > 0:
                self._scale0 = self.hole_radius / d
        elif node_id < self._hole_nodes_caught + self.n_apexes:
            self._scaling_hole = False
            d = distance(self.center, pt)
            if d > 0:
                self._scale0 = self.radius / d

    def start_rotation(self, pt) -> None:
        self.compensation = _compensation(self.center, pt, self.angle)
        self._rot_angle0 = self.angle
        self._rot_hole_vec = (self.hole_center.x - self.center.x,
                              self.hole_center.y - self.center.y)

    def move_node(self, node_id, dx, dy, pt, button) -> bool:
        if button is MouseButton.RIGHT:
            if not self.rotatable or (pt.x == self.center.x and pt.y == self.center.y):
                return False
            self.angle = line_angle(self.center, pt) - self.compensation
            rot = self.angle - self._rot_angle0
            vx, vy = self._rot_hole_vec
            self.hole_center = Point2(
                self.center.x + vx * math.cos(rot) - vy * math.sin(rot),
                self.center.y + vx * math.sin(rot) + vy * math.cos(rot))
            self.define_cover()
            return True
        k = self._hole_nodes_caught or self.hole_node_count()
        if node_id < k + self.n_apexes:
            if self._scale0 is None:
                return False
            offset = distance(self.center, self.hole_center)
            if self._scaling_hole and node_id < k:
                target = self._scale0 * distance(self.hole_center, pt)
                ceiling = self.apothem() - self.gap - offset
                self.hole_radius = min(max(self.min_radius, target), ceiling)
            else:
                target = self._scale0 * distance(self.center, pt)
                floor = (self.hole_radius + self.gap + offset) / math.cos(math.pi / self.n_apexes)
                self.radius = max(max(self.min_radius, floor), target)
            self._mark_stale()
            return True
        self.move_by(dx, dy)
        return True


# ---------------------------------------------------------------------------
# area with transparent holes

@dataclass(frozen=True)
class HoleCircle:
    center: Point2
    radius: float

    def translated(self, dx: float, dy: float) -> "HoleCircle":
        return HoleCircle(self.center.translated(dx, dy), self.radius)

    def shape(self) -> NodeShape:
        return CircleShape(self.center, self.radius)


@dataclass(frozen=True)
class HolePoly:
    apexes: tuple[Point2, ...]

    def translated(self, dx: float, dy: float) -> "HolePoly":
        return HolePoly(tuple(p.translated(dx, dy) for p in self.apexes))

    def shape(self) -> NodeShape:
        return PolygonShape(self.apexes)


Hole = HoleCircle | HolePoly


class AreaWithHoles(Figure):
    """Rectangular area whose holes hand the pointer to objects beneath."""

    kind = "holes"

    def __init__(self, rc: Rect, holes: list[Hole] | None = None):
        super().__init__()
        self.rc = rc
        self.holes: list[Hole] = []
        for hole in holes or []:
            self._check_hole(hole)
            self.holes.append(hole)

    def _check_hole(self, hole: Hole) -> None:
        try:
            shape = hole.shape()
        except ValueError as exc:
            raise InvalidHoleError(str(exc)) from exc
        if isinstance(shape, CircleShape):
            hole_box = Rect(shape.center.x - shape.radius, shape.center.y - shape.radius,
                            2 * shape.radius, 2 * shape.radius)
        else:
            left = min(p.x for p in shape.apexes)
            top = min(p.y for p in shape.apexes)
            hole_box = Rect(left, top, max(p.x for p in shape.apexes) - left,
                            max(p.y for p in shape.apexes) - top)
        if not self.rc.contains_rect(hole_box):
            raise InvalidHoleError("hole sticks out of the area")

    def add_hole(self, hole: Hole) -> None:
        self._check_hole(hole)
        self.holes.append(hole)
        self.define_cover()

    def plug_hole(self, index: int) -> None:
        if not 0 <= index < len(self.holes):
            raise IndexError(f"hole {index} of {len(self.holes)}")
        del self.holes[index]
        self.define_cover()

    def _build_cover(self) -> Cover:
        nodes = [
            CoverNode(i, hole.shape(), MovementFreedom.TRANSPARENT, CursorHint.DEFAULT)
            for i, hole in enumerate(self.holes)
        ]
        nodes.append(CoverNode(len(nodes), rect_polygon(self.rc),
                               MovementFreedom.ALL, CursorHint.SIZE_ALL))
        return Cover(tuple(nodes))

    def bounds(self) -> Rect:
        return self.rc

    def _shift(self, dx, dy) -> None:
        self.rc = self.rc.translated(dx, dy)
        self.holes = [h.translated(dx, dy) for h in self.holes]

    def move_node(self, node_id, dx, dy, pt, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        self.move_by(dx, dy)
        return True


# ---------------------------------------------------------------------------
# rotatable text

class RotatableLabel(Figure):
    """One line of text on a fixed 8x16 character grid, spun around its center."""

    kind = "label"

    def __init__(self, center: Point2, text: str, angle: float = 0.0):
        super().__init__()
        self.center = center
        self.text = text
        self.angle = angle
        self.compensation = 0.0

    def text_size(self) -> tuple[float, float]:
        return CHAR_W * len(self.text), CHAR_H

    def _strip(self) -> StripShape:
        w, h = self.text_size()
        half = max(0.0, w / 2.0 - h / 2.0)
        if half == 0.0:
            return StripShape(self.center, self.center, h / 2.0)
        e0 = point_to_point(self.center, self.angle + math.pi, half)
        e1 = point_to_point(self.center, self.angle, half)
        return StripShape(e0, e1, h / 2.0)

    def _build_cover(self) -> Cover:
        return Cover((CoverNode(0, self._strip(), MovementFreedom.ALL, CursorHint.SIZE_ALL),))

    def bounds(self) -> Rect:
        s = self._strip()
        return _capsule_bounds(s.a, s.b, s.radius)

    def _shift(self, dx, dy) -> None:
        self.center = self.center.translated(dx, dy)

    def start_rotation(self, pt) -> None:
        self.compensation = _compensation(self.center, pt, self.angle)

    def move_node(self, node_id, dx, dy, pt, button) -> bool:
        if button is MouseButton.RIGHT:
            if pt.x == self.center.x and pt.y == self.center.y:
                return False
            self.angle = line_angle(self.center, pt) - self.compensation
            self.define_cover()
            return True
        self.move_by(dx, dy)
        return True


def union_bounds(objects: list[MoveableObject], padding: float = 0.0) -> Rect:
    return frame_around([o.bounds() for o in objects], padding)
