"""Proxies that make ordinary widgets moveable and resizable.

A widget cannot give up its interior the way a figure can: clicks inside
must keep reaching the widget itself. So the proxy surrounds the widget
with a grab frame and small resize handles, and covers the interior with
a blocking node so nothing beneath is caught through it.

Whether the widget resizes at all is derived from its size limits: an
axis with a real range (min < max) is resizable, an unset pair (0, 0) or
a pinned pair (min == max) is not.
"""
from __future__ import annotations

from .cover import (
    CircleShape,
    Cover,
    CoverNode,
    CursorHint,
    MovementFreedom,
    Resizing,
    StripShape,
    rect_polygon,
)
from .geometry import Point2, Rect
from .moveable import MouseButton, MoveableObject

HANDLE_RADIUS = 4.0
FRAME_WIDTH = 6.0
MIN_FRAME_WIDTH = 2.0


def derive_resizing(min_size: tuple[float, float], max_size: tuple[float, float]) -> Resizing:
    we = max_size[0] > min_size[0]
    ns = max_size[1] > min_size[1]
    if we and ns:
        return Resizing.ANY
    if we:
        return Resizing.WE
    if ns:
        return Resizing.NS
    return Resizing.NONE


class WidgetProxy(MoveableObject):
    kind = "widget"
    angle = 0.0

    def __init__(self, rc: Rect, min_size: tuple[float, float] = (0.0, 0.0),
                 max_size: tuple[float, float] = (0.0, 0.0), movable: bool = True,
                 frame_width: float = FRAME_WIDTH, handle_radius: float = HANDLE_RADIUS,
                 label: str = ""):
        super().__init__()
        self.rc = rc
        self.min_size = min_size
        self.max_size = max_size
        self.movable = movable
        self.frame_width = max(MIN_FRAME_WIDTH, frame_width)
        self.handle_radius = handle_radius
        self.label = label
        self.resizing = derive_resizing(min_size, max_size)
        if self.resizing in (Resizing.WE, Resizing.ANY) and not (
                min_size[0] <= rc.width <= max_size[0]):
            raise ValueError(f"width {rc.width} outside limits {min_size[0]}..{max_size[0]}")
        if self.resizing in (Resizing.NS, Resizing.ANY) and not (
                min_size[1] <= rc.height <= max_size[1]):
            raise ValueError(f"height {rc.height} outside limits {min_size[1]}..{max_size[1]}")

    # -- cover ----------------------------------------------------------

    def _handles(self) -> list[tuple[str, Point2, CursorHint, MovementFreedom]]:
        rc = self.rc
        mid_t = Point2(rc.left + rc.width / 2.0, rc.top)
        mid_r = Point2(rc.right, rc.top + rc.height / 2.0)
        mid_b = Point2(rc.left + rc.width / 2.0, rc.bottom)
        mid_l = Point2(rc.left, rc.top + rc.height / 2.0)
        tl, tr, br, bl = rc.corners()
        if self.resizing is Resizing.ANY:
            return [
                ("corner-tl", tl, CursorHint.HAND, MovementFreedom.ALL),
                ("corner-tr", tr, CursorHint.HAND, MovementFreedom.ALL),
                ("corner-br", br, CursorHint.HAND, MovementFreedom.ALL),
                ("corner-bl", bl, CursorHint.HAND, MovementFreedom.ALL),
                ("edge-t", mid_t, CursorHint.SIZE_NS, MovementFreedom.NS),
                ("edge-r", mid_r, CursorHint.SIZE_WE, MovementFreedom.WE),
                ("edge-b", mid_b, CursorHint.SIZE_NS, MovementFreedom.NS),
                ("edge-l", mid_l, CursorHint.SIZE_WE, MovementFreedom.WE),
            ]
        if self.resizing is Resizing.NS:
            return [
                ("edge-t", mid_t, CursorHint.SIZE_NS, MovementFreedom.NS),
                ("edge-b", mid_b, CursorHint.SIZE_NS, MovementFreedom.NS),
            ]
        if self.resizing is Resizing.WE:
            return [
                ("edge-l", mid_l, CursorHint.SIZE_WE, MovementFreedom.WE),
                ("edge-r", mid_r, CursorHint.SIZE_WE, MovementFreedom.WE),
            ]
        return []

    def roles(self) -> list[str]:
        out = [role for role, *_ in self._handles()]
        if self.movable:
            out += ["band-t", "band-r", "band-b", "band-l"]
        out.append("block")
        return out

    def _build_cover(self) -> Cover:
        nodes: list[CoverNode] = []
        for _, center, cursor, freedom in self._handles():
            nodes.append(CoverNode(len(nodes), CircleShape(center, self.handle_radius),
                                   freedom, cursor))
        if self.movable:
            tl, tr, br, bl = self.rc.corners()
            half = self.frame_width / 2.0
            for a, b in ((tl, tr), (tr, br), (bl, br), (tl, bl)):
                nodes.append(CoverNode(len(nodes), StripShape(a, b, half),
                                       MovementFreedom.ALL, CursorHint.SIZE_ALL))
        nodes.append(CoverNode(len(nodes), rect_polygon(self.rc),
                               MovementFreedom.NONE, CursorHint.DEFAULT))
        return Cover(tuple(nodes))

    # -- geometry ---------------------------------------------------------

    def bounds(self) -> Rect:
        return self.rc

    def _shift(self, dx, dy) -> None:
        self.rc = self.rc.translated(dx, dy)

    def _clamp_w(self, w: float) -> float:
        return min(max(w, self.min_size[0]), self.max_size[0])

    def _clamp_h(self, h: float) -> float:
        return min(max(h, self.min_size[1]), self.max_size[1])

    def _apply_role(self, role: str, dx: float, dy: float) -> None:
        rc = self.rc
        left, top, w, h = rc.left, rc.top, rc.width, rc.height
        if role in ("corner-tl", "corner-bl", "edge-l"):
            w = self._clamp_w(w - dx)
            left = rc.right - w
        elif role in ("corner-tr", "corner-br", "edge-r"):
            w = self._clamp_w(w + dx)
        if role in ("corner-tl", "corner-tr", "edge-t"):
            h = self._clamp_h(h - dy)
            top = rc.bottom - h
        elif role in ("corner-bl", "corner-br", "edge-b"):
            h = self._clamp_h(h + dy)
        self.rc = Rect(left, top, w, h)

    def move_node(self, node_id, dx, dy, pt, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        role = self.roles()[node_id]
        if role == "block":
            return False
        if role.startswith("band"):
            self.move_by(dx, dy)
            return True
        if dx == 0.0 and dy == 0.0:
            return False
        self._apply_role(role, dx, dy)
        self.define_cover()
        return True
