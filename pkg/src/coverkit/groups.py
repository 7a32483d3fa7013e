"""Related objects moving together: commented rectangles, rigid links,
range-limited frames, elastic frames and the rubber-band selection frame.

Individually moveable members are registered in the queue before their
parent (children first), so a click on a member is decided by the member
and anything between members lands on the parent.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .cover import (
    CircleShape,
    Cover,
    CoverNode,
    CursorHint,
    MovementFreedom,
    Resizing,
    StripShape,
    rect_polygon,
    standard_rect_cover,
    CORNER_RADIUS,
    HALF_STRIP,
)
from .errors import EmptyInputError
from .figures import (
    CHAR_H,
    CHAR_W,
    MIN_SIDE,
    RectangleStandard,
    _RECT_ROLES,
    _capsule_bounds,
    _compensation,
)
from .geometry import Point2, Rect, frame_around, line_angle, point_to_point
from .moveable import MouseButton, MoveableObject
from .mover import Mover

ELASTIC_PADDING = 8.0


# ---------------------------------------------------------------------------
# comments around a rectangle

@dataclass(frozen=True)
class AxisCoefficient:
    """Where a comment sits along one axis of its parent rect.

    A comment inside the parent span keeps its relative position there
    (``fraction``); a comment beyond an edge keeps its pixel distance to
    that edge (``offset``, negative before left/top, positive past
    right/bottom)."""

    kind: str  # "fraction" | "offset"
    value: float

    def coordinate(self, lo: float, hi: float) -> float:
        if self.kind == "fraction":
            return lo + self.value * (hi - lo)
        return (lo if self.value < 0 else hi) + self.value


def axis_coefficient(coord: float, lo: float, hi: float) -> AxisCoefficient:
    if coord < lo:
        return AxisCoefficient("offset", coord - lo)
    if coord > hi:
        return AxisCoefficient("offset", coord - hi)
    span = hi - lo
    return AxisCoefficient("fraction", (coord - lo) / span if span > 0 else 0.0)


class Comment(MoveableObject):
    """One line of text tied to a rectangle by per-axis coefficients."""

    kind = "comment"

    def __init__(self, parent: "RectangleWithComments", center: Point2, text: str,
                 angle: float = 0.0):
        super().__init__(parent_id=parent.id)
        self._parent = parent
        self.center = center
        self.text = text
        self.angle = angle
        self.compensation = 0.0
        self.coef_x = axis_coefficient(center.x, parent.rc.left, parent.rc.right)
        self.coef_y = axis_coefficient(center.y, parent.rc.top, parent.rc.bottom)

    def parent_rect_changed(self, rc: Rect) -> None:
        """Reposition from the stored coefficients; the coefficients stay."""
        self.center = Point2(self.coef_x.coordinate(rc.left, rc.right),
                             self.coef_y.coordinate(rc.top, rc.bottom))
        self.define_cover()

    def _recalc_coefficients(self) -> None:
        rc = self._parent.rc
        self.coef_x = axis_coefficient(self.center.x, rc.left, rc.right)
        self.coef_y = axis_coefficient(self.center.y, rc.top, rc.bottom)

    def text_size(self) -> tuple[float, float]:
        return CHAR_W * len(self.text), CHAR_H

    def _strip(self) -> StripShape:
        w, h = self.text_size()
        half = max(0.0, w / 2.0 - h / 2.0)
        if half == 0.0:
            return StripShape(self.center, self.center, h / 2.0)
        return StripShape(point_to_point(self.center, self.angle + math.pi, half),
                          point_to_point(self.center, self.angle, half), h / 2.0)

    def _build_cover(self) -> Cover:
        return Cover((CoverNode(0, self._strip(), MovementFreedom.ALL, CursorHint.SIZE_ALL),))

    def bounds(self) -> Rect:
        s = self._strip()
        return _capsule_bounds(s.a, s.b, s.radius)

    def _shift(self, dx, dy) -> None:
        self.center = self.center.translated(dx, dy)

    def move_by(self, dx, dy) -> None:
        # a user-driven move; the parent stays put and the anchor is re-read
        super().move_by(dx, dy)
        self._recalc_coefficients()

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


class RectangleWithComments(RectangleStandard):
    kind = "rectc"

    def __init__(self, rc: Rect, resizing: Resizing = Resizing.ANY,
                 min_width: float = MIN_SIDE, min_height: float = MIN_SIDE):
        super().__init__(rc, resizing, min_width, min_height)
        self.comments: list[Comment] = []

    def add_comment(self, center: Point2, text: str, angle: float = 0.0) -> Comment:
        comment = Comment(self, center, text, angle)
        self.comments.append(comment)
        return comment

    def _inform_comments(self) -> None:
        for c in self.comments:
            c.parent_rect_changed(self.rc)

    def _geometry_changed(self) -> None:
        super()._geometry_changed()
        self._inform_comments()

    def _moved_whole(self) -> None:
        self._inform_comments()

    def into_mover(self, mover: Mover, index: int) -> None:
        mover.insert(index, self)
        for c in reversed(self.comments):
            mover.insert(index, c)


# ---------------------------------------------------------------------------
# rigidly linked rectangles

class LinkedRectangles(MoveableObject):
    """A set of rectangles glued together; any member drags the whole set."""

    kind = "linked"
    angle = 0.0

    def __init__(self, members: list[Rect], labels: list[str] | None = None):
        if not members:
            raise EmptyInputError("linked group of no rectangles")
        super().__init__()
        self.members = list(members)
        self.labels = list(labels or [""] * len(members))

    def _build_cover(self) -> Cover:
        return Cover(tuple(
            CoverNode(i, rect_polygon(rc), MovementFreedom.ALL, CursorHint.SIZE_ALL)
            for i, rc in enumerate(self.members)
        ))

    def bounds(self) -> Rect:
        return frame_around(self.members)

    def _shift(self, dx, dy) -> None:
        self.members = [rc.translated(dx, dy) for rc in self.members]

    def move_node(self, node_id, dx, dy, pt, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        self.move_by(dx, dy)
        return True


# ---------------------------------------------------------------------------
# frame with a size range and anchored elements

@dataclass(frozen=True)
class RectRange:
    min_w: float
    max_w: float
    min_h: float
    max_h: float

    def __post_init__(self):
        if self.min_w > self.max_w or self.min_h > self.max_h:
            raise ValueError("size range minimums exceed maximums")


@dataclass
class AnchoredElement:
    """Fixed-size element whose center keeps a fractional spot in the frame."""

    size: tuple[float, float]
    fx: float
    fy: float
    label: str = ""

    def rect_in(self, frame: Rect) -> Rect:
        cx = frame.left + self.fx * frame.width
        cy = frame.top + self.fy * frame.height
        return Rect(cx - self.size[0] / 2.0, cy - self.size[1] / 2.0, *self.size)


class FrameGroup(MoveableObject):
    """Rectangular frame resizable within a range; elements ride along."""

    kind = "group"
    angle = 0.0

    def __init__(self, frame: Rect, size_range: RectRange,
                 elements: list[AnchoredElement] | None = None, title: str = ""):
        super().__init__()
        self.frame = frame
        self.size_range = size_range
        self.elements = list(elements or [])
        self.title = title

    @classmethod
    def around_rects(cls, frame: Rect, size_range: RectRange,
                     rects: list[Rect], labels: list[str] | None = None,
                     title: str = "") -> "FrameGroup":
        labels = labels or [""] * len(rects)
        elements = []
        for rc, label in zip(rects, labels):
            c = rc.center
            fx = (c.x - frame.left) / frame.width if frame.width > 0 else 0.0
            fy = (c.y - frame.top) / frame.height if frame.height > 0 else 0.0
            elements.append(AnchoredElement((rc.width, rc.height),
                                            min(max(fx, 0.0), 1.0),
                                            min(max(fy, 0.0), 1.0), label))
        return cls(frame, size_range, elements, title)

    def resizing(self) -> Resizing:
        we = self.size_range.min_w < self.size_range.max_w
        ns = self.size_range.min_h < self.size_range.max_h
        if we and ns:
            return Resizing.ANY
        if we:
            return Resizing.WE
        if ns:
            return Resizing.NS
        return Resizing.NONE

    def _build_cover(self) -> Cover:
        return standard_rect_cover(self.frame, self.resizing())

    def element_rects(self) -> list[Rect]:
        return [e.rect_in(self.frame) for e in self.elements]

    def bounds(self) -> Rect:
        return self.frame

    def _shift(self, dx, dy) -> None:
        self.frame = self.frame.translated(dx, dy)

    def _clamped(self, left: float, top: float, w: float, h: float,
                 anchor_right: bool, anchor_bottom: bool) -> Rect:
        rng = self.size_range
        cw = min(max(w, rng.min_w), rng.max_w)
        ch = min(max(h, rng.min_h), rng.max_h)
        if anchor_right:
            left += w - cw
        if anchor_bottom:
            top += h - ch
        return Rect(left, top, cw, ch)

    def move_node(self, node_id, dx, dy, pt, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        role = _RECT_ROLES[self.resizing()][node_id]
        if role == "area":
            self.move_by(dx, dy)
            return True
        if dx == 0.0 and dy == 0.0:
            return False
        rc = self.frame
        left, top, w, h = rc.left, rc.top, rc.width, rc.height
        anchor_right = anchor_bottom = False
        if role in ("corner-tl", "corner-bl", "edge-l"):
            left, w, anchor_right = left + dx, w - dx, True
        elif role in ("corner-tr", "corner-br", "edge-r"):
            w += dx
        if role in ("corner-tl", "corner-tr", "edge-t"):
            top, h, anchor_bottom = top + dy, h - dy, True
        elif role in ("corner-bl", "corner-br", "edge-b"):
            h += dy
        self.frame = self._clamped(left, top, w, h, anchor_right, anchor_bottom)
        self.define_cover()
        return True


# ---------------------------------------------------------------------------
# elastic group: the frame chases its children

class ElasticGroup(MoveableObject):
    """Frame around individually moveable children, re-fit after every
    child change. Children are registered before the frame, so the frame
    itself is caught only between them."""

    kind = "elastic"
    angle = 0.0

    def __init__(self, children: list[MoveableObject], padding: float = ELASTIC_PADDING,
                 title: str = ""):
        if not children:
            raise EmptyInputError("elastic group of no children")
        super().__init__()
        self.children = list(children)
        self.padding = padding
        self.title = title
        for child in self.children:
            child.parent_id = self.id
        self.frame = frame_around([c.bounds() for c in self.children], padding)

    def adjust(self) -> None:
        self.frame = frame_around([c.bounds() for c in self.children], self.padding)
        self.define_cover()

    def on_child_changed(self, child: MoveableObject) -> None:
        self.adjust()

    def _build_cover(self) -> Cover:
        return Cover((CoverNode(0, rect_polygon(self.frame),
                                MovementFreedom.ALL, CursorHint.SIZE_ALL),))

    def bounds(self) -> Rect:
        return self.frame

    def _shift(self, dx, dy) -> None:
        self.frame = self.frame.translated(dx, dy)

    def move_node(self, node_id, dx, dy, pt, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        for child in self.children:
            child.move_by(dx, dy)
        self.move_by(dx, dy)
        return True

    def into_mover(self, mover: Mover, index: int) -> None:
        mover.insert(index, self)
        for child in reversed(self.children):
            mover.insert(index, child)


# ---------------------------------------------------------------------------
# rubber-band selection frame

class SimpleFrame(MoveableObject):
    """Selection frame: borders drag the catch rigidly, corners reshape the
    selection and re-collect what is fully inside. The interior is
    transparent so the enclosed figures stay individually grabbable."""

    kind = "selframe"
    angle = 0.0

    def __init__(self, rc: Rect, enclosed: list[MoveableObject],
                 candidates: Callable[[], list[MoveableObject]],
                 min_side: float = MIN_SIDE):
        super().__init__()
        self.rc = rc
        self.enclosed = list(enclosed)
        self._candidates = candidates
        self.min_side = min_side

    def _build_cover(self) -> Cover:
        tl, tr, br, bl = self.rc.corners()
        nodes: list[CoverNode] = []
        for corner in (tl, tr, br, bl):
            nodes.append(CoverNode(len(nodes), CircleShape(corner, CORNER_RADIUS),
                                   MovementFreedom.ALL, CursorHint.HAND))
        for a, b in ((tl, tr), (tr, br), (bl, br), (tl, bl)):
            nodes.append(CoverNode(len(nodes), StripShape(a, b, HALF_STRIP),
                                   MovementFreedom.ALL, CursorHint.SIZE_ALL))
        nodes.append(CoverNode(len(nodes), rect_polygon(self.rc),
                               MovementFreedom.TRANSPARENT, CursorHint.DEFAULT))
        return Cover(tuple(nodes))

    def bounds(self) -> Rect:
        return self.rc

    def _shift(self, dx, dy) -> None:
        self.rc = self.rc.translated(dx, dy)

    def recollect(self) -> None:
        self.enclosed = [f for f in self._candidates()
                         if f is not self and self.rc.contains_rect(f.bounds())]

    def move_node(self, node_id, dx, dy, pt, button) -> bool:
        if button is not MouseButton.LEFT:
            return False
        if node_id < 4:  # corners reshape the selection
            if dx == 0.0 and dy == 0.0:
                return False
            rc = self.rc
            left1, right1 = rc.left, rc.right
            top1, bottom1 = rc.top, rc.bottom
            if node_id in (0, 3):
                left1 = min(left1 + dx, right1 - self.min_side)
            else:
                right1 = max(right1 + dx, left1 + self.min_side)
            if node_id in (0, 1):
                top1 = min(top1 + dy, bottom1 - self.min_side)
            else:
                bottom1 = max(bottom1 + dy, top1 + self.min_side)
            self.rc = Rect(left1, top1, right1 - left1, bottom1 - top1)
            self.recollect()
            self.define_cover()
            return True
        if node_id < 8:  # borders move the whole catch
            self.move_by(dx, dy)
            for f in self.enclosed:
                f.move_by(dx, dy)
            return True
        return False


def rubber_band_select(candidates: list[MoveableObject], a: Point2, b: Point2,
                       ) -> tuple[Rect, list[MoveableObject]]:
    """Normalize the swept rect and list the fully contained candidates."""
    rc = Rect(min(a.x, b.x), min(a.y, b.y), abs(b.x - a.x), abs(b.y - a.y))
    return rc, [f for f in candidates if rc.contains_rect(f.bounds())]


# ---------------------------------------------------------------------------
# the scene and the queue rebuild

@dataclass
class Scene:
    """What exists, block by block. The queue is rebuilt from this:
    controls first, then the selection frame, labels, composites (children
    before parents), and plain figures last, newest at the head of their
    block and therefore drawn last."""

    widgets: list[MoveableObject] = field(default_factory=list)
    linked: list[LinkedRectangles] = field(default_factory=list)
    framegroups: list[FrameGroup] = field(default_factory=list)
    selection: SimpleFrame | None = None
    labels: list[MoveableObject] = field(default_factory=list)
    composites: list[MoveableObject] = field(default_factory=list)
    figures: list[MoveableObject] = field(default_factory=list)

    def figure_ids(self) -> set[int]:
        return {f.id for f in self.figures}


def renew_mover(scene: Scene, mover: Mover) -> None:
    """Throw the old queue away and rebuild it from the scene blocks."""
    mover.clear()
    for w in scene.widgets:
        mover.add(w)
    for g in scene.linked:
        mover.add(g)
    for g in scene.framegroups:
        mover.add(g)
    if scene.selection is not None:
        mover.add(scene.selection)
    for lab in scene.labels:
        mover.add(lab)
    for comp in scene.composites:
        comp.into_mover(mover, len(mover))
    for fig in scene.figures:
        mover.add(fig)
