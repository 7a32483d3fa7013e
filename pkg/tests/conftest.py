import math

import pytest

from coverkit.cover import (
    CircleShape,
    Cover,
    CoverNode,
    CursorHint,
    MovementFreedom,
    PolygonShape,
)
from coverkit.geometry import Point2, Rect
from coverkit.moveable import MoveableObject


def rect_poly(rc: Rect) -> PolygonShape:
    return PolygonShape(rc.corners())


class Probe(MoveableObject):
    """Records every engine callback; cover is whatever the test wants."""

    kind = "probe"
    angle = 0.0

    def __init__(self, nodes, rc=Rect(0, 0, 100, 100)):
        super().__init__()
        self.rc = rc
        self._nodes = nodes
        self.moves = []          # (node_id, dx, dy, pt, button)
        self.shifts = []         # (dx, dy)
        self.resize_starts = []  # (pt, node_id, shape)
        self.rotation_starts = []
        self.releases = 0
        self.child_changes = []

    def _build_cover(self) -> Cover:
        return Cover(tuple(self._nodes))

    def bounds(self) -> Rect:
        return self.rc

    def _shift(self, dx, dy):
        self.rc = self.rc.translated(dx, dy)
        self.shifts.append((dx, dy))

    def move_node(self, node_id, dx, dy, pt, button) -> bool:
        self.moves.append((node_id, dx, dy, pt, button))
        return True

    def start_resizing(self, pt, node_id, shape):
        self.resize_starts.append((pt, node_id, shape))

    def start_rotation(self, pt):
        self.rotation_starts.append(pt)

    def on_release(self):
        self.releases += 1

    def on_child_changed(self, child):
        self.child_changes.append(child)


def probe_rect(rc: Rect, freedom=MovementFreedom.ALL) -> Probe:
    node = CoverNode(0, rect_poly(rc), freedom, CursorHint.SIZE_ALL)
    return Probe([node], rc)


def probe_circle(center: Point2, radius: float, freedom=MovementFreedom.ALL) -> Probe:
    node = CoverNode(0, CircleShape(center, radius), freedom, CursorHint.SIZE_ALL)
    rc = Rect(center.x - radius, center.y - radius, 2 * radius, 2 * radius)
    return Probe([node], rc)


@pytest.fixture
def approx():
    def check(a, b, tol=1e-9):
        assert a == pytest.approx(b, abs=tol)
    return check


def regular_apexes(cx, cy, r, n, start=0.0):
    return [Point2(cx + r * math.cos(start + 2 * math.pi * i / n),
                   cy + r * math.sin(start + 2 * math.pi * i / n)) for i in range(n)]
