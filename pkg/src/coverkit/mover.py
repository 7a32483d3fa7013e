"""The mover: one ordered queue of objects and a catch/move/release loop.

Queue position is pick precedence; the object nearer the head wins where
covers overlap. The mover trusts covers completely and never looks at the
underlying geometry, which is what lets wildly different classes share one
queue.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .cover import CoverHit, CoverNode, CursorHint, HitKind, MovementFreedom, NodeShape, cover_hit
from .errors import DuplicateObjectError, MoverStateError
from .geometry import Point2, Rect
from .moveable import MouseButton, MoveableObject


class Clipping(enum.Enum):
    VISUAL = "visual"    # pointer clamped into the bounds on both axes
    SAFE = "safe"        # only left/top are enforced; right/bottom exceedable
    UNSAFE = "unsafe"    # pointer forwarded untouched


@dataclass(frozen=True)
class HitReport:
    index: int
    object_id: int
    node_id: int
    shape: NodeShape
    cursor: CursorHint


@dataclass
class _Caught:
    index: int
    obj: MoveableObject
    node: CoverNode
    button: MouseButton


@dataclass(frozen=True)
class CoverGeometryEntry:
    object_id: int
    node_id: int
    shape: NodeShape
    freedom: MovementFreedom
    cursor: CursorHint


class Mover:
    def __init__(self, bounds: Rect | None = None, clipping: Clipping = Clipping.VISUAL):
        self.bounds = bounds
        self.clipping = clipping
        self.queue: list[MoveableObject] = []
        self.caught: _Caught | None = None
        self.was_caught: int | None = None
        self.sensed: HitReport | None = None
        self._prev_point: Point2 | None = None

    # -- queue ----------------------------------------------------------

    def __len__(self) -> int:
        return len(self.queue)

    def __getitem__(self, index: int) -> MoveableObject:
        return self.queue[index]

    def add(self, obj: MoveableObject) -> None:
        if any(o is obj for o in self.queue):
            raise DuplicateObjectError(f"object {obj.id} already in queue")
        self.queue.append(obj)

    def insert(self, index: int, obj: MoveableObject) -> None:
        if any(o is obj for o in self.queue):
            raise DuplicateObjectError(f"object {obj.id} already in queue")
        if not 0 <= index <= len(self.queue):
            raise IndexError(f"insert position {index} outside queue")
        self.queue.insert(index, obj)

    def remove_at(self, index: int) -> MoveableObject:
        if not 0 <= index < len(self.queue):
            raise IndexError(f"remove position {index} outside queue")
        return self.queue.pop(index)

    def clear(self) -> None:
        if self.caught is not None:
            raise MoverStateError("clearing the queue while an object is caught")
        self.queue.clear()
        self.was_caught = None
        self.sensed = None

    def reorder_reverse(self, start: int, count: int) -> None:
        """Reverse queue[start : start + count] in place."""
        if start < 0 or count < 0 or start + count > len(self.queue):
            raise IndexError(f"reverse range {start}+{count} outside queue")
        self.queue[start : start + count] = self.queue[start : start + count][::-1]

    def index_of(self, obj: MoveableObject) -> int:
        for i, o in enumerate(self.queue):
            if o is obj:
                return i
        raise IndexError(f"object {obj.id} not in queue")

    # -- scanning --------------------------------------------------------

    def _scan(self, pt: Point2) -> tuple[int, MoveableObject, CoverHit] | None:
        for i, obj in enumerate(self.queue):
            hit = cover_hit(obj.cover(), pt)
            if hit.kind is HitKind.MISS or hit.kind is HitKind.TRANSPARENT:
                continue
            return i, obj, hit
        return None

    def sense(self, pt: Point2) -> HitReport | None:
        """Hit-test without touching catch state; blocked spots report Default."""
        found = self._scan(pt)
        if found is None:
            self.sensed = None
            return None
        i, obj, hit = found
        node = hit.node
        assert node is not None
        cursor = CursorHint.DEFAULT if hit.kind is HitKind.BLOCKED else node.cursor
        self.sensed = HitReport(i, obj.id, node.id, node.shape, cursor)
        return self.sensed

    # -- pointer state machine -------------------------------------------

    def catch(self, pt: Point2, button: MouseButton) -> bool:
        if self.caught is not None:
            raise MoverStateError("catch while an object is already caught")
        found = self._scan(pt)
        if found is None:
            return False
        i, obj, hit = found
        node = hit.node
        assert node is not None
        if hit.kind is HitKind.BLOCKED:
            return False
        self.caught = _Caught(i, obj, node, button)
        self._prev_point = pt
        if button is MouseButton.LEFT:
            obj.start_resizing(pt, node.id, node.shape)
        else:
            obj.start_rotation(pt)
        return True

    def _clip(self, pt: Point2) -> Point2:
        if self.bounds is None or self.clipping is Clipping.UNSAFE:
            return pt
        x, y = pt.x, pt.y
        if self.clipping is Clipping.VISUAL:
            x = min(max(x, self.bounds.left), self.bounds.left + self.bounds.width - 1)
            y = min(max(y, self.bounds.top), self.bounds.top + self.bounds.height - 1)
        else:  # SAFE: a caught object must stay reachable past left/top
            x = max(x, self.bounds.left)
            y = max(y, self.bounds.top)
        return Point2(x, y)

    def move(self, pt: Point2) -> bool:
        """Forward a pointer move; True when a redraw is warranted."""
        if self.caught is None:
            self.sense(pt)
            return False
        c = self.caught
        clamped = self._clip(pt)
        assert self._prev_point is not None
        dx = clamped.x - self._prev_point.x
        dy = clamped.y - self._prev_point.y
        if c.node.freedom is MovementFreedom.NS:
            dx = 0.0
        elif c.node.freedom is MovementFreedom.WE:
            dy = 0.0
        if c.node.freedom is MovementFreedom.FREEZE:
            return True
        changed = c.obj.move_node(c.node.id, dx, dy, clamped, c.button)
        self._prev_point = clamped
        if changed and c.obj.parent_id is not None:
            for other in self.queue:
                if other.id == c.obj.parent_id:
                    other.on_child_changed(c.obj)
                    break
        return True

    def release(self) -> tuple[bool, int | None]:
        if self.caught is None:
            return False, None
        index = self.caught.index
        obj = self.caught.obj
        self.caught = None
        self._prev_point = None
        self.was_caught = index
        obj.on_release()
        return True, index

    # -- inspection --------------------------------------------------------

    def cover_geometry(self) -> list[CoverGeometryEntry]:
        out: list[CoverGeometryEntry] = []
        for obj in self.queue:
            for node in obj.cover().nodes:
                out.append(
                    CoverGeometryEntry(obj.id, node.id, node.shape, node.freedom, node.cursor)
                )
        return out
