"""The contract every moveable object fulfills.

An object owns its cover and decides what each caught node does. The mover
never inspects object geometry; it only forwards node movements, so any
class implementing this contract can be thrown into the same queue.
"""
from __future__ import annotations

import enum
import itertools
from abc import ABC, abstractmethod

from .cover import Cover, NodeShape
from .geometry import Point2, Rect

_id_counter = itertools.count(1)


def next_unique_id() -> int:
    """Process-wide unique object id; never reused, strictly increasing."""
    return next(_id_counter)


class MouseButton(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


class MoveableObject(ABC):
    """Base for everything a mover can supervise.

    Subclasses implement ``_build_cover`` plus the geometry reactions.
    The stored cover is rebuilt only by ``define_cover``; plain translation
    shifts the existing nodes so node count and ids stay put.
    """

    def __init__(self, parent_id: int | None = None):
        self.id = next_unique_id()
        self.parent_id = parent_id
        self.name = ""
        self._cover: Cover | None = None

    # -- cover ---------------------------------------------------------

    def cover(self) -> Cover:
        if self._cover is None:
            self._cover = self._build_cover()
        return self._cover

    def define_cover(self) -> None:
        """Rebuild the cover from current geometry."""
        self._cover = self._build_cover()

    @abstractmethod
    def _build_cover(self) -> Cover:
        ...

    # -- geometry ------------------------------------------------------

    @abstractmethod
    def bounds(self) -> Rect:
        """Axis-aligned bounding rect of the visible geometry."""

    def move_by(self, dx: float, dy: float) -> None:
        """Translate the whole object, cover included."""
        self._shift(dx, dy)
        if self._cover is not None:
            self._cover = self._cover.translated(dx, dy)

    @abstractmethod
    def _shift(self, dx: float, dy: float) -> None:
        """Translate the defining geometry only."""

    @abstractmethod
    def move_node(
        self, node_id: int, dx: float, dy: float, pt: Point2, button: MouseButton
    ) -> bool:
        """React to a caught node being dragged; True if geometry changed."""

    # -- mover hooks ----------------------------------------------------

    def start_resizing(self, pt: Point2, node_id: int, shape: NodeShape) -> None:
        """Called once when caught with the left button."""

    def start_rotation(self, pt: Point2) -> None:
        """Called once when caught with the right button."""

    def on_release(self) -> None:
        """Called when the mover lets go; N-node figures rebuild here."""

    def on_child_changed(self, child: "MoveableObject") -> None:
        """Called after a queue object carrying this object's id as parent moved."""
