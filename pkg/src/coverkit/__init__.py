"""Moveable, resizable and rotatable screen objects.

Objects describe their sensitive areas as covers (ordered node sets); a
mover supervises one queue of such objects and turns pointer input into
catch/move/release calls. Nothing here draws; geometry in, geometry out.
"""

from .cover import (
    CircleShape,
    Cover,
    CoverNode,
    CursorHint,
    HitKind,
    MovementFreedom,
    NodeShape,
    PolygonShape,
    Resizing,
    StripShape,
    cover_hit,
    node_contains,
    standard_rect_cover,
)
from .geometry import (
    Point2,
    Rect,
    distance,
    frame_around,
    is_convex,
    limited_radian,
    line_angle,
    point_segment_distance,
    point_to_point,
)
from .moveable import MouseButton, MoveableObject, next_unique_id
from .mover import Clipping, HitReport, Mover

__all__ = [
    "CircleShape", "Cover", "CoverNode", "CursorHint", "HitKind",
    "MovementFreedom", "NodeShape", "PolygonShape", "Resizing", "StripShape",
    "cover_hit", "node_contains", "standard_rect_cover",
    "Point2", "Rect", "distance", "frame_around", "is_convex",
    "limited_radian", "line_angle", "point_segment_distance", "point_to_point",
    "MouseButton", "MoveableObject", "next_unique_id",
    "Clipping", "HitReport", "Mover",
]
