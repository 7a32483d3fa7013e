"""Scripted scenes: a line-oriented command grammar, a deterministic scene
dump, and the click bookkeeping a real pointer would produce.

Dump lines are ``NAME KIND Z NODECOUNT ANGLE X Y W H`` with reals at
exactly three decimals; figures whose geometry is not a plain rect append
their defining values after a ``|`` separator. Anything a script did can
also be done by calling the engine directly; the runner keeps no state of
its own besides the pointer.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .cover import Resizing
from .errors import EngineError, ScenarioError
from .figures import (
    AreaWithHoles,
    ChatoyantPolygonRsRt,
    CircleInsidePolyRsRt,
    CircleRsRt,
    HoleCircle,
    HolePoly,
    PerforatedPolygonRsRt,
    PrimitiveCircle,
    PrimitiveRect,
    PrimitiveStrip,
    RectangleStandard,
    RegularPolygonRsRt,
    RingRsRt,
    RotatableLabel,
    StripRsRt,
)
from .geometry import Point2, Rect, distance
from .groups import (
    ElasticGroup,
    FrameGroup,
    LinkedRectangles,
    RectRange,
    RectangleWithComments,
    Scene,
    SimpleFrame,
    renew_mover,
    rubber_band_select,
)
from .moveable import MouseButton, MoveableObject
from .mover import Clipping, Mover
from .widgets import WidgetProxy

CLICK_THRESHOLD = 3.0
SELECTION_NAME = "_selection_"

_RESIZING_WORDS = {"none": Resizing.NONE, "ns": Resizing.NS, "we": Resizing.WE, "any": Resizing.ANY}
_CLIP_WORDS = {"visual": Clipping.VISUAL, "safe": Clipping.SAFE, "unsafe": Clipping.UNSAFE}
_BUTTON_WORDS = {"left": MouseButton.LEFT, "right": MouseButton.RIGHT}


@dataclass(frozen=True)
class ClickReport:
    name: str
    button: MouseButton
    press: Point2
    release: Point2
    kind: str  # "click" | "drag"


@dataclass
class ScenarioResult:
    dumps: list[str] = field(default_factory=list)
    clicks: list[ClickReport] = field(default_factory=list)


def fmt(value: float) -> str:
    out = f"{value:.3f}"
    return "0.000" if out == "-0.000" else out


def parse_scenario(text: str) -> list[tuple[int, list[str]]]:
    """Commands as (1-based line number, tokens); comments and blanks skipped."""
    commands = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        commands.append((line_no, line.split()))
    return commands


class ScenarioRunner:
    """Owns one scene and one mover and feeds parsed commands to them."""

    def __init__(self):
        self.scene = Scene()
        self.mover = Mover(bounds=None, clipping=Clipping.VISUAL)
        self.names: dict[str, MoveableObject] = {}
        self.clicks: list[ClickReport] = []
        self.last_cursor = "Default"
        self._press_pt: Point2 | None = None
        self._press_button: MouseButton | None = None
        self._last_pt: Point2 | None = None
        self._band_armed = False

    # -- helpers ----------------------------------------------------------

    def _fail(self, line: int, message: str) -> ScenarioError:
        return ScenarioError(line, message)

    def _floats(self, line: int, tokens: list[str]) -> list[float]:
        out = []
        for tok in tokens:
            try:
                out.append(float(tok))
            except ValueError:
                raise self._fail(line, f"expected a number, got {tok!r}")
        return out

    def _int(self, line: int, token: str) -> int:
        try:
            return int(token)
        except ValueError:
            raise self._fail(line, f"expected an integer, got {token!r}")

    def _new_name(self, line: int, name: str) -> str:
        if name.startswith("_"):
            raise self._fail(line, f"names starting with _ are reserved: {name!r}")
        if name in self.names:
            raise self._fail(line, f"duplicate id {name!r}")
        return name

    def _lookup(self, line: int, name: str) -> MoveableObject:
        try:
            return self.names[name]
        except KeyError:
            raise self._fail(line, f"unknown id {name!r}")

    def _register(self, name: str, obj: MoveableObject, block: list) -> None:
        obj.name = name
        self.names[name] = obj
        block.append(obj)
        self._renew()

    def _renew(self) -> None:
        renew_mover(self.scene, self.mover)

    def _consume_children(self, line: int, tokens: list[str],
                          widgets_only: bool) -> list[MoveableObject]:
        children = []
        for name in tokens:
            obj = self._lookup(line, name)
            if obj in children:
                raise self._fail(line, f"child {name!r} listed twice")
            pools = [self.scene.widgets] if widgets_only else [
                self.scene.widgets, self.scene.figures, self.scene.labels]
            removed = False
            for pool in pools:
                if obj in pool:
                    pool.remove(obj)
                    removed = True
                    break
            if not removed:
                what = "a widget" if widgets_only else "a free widget, figure or label"
                raise self._fail(line, f"{name!r} is not {what}")
            children.append(obj)
        return children

    # -- commands -----------------------------------------------------------

    def execute(self, line: int, tokens: list[str]) -> None:
        try:
            self._dispatch(line, tokens)
        except ScenarioError:
            raise
        except (EngineError, ValueError, IndexError) as exc:
            raise self._fail(line, str(exc))

    def _dispatch(self, line: int, tokens: list[str]) -> None:
        cmd = tokens[0]
        if cmd == "bounds":
            if len(tokens) != 3:
                raise self._fail(line, "usage: bounds W H")
            w, h = self._floats(line, tokens[1:])
            self.mover.bounds = Rect(0.0, 0.0, w, h)
        elif cmd == "clip":
            if len(tokens) != 2 or tokens[1] not in _CLIP_WORDS:
                raise self._fail(line, "usage: clip visual|safe|unsafe")
            self.mover.clipping = _CLIP_WORDS[tokens[1]]
        elif cmd == "add":
            if len(tokens) < 2:
                raise self._fail(line, "add what?")
            self._add(line, tokens[1], tokens[2:])
        elif cmd == "group":
            if len(tokens) < 2:
                raise self._fail(line, "group what?")
            self._group(line, tokens[1], tokens[2:])
        elif cmd == "press":
            if len(tokens) != 4 or tokens[3] not in _BUTTON_WORDS:
                raise self._fail(line, "usage: press X Y left|right")
            x, y = self._floats(line, tokens[1:3])
            self._press(line, Point2(x, y), _BUTTON_WORDS[tokens[3]])
        elif cmd == "drag":
            if len(tokens) != 3:
                raise self._fail(line, "usage: drag X Y")
            x, y = self._floats(line, tokens[1:])
            self._last_pt = Point2(x, y)
            self.mover.move(self._last_pt)
        elif cmd == "release":
            if len(tokens) != 1:
                raise self._fail(line, "usage: release")
            self._release()
        elif cmd == "sense":
            if len(tokens) != 3:
                raise self._fail(line, "usage: sense X Y")
            x, y = self._floats(line, tokens[1:])
            report = self.mover.sense(Point2(x, y))
            self.last_cursor = report.cursor.value if report else "Default"
        elif cmd == "select":
            if len(tokens) != 5:
                raise self._fail(line, "usage: select X0 Y0 X1 Y1")
            x0, y0, x1, y1 = self._floats(line, tokens[1:])
            self._apply_selection(Point2(x0, y0), Point2(x1, y1))
        elif cmd == "popup":
            if len(tokens) != 2:
                raise self._fail(line, "usage: popup ID")
            self._popup(line, self._lookup(line, tokens[1]))
        elif cmd == "renew":
            if len(tokens) != 1:
                raise self._fail(line, "usage: renew")
            self._renew()
        elif cmd == "dump":
            raise self._fail(line, "dump is handled by the caller")
        else:
            raise self._fail(line, f"unknown command {cmd!r}")

    def _add(self, line: int, what: str, args: list[str]) -> None:
        if what == "rect":
            if len(args) != 6 or args[5] not in _RESIZING_WORDS:
                raise self._fail(line, "usage: add rect ID X Y W H none|ns|we|any")
            name = self._new_name(line, args[0])
            x, y, w, h = self._floats(line, args[1:5])
            fig = RectangleStandard(Rect(x, y, w, h), _RESIZING_WORDS[args[5]])
            self._prepend_figure(name, fig)
        elif what == "rectc":
            if len(args) != 5:
                raise self._fail(line, "usage: add rectc ID X Y W H")
            name = self._new_name(line, args[0])
            x, y, w, h = self._floats(line, args[1:5])
            rect = RectangleWithComments(Rect(x, y, w, h))
            self._register(name, rect, self.scene.composites)
        elif what == "comment":
            if len(args) < 5:
                raise self._fail(line, "usage: add comment ID PARENTID CX CY TEXT")
            name = self._new_name(line, args[0])
            parent = self._lookup(line, args[1])
            if not isinstance(parent, RectangleWithComments):
                raise self._fail(line, f"{args[1]!r} is not a commented rectangle")
            cx, cy = self._floats(line, args[2:4])
            comment = parent.add_comment(Point2(cx, cy), " ".join(args[4:]))
            comment.name = name
            self.names[name] = comment
            self._renew()
        elif what == "polygon":
            if len(args) != 5:
                raise self._fail(line, "usage: add polygon ID CX CY R N")
            name = self._new_name(line, args[0])
            cx, cy, r = self._floats(line, args[1:4])
            n = self._int(line, args[4])
            fig = RegularPolygonRsRt(Point2(cx, cy), r, n)
            self._prepend_figure(name, fig)
        elif what == "perforated":
            if len(args) != 6:
                raise self._fail(line, "usage: add perforated ID CX CY RIN ROUT N")
            name = self._new_name(line, args[0])
            cx, cy, rin, rout = self._floats(line, args[1:5])
            n = self._int(line, args[5])
            fig = PerforatedPolygonRsRt(Point2(cx, cy), rin, rout, n)
            self._prepend_figure(name, fig)
        elif what == "chatoyant":
            if len(args) != 5:
                raise self._fail(line, "usage: add chatoyant ID CX CY R N")
            name = self._new_name(line, args[0])
            cx, cy, r = self._floats(line, args[1:4])
            n = self._int(line, args[4])
            seed = RegularPolygonRsRt(Point2(cx, cy), r, n)
            fig = ChatoyantPolygonRsRt(Point2(cx, cy), list(seed.apexes()))
            self._prepend_figure(name, fig)
        elif what == "circle":
            if len(args) != 4:
                raise self._fail(line, "usage: add circle ID CX CY R")
            name = self._new_name(line, args[0])
            cx, cy, r = self._floats(line, args[1:])
            self._prepend_figure(name, CircleRsRt(Point2(cx, cy), r))
        elif what == "ring":
            if len(args) != 5:
                raise self._fail(line, "usage: add ring ID CX CY RIN ROUT")
            name = self._new_name(line, args[0])
            cx, cy, rin, rout = self._floats(line, args[1:])
            self._prepend_figure(name, RingRsRt(Point2(cx, cy), rin, rout))
        elif what == "strip":
            if len(args) != 6:
                raise self._fail(line, "usage: add strip ID X0 Y0 X1 Y1 R")
            name = self._new_name(line, args[0])
            x0, y0, x1, y1, r = self._floats(line, args[1:])
            self._prepend_figure(name, StripRsRt(Point2(x0, y0), Point2(x1, y1), r))
        elif what == "circleinpoly":
            if len(args) != 6:
                raise self._fail(line, "usage: add circleinpoly ID CX CY R N HOLER")
            name = self._new_name(line, args[0])
            cx, cy, r = self._floats(line, args[1:4])
            n = self._int(line, args[4])
            hole_r = self._floats(line, args[5:])[0]
            self._prepend_figure(name, CircleInsidePolyRsRt(Point2(cx, cy), r, n, hole_r))
        elif what == "holes":
            if len(args) < 5:
                raise self._fail(line, "usage: add holes ID X Y W H [hole ...]")
            name = self._new_name(line, args[0])
            x, y, w, h = self._floats(line, args[1:5])
            holes = self._parse_holes(line, args[5:])
            self._prepend_figure(name, AreaWithHoles(Rect(x, y, w, h), holes))
        elif what == "prim":
            self._add_prim(line, args)
        elif what == "widget":
            if len(args) != 10 or args[9] not in ("movable", "fixed"):
                raise self._fail(
                    line, "usage: add widget ID X Y W H MINW MINH MAXW MAXH movable|fixed")
            name = self._new_name(line, args[0])
            x, y, w, h, min_w, min_h, max_w, max_h = self._floats(line, args[1:9])
            proxy = WidgetProxy(Rect(x, y, w, h), (min_w, min_h), (max_w, max_h),
                                movable=args[9] == "movable", label=name)
            self._register(name, proxy, self.scene.widgets)
        elif what == "label":
            if len(args) < 4:
                raise self._fail(line, "usage: add label ID X Y TEXT")
            name = self._new_name(line, args[0])
            x, y = self._floats(line, args[1:3])
            label = RotatableLabel(Point2(x, y), " ".join(args[3:]))
            self._register(name, label, self.scene.labels)
        else:
            raise self._fail(line, f"unknown figure kind {what!r}")

    def _add_prim(self, line: int, args: list[str]) -> None:
        usage = "usage: add prim ID circle CX CY R | rect X Y W H | strip X0 Y0 X1 Y1 R [leftonly]"
        if len(args) < 2:
            raise self._fail(line, usage)
        name = self._new_name(line, args[0])
        shape = args[1]
        rest = args[2:]
        gate = None
        if rest and rest[-1] == "leftonly":
            gate = MouseButton.LEFT
            rest = rest[:-1]
        values = self._floats(line, rest)
        if shape == "circle" and len(values) == 3:
            fig = PrimitiveCircle(Point2(values[0], values[1]), values[2], gate)
        elif shape == "rect" and len(values) == 4:
            fig = PrimitiveRect(Rect(*values), gate)
        elif shape == "strip" and len(values) == 5:
            fig = PrimitiveStrip(Point2(values[0], values[1]),
                                 Point2(values[2], values[3]), values[4], gate)
        else:
            raise self._fail(line, usage)
        self._prepend_figure(name, fig)

    def _parse_holes(self, line: int, tokens: list[str]):
        holes = []
        i = 0
        while i < len(tokens):
            if tokens[i] != "hole":
                raise self._fail(line, f"expected 'hole', got {tokens[i]!r}")
            if i + 1 >= len(tokens):
                raise self._fail(line, "hole needs circle|poly")
            kind = tokens[i + 1]
            i += 2
            rest = []
            while i < len(tokens) and tokens[i] != "hole":
                rest.append(tokens[i])
                i += 1
            values = self._floats(line, rest)
            if kind == "circle" and len(values) == 3:
                holes.append(HoleCircle(Point2(values[0], values[1]), values[2]))
            elif kind == "poly" and len(values) >= 6 and len(values) % 2 == 0:
                apexes = tuple(Point2(values[j], values[j + 1]) for j in range(0, len(values), 2))
                holes.append(HolePoly(apexes))
            else:
                raise self._fail(line, f"bad hole spec: {kind} {rest}")
        return holes

    def _prepend_figure(self, name: str, fig: MoveableObject) -> None:
        fig.name = name
        self.names[name] = fig
        self.scene.figures.insert(0, fig)
        self._renew()

    def _group(self, line: int, what: str, args: list[str]) -> None:
        if what == "elastic":
            if len(args) < 2:
                raise self._fail(line, "usage: group elastic ID child1 child2 ...")
            name = self._new_name(line, args[0])
            children = self._consume_children(line, args[1:], widgets_only=False)
            group = ElasticGroup(children, title=name)
            self._register(name, group, self.scene.composites)
        elif what == "frame":
            if len(args) < 10:
                raise self._fail(
                    line, "usage: group frame ID X Y W H MINW MAXW MINH MAXH child...")
            name = self._new_name(line, args[0])
            x, y, w, h, min_w, max_w, min_h, max_h = self._floats(line, args[1:9])
            children = self._consume_children(line, args[9:], widgets_only=True)
            frame = Rect(x, y, w, h)
            group = FrameGroup.around_rects(
                frame, RectRange(min_w, max_w, min_h, max_h),
                [c.bounds() for c in children],
                [getattr(c, "label", "") or c.name for c in children], title=name)
            for child in children:
                del self.names[child.name]
            self._register(name, group, self.scene.framegroups)
        elif what == "linked":
            if len(args) < 2:
                raise self._fail(line, "usage: group linked ID child1 child2 ...")
            name = self._new_name(line, args[0])
            children = self._consume_children(line, args[1:], widgets_only=True)
            group = LinkedRectangles([c.bounds() for c in children],
                                     [getattr(c, "label", "") or c.name for c in children])
            for child in children:
                del self.names[child.name]
            self._register(name, group, self.scene.linked)
        else:
            raise self._fail(line, f"unknown group kind {what!r}")

    # -- pointer -----------------------------------------------------------

    def _press(self, line: int, pt: Point2, button: MouseButton) -> None:
        caught = self.mover.catch(pt, button)
        self._press_pt = pt
        self._last_pt = pt
        self._press_button = button
        self._band_armed = not caught and button is MouseButton.LEFT

    def _release(self) -> None:
        press = self._press_pt
        last = self._last_pt if self._last_pt is not None else press
        released, index = self.mover.release()
        if released and index is not None and press is not None:
            obj = self.mover[index]
            moved = distance(press, last)
            kind = "click" if moved <= CLICK_THRESHOLD else "drag"
            assert self._press_button is not None
            self.clicks.append(ClickReport(obj.name, self._press_button, press, last, kind))
            if kind == "click" and self._press_button is MouseButton.LEFT:
                self._bring_to_top(index)
            if obj is self.scene.selection and len(obj.enclosed) < 2:
                self.scene.selection = None
                self._renew()
        elif self._band_armed and press is not None and last is not None:
            self._apply_selection(press, last)
        self._press_pt = None
        self._press_button = None
        self._band_armed = False

    def _bring_to_top(self, index: int) -> None:
        figure_ids = self.scene.figure_ids()
        if self.mover[index].id not in figure_ids:
            return
        j = index
        while j > 0 and self.mover[j - 1].id in figure_ids:
            self.mover.reorder_reverse(j - 1, 2)
            j -= 1
        self._sync_figure_order()

    def _sync_figure_order(self) -> None:
        figure_ids = self.scene.figure_ids()
        self.scene.figures = [obj for obj in self.mover.queue if obj.id in figure_ids]

    def _popup(self, line: int, obj: MoveableObject) -> None:
        if obj.id not in self.scene.figure_ids():
            raise self._fail(line, f"{obj.name!r} is not a plain figure")
        self._bring_to_top(self.mover.index_of(obj))

    def _apply_selection(self, a: Point2, b: Point2) -> None:
        rc, enclosed = rubber_band_select(list(self.scene.figures), a, b)
        if len(enclosed) >= 2:
            frame = SimpleFrame(rc, enclosed, lambda: list(self.scene.figures))
            frame.name = SELECTION_NAME
            self.scene.selection = frame
        else:
            self.scene.selection = None
        self._renew()

    # -- dump ----------------------------------------------------------------

    def dump(self) -> str:
        lines = []
        for z, obj in enumerate(self.mover.queue):
            rc = obj.bounds()
            head = (f"{obj.name or '?'} {obj.kind} {z} {len(obj.cover())} "
                    f"{fmt(getattr(obj, 'angle', 0.0))} {fmt(rc.left)} {fmt(rc.top)} "
                    f"{fmt(rc.width)} {fmt(rc.height)}")
            extra = _defining_values(obj)
            lines.append(head if extra is None else f"{head} | {extra}")
        return "".join(line + "\n" for line in lines)


def _defining_values(obj: MoveableObject) -> str | None:
    if isinstance(obj, PrimitiveCircle):
        return f"{fmt(obj.center.x)} {fmt(obj.center.y)} {fmt(obj.radius)}"
    if isinstance(obj, CircleRsRt):
        return f"{fmt(obj.center.x)} {fmt(obj.center.y)} {fmt(obj.radius)}"
    if isinstance(obj, PrimitiveStrip):
        return (f"{fmt(obj.a.x)} {fmt(obj.a.y)} {fmt(obj.b.x)} {fmt(obj.b.y)} "
                f"{fmt(obj.radius)}")
    if isinstance(obj, StripRsRt):
        return (f"{fmt(obj.c0.x)} {fmt(obj.c0.y)} {fmt(obj.c1.x)} {fmt(obj.c1.y)} "
                f"{fmt(obj.radius)}")
    if isinstance(obj, PerforatedPolygonRsRt):
        return (f"{fmt(obj.center.x)} {fmt(obj.center.y)} {fmt(obj.r_inner)} "
                f"{fmt(obj.r_outer)} {obj.n_apexes}")
    if isinstance(obj, RegularPolygonRsRt):
        return (f"{fmt(obj.center.x)} {fmt(obj.center.y)} {fmt(obj.radius)} "
                f"{obj.n_apexes}")
    if isinstance(obj, ChatoyantPolygonRsRt):
        pts = " ".join(f"{fmt(p.x)} {fmt(p.y)}" for p in obj.apex_points)
        return f"{fmt(obj.center.x)} {fmt(obj.center.y)} {pts}"
    if isinstance(obj, RingRsRt):
        return (f"{fmt(obj.center.x)} {fmt(obj.center.y)} {fmt(obj.r_inner)} "
                f"{fmt(obj.r_outer)}")
    if isinstance(obj, CircleInsidePolyRsRt):
        return (f"{fmt(obj.center.x)} {fmt(obj.center.y)} {fmt(obj.radius)} {obj.n_apexes} "
                f"{fmt(obj.hole_center.x)} {fmt(obj.hole_center.y)} {fmt(obj.hole_radius)}")
    if isinstance(obj, AreaWithHoles):
        parts = [str(len(obj.holes))]
        for hole in obj.holes:
            if isinstance(hole, HoleCircle):
                parts.append(f"C {fmt(hole.center.x)} {fmt(hole.center.y)} {fmt(hole.radius)}")
            else:
                pts = " ".join(f"{fmt(p.x)} {fmt(p.y)}" for p in hole.apexes)
                parts.append(f"P {len(hole.apexes)} {pts}")
        return " ".join(parts)
    if isinstance(obj, (RotatableLabel,)):
        return f"{fmt(obj.center.x)} {fmt(obj.center.y)}"
    from .groups import Comment, ElasticGroup, FrameGroup, LinkedRectangles, SimpleFrame
    if isinstance(obj, Comment):
        return f"{fmt(obj.center.x)} {fmt(obj.center.y)}"
    if isinstance(obj, LinkedRectangles):
        parts = [str(len(obj.members))]
        for rc in obj.members:
            parts.append(f"{fmt(rc.left)} {fmt(rc.top)} {fmt(rc.width)} {fmt(rc.height)}")
        return " ".join(parts)
    if isinstance(obj, FrameGroup):
        parts = [str(len(obj.elements))]
        for rc in obj.element_rects():
            parts.append(f"{fmt(rc.left)} {fmt(rc.top)} {fmt(rc.width)} {fmt(rc.height)}")
        return " ".join(parts)
    if isinstance(obj, ElasticGroup):
        return " ".join(child.name or "?" for child in obj.children) or None
    if isinstance(obj, SimpleFrame):
        return " ".join(f.name or "?" for f in obj.enclosed) or None
    return None


def run_scenario(text: str) -> ScenarioResult:
    """Run a whole script; dumps are collected in order of their commands."""
    runner = ScenarioRunner()
    result = ScenarioResult()
    for line_no, tokens in parse_scenario(text):
        if tokens == ["dump"]:
            result.dumps.append(runner.dump())
        else:
            runner.execute(line_no, tokens)
    result.clicks = runner.clicks
    return result
