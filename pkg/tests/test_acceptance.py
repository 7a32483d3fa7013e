"""Behavior gates for the whole engine, one test per criterion.

Run with ``pytest -v tests/test_acceptance.py`` to get one pass/fail line
per criterion; each test also prints an ``ACCEPT PASS`` line so the gate
reads cleanly under ``-s`` or in captured output.
"""
import math
import random
import time
from pathlib import Path

import pytest

from coverkit.cover import MovementFreedom, Resizing, node_contains, standard_rect_cover
from coverkit.figures import (
    AreaWithHoles,
    HoleCircle,
    PrimitiveCircle,
    PrimitiveRect,
    RegularPolygonRsRt,
    RingRsRt,
    StripRsRt,
    ring_sector_count,
)
from coverkit.geometry import Point2, Rect, distance, limited_radian, line_angle, point_to_point
from coverkit.groups import RectangleWithComments
from coverkit.harness import fmt, run_scenario
from coverkit.moveable import MouseButton
from coverkit.mover import Clipping, Mover
from coverkit.widgets import WidgetProxy, derive_resizing

SCENARIO_DIR = Path(__file__).resolve().parent.parent / "scenarios"

L, R = MouseButton.LEFT, MouseButton.RIGHT


def ok(label):
    print(f"ACCEPT PASS {label}")


def pt(x, y):
    return Point2(x, y)


def centroid(apexes):
    return Point2(sum(p.x for p in apexes) / len(apexes),
                  sum(p.y for p in apexes) / len(apexes))


def drag(mover, fig, press, steps, button=L):
    assert mover.catch(press, button), f"nothing caught at {press}"
    assert mover.caught.obj is fig
    for step in steps:
        mover.move(step)
    mover.release()


def test_ac01_standard_cover_node_counts():
    rc = Rect(100, 100, 200, 120)
    counts = {kind: len(standard_rect_cover(rc, kind))
              for kind in (Resizing.NONE, Resizing.NS, Resizing.WE, Resizing.ANY)}
    assert counts == {Resizing.NONE: 1, Resizing.NS: 3,
                      Resizing.WE: 3, Resizing.ANY: 9}
    ok("AC01 standard rectangle cover node counts {1,3,3,9}")


def test_ac02_hole_cover_counts():
    rng = random.Random(20210)
    for n_holes in range(9):
        # jittered grid keeps every hole inside the area and apart
        holes = []
        for i in range(n_holes):
            cx = 160 + 110 * (i % 3) + rng.uniform(-15, 15)
            cy = 160 + 110 * (i // 3) + rng.uniform(-15, 15)
            holes.append(HoleCircle(pt(cx, cy), rng.uniform(8, 25)))
        area = AreaWithHoles(Rect(100, 100, 400, 400), holes)
        assert len(area.cover()) == n_holes + 1, f"{n_holes} holes"
    ok("AC02 area-with-holes cover has holes+1 nodes for 0..8 holes")


def test_ac03_transparent_fall_through():
    moved = run_scenario("""
        add prim lower rect 280 280 60 40
        add holes upper 200 200 250 200 hole circle 320 300 30
        press 320 300 left
        drag 340 320
        release
        dump
    """).dumps[0]
    rebuilt = run_scenario("""
        add prim lower rect 300 300 60 40
        add holes upper 200 200 250 200 hole circle 320 300 30
        dump
    """).dumps[0]
    assert moved == rebuilt
    ok("AC03 press in a hole moves the area beneath, byte-equal dump")


def test_ac04_queue_precedence_against_scan_oracle():
    def oracle(queue, point):
        for obj in queue:
            first = None
            for node in obj.cover().nodes:
                if node_contains(node.shape, point):
                    first = node
                    break
            if first is None:
                continue
            if first.freedom is MovementFreedom.TRANSPARENT:
                continue
            if first.freedom is MovementFreedom.NONE:
                return None
            return obj
        return None

    rng = random.Random(7001)
    start = time.monotonic()
    for trial in range(100):
        a = Rect(rng.uniform(0, 300), rng.uniform(0, 300),
                 rng.uniform(60, 200), rng.uniform(60, 200))
        # second rect shifted by less than the first one's size: overlap is
        # guaranteed and never empty
        b = Rect(a.left + rng.uniform(-a.width + 20, a.width - 20),
                 a.top + rng.uniform(-a.height + 20, a.height - 20),
                 rng.uniform(60, 200), rng.uniform(60, 200))
        objs = [PrimitiveRect(a), PrimitiveRect(b)]
        if rng.random() < 0.5:
            objs.reverse()
        if rng.random() < 0.4:
            objs.insert(rng.randrange(3), PrimitiveCircle(
                pt(rng.uniform(0, 500), rng.uniform(0, 500)), rng.uniform(30, 90)))
        mover = Mover()
        for obj in objs:
            mover.add(obj)
        lo_x, hi_x = max(a.left, b.left), min(a.left + a.width, b.left + b.width)
        lo_y, hi_y = max(a.top, b.top), min(a.top + a.height, b.top + b.height)
        point = pt(rng.uniform(lo_x, hi_x), rng.uniform(lo_y, hi_y))
        want = oracle(mover.queue, point)
        got = mover.catch(point, L)
        assert got == (want is not None), f"trial {trial} at {point}"
        if got:
            assert mover.caught.obj is want, f"trial {trial} caught wrong object"
            mover.release()
    assert time.monotonic() - start < 5.0
    ok("AC04 catch matches the brute-force queue scan on 100 random scenes")


def test_ac05_rotation_invariants():
    TWO_PI = 2 * math.pi

    def residue(value):
        r = value % TWO_PI
        return min(r, TWO_PI - r)

    def run_rotation(fig, center, press, defining):
        rng_steps = [point_to_point(center, rng.uniform(-math.pi, math.pi),
                                    rng.uniform(20, 400)) for _ in range(20)]
        base = defining(fig)
        base_dist = [[distance(p, q) for q in base] for p in base]
        mover = Mover()
        mover.add(fig)
        assert mover.catch(press, R)
        comp = limited_radian(line_angle(center, press) - fig.angle)
        for step in rng_steps:
            mover.move(step)
            pts = defining(fig)
            for i, p in enumerate(pts):
                for j, q in enumerate(pts):
                    assert abs(distance(p, q) - base_dist[i][j]) < 1e-6
            assert residue(line_angle(center, step) - fig.angle - comp) < 1e-9
        mover.release()

    rng = random.Random(555)
    for _ in range(25):
        center = pt(rng.uniform(200, 800), rng.uniform(200, 800))
        fig = RegularPolygonRsRt(center, rng.uniform(60, 150),
                                 rng.randrange(3, 9), rng.uniform(-3, 3))
        press = point_to_point(center, rng.uniform(-math.pi, math.pi),
                               rng.uniform(15, fig.radius * math.cos(math.pi / fig.n_apexes) * 0.8))
        run_rotation(fig, fig.center, press,
                     lambda f: list(f.apexes()) + [f.center])
    for _ in range(25):
        c0 = pt(rng.uniform(200, 800), rng.uniform(200, 800))
        angle = rng.uniform(-math.pi, math.pi)
        length = rng.uniform(80, 300)
        c1 = point_to_point(c0, angle, length)
        fig = StripRsRt(c0, c1, rng.uniform(12, 40))
        mid = pt((c0.x + c1.x) / 2, (c0.y + c1.y) / 2)
        # grab the body just off the rotation center so the ray is defined
        press = point_to_point(mid, angle, length * 0.2)
        run_rotation(fig, mid, press, lambda f: [f.c0, f.c1])
    ok("AC05 rotation keeps defining distances (1e-6) and the angle identity (1e-9)")


def test_ac06_node_count_deferred_to_release():
    fig = RingRsRt(pt(300, 300), 50, 90)
    sectors = ring_sector_count(90)
    assert len(fig.cover()) == 3 * sectors
    mover = Mover()
    mover.add(fig)

    inner = fig.cover().nodes[sectors]          # first inner-border trapeze
    press = centroid(inner.shape.apexes)
    ray = line_angle(fig.center, press)
    assert mover.catch(press, L)
    rng = random.Random(99)
    for _ in range(30):
        mover.move(point_to_point(fig.center, ray, rng.uniform(25, 75)))
        assert len(fig.cover()) == 3 * sectors, "rebuild leaked into the drag"
    mover.release()
    assert len(fig.cover()) == 3 * ring_sector_count(fig.r_outer)

    # growing the outer border must change the count, but only at release
    outer = fig.cover().nodes[0]
    press = centroid(outer.shape.apexes)
    ray = line_angle(fig.center, press)
    before = len(fig.cover())
    assert mover.catch(press, L)
    for step in range(1, 31):
        mover.move(point_to_point(fig.center, ray, 90 + step * 5 / 3))
        assert len(fig.cover()) == before
    mover.release()
    assert fig.r_outer > 130
    assert len(fig.cover()) == 3 * ring_sector_count(fig.r_outer) != before
    ok("AC06 ring node count is constant mid-drag and formula-exact after release")


def test_ac07_clipping_levels():
    from conftest import probe_rect

    bounds = Rect(0, 0, 800, 600)
    rng = random.Random(31337)

    def run_level(level):
        probe = probe_rect(Rect(-2000, -2000, 5000, 5000))
        mover = Mover(bounds=bounds, clipping=level)
        mover.add(probe)
        raws = []
        for _ in range(100):
            assert mover.catch(pt(400, 300), L)
            for _ in range(10):
                raw = pt(rng.uniform(-500, 1500), rng.uniform(-500, 1500))
                raws.append(raw)
                mover.move(raw)
            mover.release()
        return probe, raws

    probe, _ = run_level(Clipping.VISUAL)
    assert len(probe.moves) == 1000
    for _, _, _, p, _ in probe.moves:
        assert 0 <= p.x <= 799 and 0 <= p.y <= 599

    probe, _ = run_level(Clipping.SAFE)
    xs = [p.x for _, _, _, p, _ in probe.moves]
    ys = [p.y for _, _, _, p, _ in probe.moves]
    assert min(xs) >= 0 and min(ys) >= 0
    assert max(xs) > 799 and max(ys) > 599, "right/bottom must stay exceedable"

    probe, raws = run_level(Clipping.UNSAFE)
    forwarded = [p for _, _, _, p, _ in probe.moves]
    assert [(p.x, p.y) for p in forwarded] == [(p.x, p.y) for p in raws]
    ok("AC07 visual/safe/unsafe clipping hold over 1000 random drags each")


def test_ac08_click_classification_and_bring_to_top():
    for dist, want in ((0.0, "click"), (3.0, "click"), (3.001, "drag"), (10.0, "drag")):
        script = ["add prim a circle 100 100 30", "press 100 100 left"]
        if dist:
            script.append(f"drag {100 + dist} 100")
        script.append("release")
        result = run_scenario("\n".join(script))
        assert [c.kind for c in result.clicks] == [want], f"distance {dist}"

    # five circles in a row; (x, 125) is inside circle i only
    xs = [100, 140, 180, 220, 260]
    lines = [f"add prim c{i} circle {x} 100 30" for i, x in enumerate(xs)]
    order = [f"c{i}" for i in reversed(range(5))]
    rng = random.Random(4242)
    for _ in range(20):
        i = rng.randrange(5)
        lines += [f"press {xs[i]} 125 left", "release"]
        name = f"c{i}"
        order.remove(name)
        order.insert(0, name)
        got = run_scenario("\n".join(lines) + "\ndump\n").dumps[-1].splitlines()
        assert [line.split()[0] for line in got] == order
        assert [line.split()[2] for line in got] == [str(z) for z in range(5)]
    ok("AC08 click threshold at 3 px and bring-to-top permutations match the oracle")


def test_ac09_comment_coefficients():
    rcc = RectangleWithComments(Rect(100, 100, 200, 100))
    inside = rcc.add_comment(pt(150, 130), "in")
    outside = rcc.add_comment(pt(320, 150), "out")
    mover = Mover()
    mover.add(rcc)

    f0 = (inside.coef_x.value, inside.coef_y.value)
    off0 = outside.coef_x.value
    assert outside.coef_x.kind == "offset"
    start_centers = [(fmt(c.center.x), fmt(c.center.y)) for c in (inside, outside)]

    def corner(target_w, target_h):
        press = pt(rcc.rc.left + rcc.rc.width, rcc.rc.top + rcc.rc.height)
        drag(mover, rcc, press, [pt(rcc.rc.left + target_w, rcc.rc.top + target_h)])

    def shift(dx, dy):
        press = pt(rcc.rc.left + rcc.rc.width / 2, rcc.rc.top + rcc.rc.height / 2)
        drag(mover, rcc, press, [pt(press.x + dx, press.y + dy)])

    rng = random.Random(90210)
    ops = []
    for _ in range(1000):
        if rng.random() < 0.5:
            prev = (rcc.rc.width, rcc.rc.height)
            size = (rng.randrange(60, 400), rng.randrange(60, 400))
            corner(*size)
            ops.append(("resize", prev))
        else:
            d = (rng.randrange(-300, 301), rng.randrange(-300, 301))
            shift(*d)
            ops.append(("move", d))
        fx = (inside.center.x - rcc.rc.left) / rcc.rc.width
        fy = (inside.center.y - rcc.rc.top) / rcc.rc.height
        assert abs(fx - f0[0]) < 1e-9 and abs(fy - f0[1]) < 1e-9
        assert outside.coef_x.value == off0, "stored offset must never drift"
        assert abs(outside.center.x - (rcc.rc.right + off0)) < 1e-9

    for op, arg in reversed(ops):
        if op == "resize":
            corner(*arg)
        else:
            shift(-arg[0], -arg[1])
    assert (rcc.rc.left, rcc.rc.top, rcc.rc.width, rcc.rc.height) == (100, 100, 200, 100)
    assert [(fmt(c.center.x), fmt(c.center.y))
            for c in (inside, outside)] == start_centers
    ok("AC09 comment coefficients survive 1000 random ops; inverse restores centers")


def test_ac10_widget_limits():
    configs = [
        ((200, 100), (200, 100), Resizing.NONE),
        ((200, 60), (200, 300), Resizing.NS),
        ((80, 100), (500, 100), Resizing.WE),
        ((80, 60), (500, 300), Resizing.ANY),
    ]
    for min_size, max_size, want in configs:
        assert derive_resizing(min_size, max_size) is want
        assert WidgetProxy(Rect(100, 100, 200, 100), min_size, max_size).resizing is want

    # caterpillar: stretch right, pull in left; pure translation remains
    caterpillar = WidgetProxy(Rect(100, 100, 200, 100), (80, 60), (500, 300))
    mover = Mover()
    mover.add(caterpillar)
    drag(mover, caterpillar, pt(300, 150), [pt(324, 150)])
    assert (caterpillar.rc.left, caterpillar.rc.width) == (100, 224)
    drag(mover, caterpillar, pt(100, 150), [pt(124, 150)])
    assert (caterpillar.rc.left, caterpillar.rc.width) == (124, 200)
    assert (caterpillar.rc.top, caterpillar.rc.height) == (100, 100)

    widget = WidgetProxy(Rect(100, 100, 200, 100), (60, 40), (400, 300))
    mover = Mover()
    mover.add(widget)
    rng = random.Random(1010)
    for _ in range(1000):
        node = widget.cover().nodes[rng.randrange(8)]
        assert mover.catch(node.shape.center, L)
        for _ in range(2):
            mover.move(pt(rng.uniform(-200, 1200), rng.uniform(-200, 900)))
            assert 60 <= widget.rc.width <= 400
            assert 40 <= widget.rc.height <= 300
        mover.release()
    ok("AC10 widget resizing derivation, caterpillar crawl, limits over 1000 drags")


def test_ac11_replay_determinism():
    scripts = sorted(SCENARIO_DIR.glob("*.txt"))
    assert len(scripts) >= 12, f"corpus has only {len(scripts)} scripts"
    required = {
        "primcircle", "primrect", "primstrip", "rect", "rectc", "comment",
        "polygon", "perforated", "chatoyant", "circle", "ring", "strip",
        "circleinpoly", "holes", "label", "widget", "linked", "group",
        "elastic", "selframe",
    }
    seen = set()
    start = time.monotonic()
    for path in scripts:
        text = path.read_text()
        first = run_scenario(text).dumps
        second = run_scenario(text).dumps
        assert first, f"{path.name} never dumps"
        assert first == second, f"{path.name} is not deterministic"
        for dump in first:
            for line in dump.splitlines():
                seen.add(line.split()[1])
    elapsed = time.monotonic() - start
    assert elapsed < 10.0, f"corpus replay took {elapsed:.1f}s"
    missing = required - seen
    assert not missing, f"corpus never exercises: {sorted(missing)}"
    ok(f"AC11 {len(scripts)} scenario scripts replay byte-identically in {elapsed:.2f}s")
