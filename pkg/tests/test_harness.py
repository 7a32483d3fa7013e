"""Scenario grammar, dump format, click bookkeeping, selection flow.

The dump lines asserted here were written out by hand from the figure
definitions (cover sizes from the node-count formulas, three-decimal
formatting) before being run, so they pin the wire format.
"""
import math

import pytest

from coverkit.errors import ScenarioError
from coverkit.harness import (
    CLICK_THRESHOLD,
    ScenarioRunner,
    fmt,
    parse_scenario,
    run_scenario,
)
from coverkit.moveable import MouseButton


def run(text):
    return run_scenario(text)


def dump_lines(text):
    result = run(text)
    assert result.dumps, "script produced no dump"
    return result.dumps[-1].splitlines()


class TestParsing:
    def test_comments_and_blanks_skipped(self):
        got = parse_scenario("# heading\n\n  add rect r 0 0 10 10 any\n\n# end\n")
        assert got == [(3, ["add", "rect", "r", "0", "0", "10", "10", "any"])]

    def test_line_numbers_are_original(self):
        got = parse_scenario("a\n\nb\n# c\nd\n")
        assert [n for n, _ in got] == [1, 3, 5]


class TestFmt:
    def test_three_decimals(self):
        assert fmt(1) == "1.000"
        assert fmt(2 / 3) == "0.667"
        assert fmt(-12.3456) == "-12.346"

    def test_negative_zero_is_normalized(self):
        assert fmt(-0.0) == "0.000"
        assert fmt(-0.0001) == "0.000"


class TestDumpFormat:
    def test_rect_and_circle(self):
        lines = dump_lines("""
            add rect r1 100 100 200 120 any
            add circle c1 400 300 60
            dump
        """)
        assert lines == [
            "c1 circle 0 49 0.000 340.000 240.000 120.000 120.000 | 400.000 300.000 60.000",
            "r1 rect 1 9 0.000 100.000 100.000 200.000 120.000",
        ]

    def test_every_figure_kind_dumps(self):
        lines = dump_lines("""
            add polygon pg 200 200 100 4
            add perforated pf 500 200 60 120 4
            add chatoyant ch 300 500 80 3
            add ring rg 700 500 50 90
            add strip st 100 700 300 700 40
            add circleinpoly cp 600 700 120 6 30
            add holes ho 800 100 150 100 hole circle 850 150 20
            add prim p1 strip 50 50 90 50 10
            add label lb 500 50 Hi there
            dump
        """)
        by_name = {line.split()[0]: line for line in lines}
        assert by_name["pg"].split(" | ")[1] == "200.000 200.000 100.000 4"
        assert by_name["pf"].split(" | ")[1] == "500.000 200.000 60.000 120.000 4"
        assert by_name["ch"].split(" | ")[1] == (
            "300.000 500.000 380.000 500.000 260.000 569.282 260.000 430.718")
        assert by_name["rg"].split(" | ")[1] == "700.000 500.000 50.000 90.000"
        assert by_name["st"].split(" | ")[1] == "100.000 700.000 300.000 700.000 40.000"
        assert by_name["cp"].split(" | ")[1] == (
            "600.000 700.000 120.000 6 600.000 700.000 30.000")
        assert by_name["ho"].split(" | ")[1] == "1 C 850.000 150.000 20.000"
        assert by_name["p1"].split(" | ")[1] == "50.000 50.000 90.000 50.000 10.000"
        assert by_name["lb"].split(" | ")[1] == "500.000 50.000"
        # node counts come from the size formulas
        assert by_name["pg"].split()[3] == "5"
        assert by_name["pf"].split()[3] == "12"
        assert by_name["ch"].split()[3] == "10"
        assert by_name["rg"].split()[3] == "144"
        assert by_name["st"].split()[3] == "37"
        assert by_name["cp"].split()[3] == "32"
        assert by_name["ho"].split()[3] == "2"
        assert by_name["lb"].split()[1] == "label"

    def test_newest_figure_dumps_first(self):
        lines = dump_lines("""
            add prim a circle 100 100 30
            add prim b circle 300 100 30
            dump
        """)
        assert [line.split()[0] for line in lines] == ["b", "a"]
        assert [line.split()[2] for line in lines] == ["0", "1"]

    def test_widget_block_precedes_figures(self):
        lines = dump_lines("""
            add prim a circle 100 100 30
            add widget w1 300 300 80 40 0 0 0 0 movable
            dump
        """)
        assert lines[0].startswith("w1 widget 0 5 0.000 300.000 300.000 80.000 40.000")
        assert lines[1].split()[0] == "a"

    def test_dump_collects_in_order(self):
        result = run("""
            add prim a circle 100 100 30
            dump
            press 100 100 left
            drag 150 120
            release
            dump
        """)
        assert len(result.dumps) == 2
        assert result.dumps[0] != result.dumps[1]
        assert "150.000 120.000 30.000" in result.dumps[1]

    def test_angle_column_tracks_rotation(self):
        lines = dump_lines("""
            add polygon pg 200 200 100 4
            press 300 200 right
            drag 200 300
            release
            dump
        """)
        angle = float(lines[0].split()[4])
        assert angle == pytest.approx(math.pi / 2, abs=5e-4)


class TestNames:
    def test_duplicate_rejected(self):
        with pytest.raises(ScenarioError) as err:
            run("add prim a circle 0 0 10\nadd prim a circle 50 0 10\n")
        assert err.value.line == 2
        assert "duplicate" in err.value.message

    def test_reserved_prefix_rejected(self):
        with pytest.raises(ScenarioError) as err:
            run("add prim _a circle 0 0 10\n")
        assert "reserved" in err.value.message

    def test_unknown_id(self):
        with pytest.raises(ScenarioError) as err:
            run("popup ghost\n")
        assert "unknown id" in err.value.message


class TestErrors:
    def test_engine_errors_carry_line_numbers(self):
        with pytest.raises(ScenarioError) as err:
            run("# header\n\nadd ring rg 100 100 90 50\n")
        assert err.value.line == 3
        assert "r_inner" in err.value.message

    def test_unknown_command(self):
        with pytest.raises(ScenarioError) as err:
            run("bogus 1 2 3\n")
        assert "unknown command" in err.value.message

    def test_usage_errors(self):
        for bad in ("press 10 10 middle", "bounds 100", "clip sideways",
                    "add rect r 0 0 10 10", "sense 1", "select 1 2 3"):
            with pytest.raises(ScenarioError):
                run(bad + "\n")

    def test_dump_not_a_runner_command(self):
        with pytest.raises(ScenarioError):
            ScenarioRunner().execute(1, ["dump"])

    def test_str_includes_line(self):
        err = ScenarioError(7, "boom")
        assert str(err) == "line 7: boom"


class TestClicks:
    def test_click_vs_drag_threshold(self):
        result = run(f"""
            add prim a circle 100 100 30
            press 100 100 left
            drag {100 + CLICK_THRESHOLD} 100
            release
            press {100 + CLICK_THRESHOLD} 100 left
            drag {100 + 2 * CLICK_THRESHOLD + 0.001} 100
            release
        """)
        kinds = [(c.name, c.kind) for c in result.clicks]
        assert kinds == [("a", "click"), ("a", "drag")]

    def test_press_release_in_place_is_click(self):
        result = run("""
            add prim a circle 100 100 30
            press 100 100 right
            release
        """)
        click = result.clicks[0]
        assert click.kind == "click"
        assert click.button is MouseButton.RIGHT
        assert click.press == click.release

    def test_empty_press_reports_nothing(self):
        result = run("""
            add prim a circle 100 100 30
            press 500 500 left
            release
        """)
        assert result.clicks == []


class TestBringToTop:
    def test_left_click_pops_figure(self):
        lines = dump_lines("""
            add prim c1 circle 100 100 30
            add prim c2 circle 140 100 30
            press 100 100 left
            release
            dump
        """)
        assert [line.split()[0] for line in lines] == ["c1", "c2"]

    def test_drag_does_not_pop(self):
        lines = dump_lines("""
            add prim c1 circle 100 100 30
            add prim c2 circle 140 100 30
            press 100 100 left
            drag 90 80
            release
            dump
        """)
        assert [line.split()[0] for line in lines] == ["c2", "c1"]

    def test_right_click_does_not_pop(self):
        lines = dump_lines("""
            add prim c1 circle 100 100 30
            add prim c2 circle 140 100 30
            press 100 100 right
            release
            dump
        """)
        assert [line.split()[0] for line in lines] == ["c2", "c1"]

    def test_popup_command(self):
        lines = dump_lines("""
            add prim c1 circle 100 100 30
            add prim c2 circle 300 100 30
            add prim c3 circle 500 100 30
            popup c1
            dump
        """)
        assert [line.split()[0] for line in lines] == ["c1", "c3", "c2"]

    def test_pop_survives_renew(self):
        lines = dump_lines("""
            add prim c1 circle 100 100 30
            add prim c2 circle 140 100 30
            press 100 100 left
            release
            renew
            dump
        """)
        assert [line.split()[0] for line in lines] == ["c1", "c2"]

    def test_popup_refuses_non_figures(self):
        with pytest.raises(ScenarioError) as err:
            run("""
                add widget w1 0 0 50 50 0 0 0 0 movable
                popup w1
            """)
        assert "not a plain figure" in err.value.message

    def test_widgets_stay_in_front_of_popped_figure(self):
        lines = dump_lines("""
            add widget w1 90 90 80 40 0 0 0 0 movable
            add prim c1 circle 100 200 30
            add prim c2 circle 140 200 30
            press 100 200 left
            release
            dump
        """)
        assert [line.split()[0] for line in lines] == ["w1", "c1", "c2"]


class TestSelection:
    SCENE = """
        add prim a circle 150 150 20
        add prim b rect 200 180 40 30
        add prim far circle 600 400 20
    """

    def test_band_drag_creates_selection(self):
        lines = dump_lines(self.SCENE + """
            press 90 90 left
            drag 300 260
            release
            dump
        """)
        assert lines[0] == ("_selection_ selframe 0 9 0.000 90.000 90.000 "
                            "210.000 170.000 | b a")

    def test_select_command_equivalent(self):
        lines = dump_lines(self.SCENE + "select 90 90 300 260\ndump\n")
        assert lines[0].startswith("_selection_ selframe 0 9")

    def test_sweep_direction_does_not_matter(self):
        lines = dump_lines(self.SCENE + "select 300 260 90 90\ndump\n")
        assert "90.000 90.000 210.000 170.000" in lines[0]

    def test_under_two_means_no_selection(self):
        lines = dump_lines(self.SCENE + "select 90 90 200 200\ndump\n")
        assert all("selframe" not in line for line in lines)

    def test_border_drag_moves_selection_and_members(self):
        lines = dump_lines(self.SCENE + """
            select 90 90 300 260
            press 170 90 left
            drag 180 110
            release
            dump
        """)
        frame = lines[0].split()
        assert (frame[5], frame[6]) == ("100.000", "110.000")
        by_name = {line.split()[0]: line.split() for line in lines}
        assert (by_name["a"][5], by_name["a"][6]) == ("140.000", "150.000")
        assert (by_name["far"][5], by_name["far"][6]) == ("580.000", "380.000")

    def test_interior_press_reaches_figures(self):
        result = run(self.SCENE + """
            select 90 90 300 260
            press 150 150 left
            drag 160 160
            release
        """)
        assert result.clicks[-1].name == "a"

    def test_shrunk_selection_disbands_on_release(self):
        lines = dump_lines(self.SCENE + """
            select 90 90 300 260
            press 300 260 left
            drag 180 170
            release
            dump
        """)
        assert all("selframe" not in line for line in lines)

    def test_new_band_replaces_old_selection(self):
        lines = dump_lines(self.SCENE + """
            select 90 90 300 260
            select 100 100 640 440
            dump
        """)
        selframes = [line for line in lines if " selframe " in line]
        assert len(selframes) == 1
        assert selframes[0].endswith("| far b a")

    def test_right_press_on_empty_does_not_band(self):
        lines = dump_lines(self.SCENE + """
            press 90 90 right
            drag 300 260
            release
            dump
        """)
        assert all("selframe" not in line for line in lines)


class TestGroupCommands:
    def test_linked_consumes_widgets(self):
        lines = dump_lines("""
            add widget w1 100 100 80 40 0 0 0 0 movable
            add widget w2 300 100 80 40 0 0 0 0 movable
            group linked lk w1 w2
            dump
        """)
        assert lines == [
            "lk linked 0 2 0.000 100.000 100.000 280.000 40.000 | "
            "2 100.000 100.000 80.000 40.000 300.000 100.000 80.000 40.000"]

    def test_linked_names_are_freed(self):
        run("""
            add widget w1 100 100 80 40 0 0 0 0 movable
            group linked lk w1
            add prim w1 circle 500 500 10
        """)

    def test_linked_requires_widget_children(self):
        with pytest.raises(ScenarioError) as err:
            run("""
                add prim a circle 100 100 30
                group linked lk a
            """)
        assert "not a widget" in err.value.message

    def test_frame_group_around_widgets(self):
        lines = dump_lines("""
            add widget w1 100 100 80 40 0 0 0 0 movable
            add widget w2 250 120 60 30 0 0 0 0 movable
            group frame g1 80 80 320 100 100 400 60 200 w1 w2
            dump
        """)
        assert lines == [
            "g1 group 0 9 0.000 80.000 80.000 320.000 100.000 | "
            "2 100.000 100.000 80.000 40.000 250.000 120.000 60.000 30.000"]

    def test_frame_resize_carries_elements(self):
        lines = dump_lines("""
            add widget w1 100 100 80 40 0 0 0 0 movable
            group frame g1 80 80 320 100 100 400 60 200 w1
            press 400 130 left
            drag 480 130
            release
            dump
        """)
        parts = lines[0].split(" | ")[1].split()
        assert parts[0] == "1"
        assert parts[1] == "115.000"       # anchored at fx=0.1875 of 400 wide

    def test_elastic_group_keeps_children_grabbable(self):
        result = run("""
            add prim a rect 100 100 40 30
            add prim b circle 250 200 25
            group elastic eg a b
            press 250 200 left
            drag 350 200
            release
            dump
        """)
        lines = result.dumps[-1].splitlines()
        assert [line.split()[0] for line in lines] == ["a", "b", "eg"]
        eg = lines[2].split()
        assert eg[1] == "elastic"
        assert lines[2].endswith("| a b")
        assert (eg[5], eg[7]) == ("92.000", "291.000")
        assert result.clicks[-1].name == "b"

    def test_elastic_children_must_be_free(self):
        with pytest.raises(ScenarioError):
            run("""
                add prim a circle 100 100 30
                group elastic e1 a
                group elastic e2 a
            """)

    def test_child_listed_twice(self):
        with pytest.raises(ScenarioError) as err:
            run("""
                add prim a circle 100 100 30
                add prim b circle 300 100 30
                group elastic e1 a a
            """)
        assert "twice" in err.value.message


class TestPointerEnvironment:
    def test_bounds_and_visual_clip(self):
        lines = dump_lines("""
            bounds 800 600
            add prim p rect 700 500 80 60
            press 750 550 left
            drag 900 700
            release
            dump
        """)
        parts = lines[0].split()
        assert (parts[5], parts[6]) == ("749.000", "549.000")

    def test_clip_unsafe_lets_points_out(self):
        lines = dump_lines("""
            bounds 800 600
            clip unsafe
            add prim p rect 700 500 80 60
            press 750 550 left
            drag 900 700
            release
            dump
        """)
        parts = lines[0].split()
        assert (parts[5], parts[6]) == ("850.000", "650.000")

    def test_sense_updates_cursor(self):
        runner = ScenarioRunner()
        for line_no, tokens in parse_scenario("""
            add rect r1 100 100 200 120 any
            add widget w1 500 100 80 40 0 0 0 0 movable
        """):
            runner.execute(line_no, tokens)
        checks = [
            ("sense 100 100", "Hand"),
            ("sense 200 100", "SizeNS"),
            ("sense 300 160", "SizeWE"),
            ("sense 200 160", "SizeAll"),
            ("sense 540 120", "Default"),     # blocked widget interior
            ("sense 20 20", "Default"),       # empty space
        ]
        for command, want in checks:
            runner.execute(1, command.split())
            assert runner.last_cursor == want, command

    def test_press_while_pressed_is_an_error(self):
        with pytest.raises(ScenarioError):
            run("""
                add prim a circle 100 100 30
                press 100 100 left
                press 100 100 left
            """)

    def test_release_without_press_is_quiet(self):
        run("add prim a circle 100 100 30\nrelease\ndrag 50 50\n")


def test_determinism_same_script_same_bytes():
    script = """
        add rect r1 100 100 200 120 any
        add circle c1 400 300 60
        press 300 220 left
        drag 340 260
        release
        select 50 50 700 500
        dump
    """
    assert run(script).dumps == run(script).dumps
