import re
import xml.etree.ElementTree as ET

import pytest

from tribroadcast.broadcast import Params
from tribroadcast.lattice import Window, graph_distance, matchstick
from tribroadcast.patterns import enumerate_towers, pattern
from tribroadcast.render import RenderSpec, hexagon_corners, render_ascii, render_svg

SVG = "{http://www.w3.org/2000/svg}"


def test_ascii_rings_around_one_tower():
    spec = RenderSpec.build(matchstick(3), [(1, 2)], Params(3, 1), reception_values=True)
    text = render_ascii(spec)
    rows = [line.split() for line in text.splitlines()]
    assert rows == [["1"], ["2", "2"], ["2", "3*", "2"], ["1", "2", "2", "1"]]


def test_ascii_layout_is_triangular():
    text = render_ascii(RenderSpec.build(matchstick(4), [(0, 0), (2, 3)], Params(3, 1)))
    lines = text.splitlines()
    assert len(lines) == 5
    assert [len(line.split()) for line in lines] == [1, 2, 3, 4, 5]
    assert text.count("@") == 2
    assert lines[3].split()[2] == "@"


def test_ascii_without_towers_is_zero_field():
    text = render_ascii(RenderSpec.build(matchstick(3), [], Params(2, 1), reception_values=True))
    assert set(text.split()) == {"0"}


def test_ascii_marks_outside_towers():
    text = render_ascii(RenderSpec.build(matchstick(2), [(3, 1)], Params(2, 1)))
    assert text.count("o") == 1 and "@" not in text


def test_ascii_is_plain_and_deterministic():
    w = Window(8, 3)
    spec = RenderSpec.build(w, enumerate_towers(pattern((3, 1)), w), Params(3, 1), reception_values=True)
    a, b = render_ascii(spec), render_ascii(spec)
    assert a == b
    assert all(32 <= ord(c) < 127 or c == "\n" for c in a)


def parse(svg):
    return ET.fromstring(svg.split("\n", 1)[1])


def test_svg_is_valid_and_counts_towers():
    w = Window(9, 3)
    towers = enumerate_towers(pattern((3, 1)), w)
    spec = RenderSpec.build(w, towers, Params(3, 1), reach_hexagons=True, boundary=True)
    root = parse(render_svg(spec))
    assert root.tag == SVG + "svg" and root.get("version") == "1.1"
    circles = root.findall(f".//{SVG}circle[@class='tower']")
    assert len(circles) == len(towers)
    assert len(root.findall(f".//{SVG}g[@class='reach']/{SVG}polygon")) == len(towers)
    assert root.find(f".//{SVG}polygon[@class='boundary']") is not None
    assert len(root.findall(f".//{SVG}g[@class='vertices']/{SVG}circle")) == len(w.core())


def test_svg_deterministic_with_fixed_precision():
    spec = RenderSpec.build(matchstick(4), [(1, 2), (3, 4)], Params(3, 2), reception_values=True)
    a = render_svg(spec)
    assert a == render_svg(spec)
    numbers = re.findall(r' (?:c?[xy][12]?|r|width|height)="(-?\d+\.\d+)"', a)
    assert numbers and all(len(x.split(".")[1]) == 4 for x in numbers)
    assert "-0.0000" not in a


def test_bare_grid_without_towers():
    root = parse(render_svg(RenderSpec.build(matchstick(2), [], Params(2, 1))))
    assert not root.findall(f".//{SVG}circle[@class='tower']")
    assert len(root.findall(f".//{SVG}line")) == 9


@pytest.mark.parametrize("t", [1, 2, 4])
def test_hexagon_corners_at_reach_radius(t):
    corners = hexagon_corners((2, -1), t)
    assert len(set(corners)) == (6 if t > 1 else 1)
    assert all(graph_distance((2, -1), c) == t - 1 for c in corners)


def test_reception_labels_only_inside_region():
    spec = RenderSpec.build(matchstick(3), [(5, 5)], Params(2, 1), reception_values=True)
    root = parse(render_svg(spec))
    assert len(root.findall(f".//{SVG}text")) == 10


def test_render_does_not_mutate_inputs():
    towers = frozenset({(1, 1)})
    spec = RenderSpec.build(matchstick(2), towers, Params(2, 1), reception_values=True)
    render_svg(spec)
    render_ascii(spec)
    assert spec.towers == towers
