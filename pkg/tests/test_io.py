import re
import xml.etree.ElementTree as ET

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import random_scene, rng_for
from obstacles.arrangement import Drawing, DrawingError
from obstacles.constructions import lower_bound_drawing
from obstacles.geometry import GeometryError, point
from obstacles.graph import Graph
from obstacles.io import (
    ParseError, parse_drawing, parse_graph, parse_polygon, parse_scene, serialize_drawing,
    serialize_graph, serialize_polygon, serialize_scene,
)
from obstacles.obs_solver import obs_of_drawing
from obstacles.svg import emit_svg
from obstacles.visibility import Scene

SVG = "{http://www.w3.org/2000/svg}"


def test_parse_k2():
    assert parse_graph("graph 2 1\ne 0 1") == Graph.complete(2)


def test_duplicate_point_named():
    with pytest.raises(DrawingError, match="positions pairwise distinct"):
        parse_drawing("drawing 2 0\nv 0 1 1\nv 1 1 1\n")


@pytest.mark.parametrize("text, line, column", [
    ("graph 2 1\ne 0 x\n", 2, 5),
    ("graph 2 1\ne 1 0\n", 2, 3),
    ("graph 2 1\n", 1, None),
    ("drawing 1 0\nv 0 1/0 2\n", 2, 5),
    ("graph 2 0\nextra\n", 2, 1),
    ("polygon 3\n0 0\n1 0\n", 3, None),
])
def test_parse_errors_locate(text, line, column):
    parser = parse_polygon if text.startswith("polygon") else parse_drawing if text.startswith("drawing") else parse_graph
    with pytest.raises(ParseError) as info:
        parser(text)
    assert info.value.line == line
    assert info.value.column == column


def test_comments_and_fractions():
    d = parse_drawing("# a drawing\ndrawing 2 1\nv 0 6/4 0  # reduced on read\nv 1 -2 3\ne 0 1\n")
    assert d.position[0] == point("3/2", 0)
    assert "v 0 3/2 0" in serialize_drawing(d)


def test_nonsimple_polygon_is_invariant_error():
    with pytest.raises(GeometryError):
        parse_polygon("polygon 4\n0 0\n2 2\n2 0\n0 2\n")


def test_scene_with_container():
    text = ("drawing 2 1\nv 0 1 1\nv 1 2 1\ne 0 1\n"
            "container 4\n0 0\n3 0\n3 3\n0 3\n")
    scene = parse_scene(text)
    assert scene.container is not None and scene.graph.m == 1
    assert serialize_scene(scene) == text


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9))
def test_scene_round_trip(seed):
    scene = random_scene(rng_for(seed))
    text = serialize_scene(scene)
    assert serialize_scene(parse_scene(text)) == text


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**9))
def test_graph_and_polygon_round_trip(seed):
    scene = random_scene(rng_for(seed), k_max=2)
    for poly in scene.obstacles:
        assert serialize_polygon(parse_polygon(serialize_polygon(poly))) == serialize_polygon(poly)
    g = Graph(range(5), [(0, 1), (2, 4)])
    assert parse_graph(serialize_graph(g)) == g


def _parse_svg(text):
    root = ET.fromstring(text)
    assert root.tag == SVG + "svg"
    return root


def test_empty_scene_svg():
    root = _parse_svg(emit_svg(Scene({}, [])))
    assert re.fullmatch(r"[-0-9. ]+", root.get("viewBox"))
    assert len(root.findall(SVG + "circle")) == 0


def test_k4_svg_counts():
    d = Drawing(Graph.complete(4), {0: point(0, 0), 1: point(4, 0), 2: point(4, 4), 3: point(0, 4)})
    root = _parse_svg(emit_svg(d))
    assert len(root.findall(SVG + "circle")) == 4
    assert len(root.findall(SVG + "line")) == 6
    # 5% margin around the 4x4 box, y flipped
    assert root.get("viewBox") == "-0.2 -4.2 4.4 4.4"


def test_d8_cover_svg_face_count():
    lb = lower_bound_drawing(8)
    inst, res = obs_of_drawing(lb.drawing)
    root = _parse_svg(emit_svg(inst.arrangement, {"chosen": res.chosen}))
    faces = [p for p in root.findall(SVG + "path") if p.get("class", "").startswith("face")]
    assert len(faces) == inst.arrangement.num_faces
    assert sum(p.get("class") == "face chosen" for p in faces) == res.size


def test_svg_deterministic():
    scene = random_scene(rng_for(3))
    assert emit_svg(scene) == emit_svg(scene)


def test_svg_rejects_unknown_type():
    with pytest.raises(TypeError):
        emit_svg(42)
