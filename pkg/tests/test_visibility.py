import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import random_scene, rng_for, square
from obstacles.constructions import vc_representation
from obstacles.geometry import Polygon, point
from obstacles.graph import Graph
from obstacles.visibility import (
    Scene, SceneError, is_obstacle_representation, visibility_graph, visibility_graph_bruteforce,
)


def test_three_points_no_obstacles():
    s = Scene({0: point(0, 0), 1: point(3, 0), 2: point(0, 3)})
    assert visibility_graph(s) == Graph.complete(3)


def test_square_between_two_points():
    s = Scene({0: point(0, 0), 1: point(4, 0)}, [square(2, 0, 1)])
    assert visibility_graph(s) == Graph.empty(2)


def test_k2_verdicts():
    pts = {0: point(0, 0), 1: point(4, 0)}
    assert is_obstacle_representation(Scene(pts), Graph.complete(2))
    verdict = is_obstacle_representation(Scene(pts, [square(2, 0, 1)]), Graph.complete(2))
    assert not verdict
    assert verdict.kind == "missing edge" and verdict.pair == (0, 1)


def test_tangency_blocks():
    s = Scene({0: point(0, 0), 1: point(4, 0)}, [Polygon([(2, 0), (3, 1), (1, 1)])])
    assert visibility_graph(s).m == 0


@pytest.mark.parametrize("scene, message", [
    (lambda: Scene({0: point(0, 0), 1: point(0, 0)}), "pairwise distinct"),
    (lambda: Scene({0: point(0, 0), 1: point(1, 0), 2: point(2, 0)}), "general position"),
    (lambda: Scene({0: point(0, 0), 1: point(9, 9)}, [square(4, 4, 1), square(5, 5, 1)]), "pairwise disjoint"),
    (lambda: Scene({0: point(4, 4), 1: point(9, 0)}, [square(4, 4, 1)]), "inside or on an obstacle"),
])
def test_invariant_violations_are_named(scene, message):
    with pytest.raises(SceneError, match=message):
        visibility_graph(scene())


def test_vc_representation_reproduces_its_graph():
    # star with two extra leaves hanging from a second cover vertex
    g = Graph(range(7), [(0, 2), (0, 3), (0, 4), (1, 4), (1, 5), (1, 6), (0, 1)])
    scene = vc_representation(g)
    assert visibility_graph(scene) == g


@settings(max_examples=500, deadline=None)
@given(st.integers(0, 10**9))
def test_matches_bruteforce(seed):
    s = random_scene(rng_for(seed), n_max=10, k_max=4)
    assert visibility_graph(s) == visibility_graph_bruteforce(s)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_adding_an_obstacle_never_adds_edges(seed):
    s = random_scene(rng_for(seed), k_max=3)
    if not s.obstacles:
        return
    fewer = Scene(s.points, s.obstacles[:-1])
    assert visibility_graph(s).edges <= visibility_graph(fewer).edges


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_deleting_a_point_gives_induced_subgraph(seed):
    rng = rng_for(seed)
    s = random_scene(rng)
    v = rng.choice(s.labels)
    rest = {u: p for u, p in s.points.items() if u != v}
    assert visibility_graph(Scene(rest, s.obstacles)) == visibility_graph(s).without([v])
