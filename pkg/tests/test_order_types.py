import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import general_points, random_convex, random_scene, rng_for
from obstacles.geometry import GeometryError, Polygon, orient, point
from obstacles.order_types import (
    alternation_free, blocking_profile, chirotope, curve_crossings, cutpath, dual_line, dual_point,
    is_cyclic_interval, is_vertically_above, line_of_point_pair, nonconvex_counterexample,
    nonedge_criterion, point_above_line, radial_from_chirotope, radial_system, ray_hits_convex,
    ray_hits_polygon_bruteforce, tangent_curve, tangent_vertices,
)
from obstacles.visibility import Scene, visibility_graph

coord = st.fractions(min_value=-30, max_value=30, max_denominator=5)


@pytest.fixture
def triangle():
    return Polygon([(0, 0), (4, 0), (2, 3)])


def test_ccw_triple():
    chi = chirotope({0: point(0, 0), 1: point(1, 0), 2: point(0, 1)})
    assert chi(0, 1, 2) == 1 and chi(1, 0, 2) == -1


def test_square_radial_order():
    pts = {0: point(0, 0), 1: point(1, 0), 2: point(1, 1), 3: point(0, 1)}
    # clockwise from straight up, seen from the bottom-left corner
    assert radial_system(pts)[0] == [3, 2, 1]


def test_collinear_points_rejected():
    with pytest.raises(GeometryError):
        chirotope([point(0, 0), point(1, 1), point(2, 2)])


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_radial_from_chirotope_agrees(seed):
    pts = dict(enumerate(general_points(rng_for(seed), rng_for(seed).randint(3, 8))))
    chi = chirotope(pts)
    assert radial_from_chirotope(chi).equivalent(radial_system(pts))
    for a, b, c in itertools.permutations(pts, 3):
        assert chi(a, b, c) == -chi(b, a, c)


def test_interval_predicates():
    order = [1, 2, 3, 4, 5, 6]
    assert is_cyclic_interval(order, {6, 1, 2})
    assert not is_cyclic_interval(order, {1, 3})
    assert alternation_free(order, {5, 6, 1})
    assert not alternation_free(order, {2, 4})


@settings(max_examples=200, deadline=None)
@given(st.lists(st.booleans(), min_size=1, max_size=9))
def test_interval_readings_agree(flags):
    order = list(range(len(flags)))
    subset = {i for i, f in enumerate(flags) if f}
    assert is_cyclic_interval(order, subset) == alternation_free(order, subset)


def test_obstacle_behind_points():
    pts = {0: point(10, 0), 1: point(12, 5), 2: point(0, 0)}
    wall = Polygon([(4, -2), (6, -2), (6, 2), (4, 2)])
    scene = Scene(pts, [wall])
    prof = blocking_profile(scene)
    assert prof.interval(0, 0) == [2]
    assert prof.interval(2, 0) == [1, 0]


def test_far_obstacle_blocks_nothing():
    pts = {0: point(0, 0), 1: point(5, 0), 2: point(0, 5)}
    far = Polygon([(-50, -50), (-48, -50), (-48, -48)])
    prof = blocking_profile(Scene(pts, [far]))
    assert all(not members for members in prof.intervals.values())


def test_no_obstacles_complete():
    pts = dict(enumerate(general_points(rng_for(1), 6)))
    assert nonedge_criterion(Scene(pts)).m == 15


def test_nonconvex_counterexample():
    scene = nonconvex_counterexample()
    assert visibility_graph(scene).m == 1
    assert nonedge_criterion(scene, require_convex=False).m == 0
    with pytest.raises(GeometryError):
        blocking_profile(scene)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9))
def test_blocking_intervals_and_criterion(seed):
    scene = random_scene(rng_for(seed))
    prof = blocking_profile(scene)
    for (v, k), members in prof.intervals.items():
        assert is_cyclic_interval(prof.radial[v], members)
    assert nonedge_criterion(scene, prof) == visibility_graph(scene)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9), coord, coord)
def test_ray_cone_matches_clipped_ray(seed, x, y):
    rng = rng_for(seed)
    poly = random_convex(rng, 20, 6)
    v, t = point(x, y), point(rng.randint(-30, 30), rng.randint(-30, 30))
    if v == t or any(v == q for q in poly.vertices):
        return
    from obstacles.geometry import Location, point_in_polygon
    if point_in_polygon(v, poly) is not Location.OUTSIDE:
        return
    assert ray_hits_convex(v, t, poly) == ray_hits_polygon_bruteforce(v, t, poly)


def test_dual_examples():
    assert dual_line(point(1, 2)) == (1, -2)
    assert dual_point(dual_line(point(1, 2))) == point(1, 2)


@settings(max_examples=500)
@given(coord, coord, coord, coord, coord, coord)
def test_duality_preserves_above(px, py, ax, ay, bx, by):
    if ax == bx:
        return
    p = point(px, py)
    line = line_of_point_pair(point(ax, ay), point(bx, by))
    assert dual_point(dual_line(p)) == p
    lstar = dual_point(line)
    m, c = dual_line(p)
    # ell* above p* iff p above ell
    side = lstar.y - (m * lstar.x + c)
    assert point_above_line(p, line) == (side > 0) - (side < 0)


def test_breakpoints_and_crossings(triangle):
    tau = tangent_curve(triangle, "upper")
    assert len(tau.breakpoints) == 2           # upper hull has three vertices
    assert len(curve_crossings(tau, point(-20, Fraction(1, 3)))) == 1
    above = point(2, 10)
    assert is_vertically_above(above, triangle)
    assert len(curve_crossings(tau, above)) == 2


def test_tangent_vertices_of_point_above(triangle):
    assert sorted(tangent_vertices(point(2, 10), triangle)) == [point(0, 0), point(4, 0)]


def test_cutpath_sorted(triangle):
    seq = cutpath(tangent_curve(triangle, "upper"), {0: point(2, 10), 1: point(-9, 1)})
    xs = [x for _, x in seq]
    assert xs == sorted(xs) and len(seq) == 3


def test_breakpoint_crossing_rejected(triangle):
    with pytest.raises(GeometryError):
        # on the line through the right edge, beyond the obstacle
        curve_crossings(tangent_curve(triangle, "upper"), point(6, -3))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**9), coord, coord)
def test_curve_shape_and_crossing_counts(seed, x, y):
    poly = random_convex(rng_for(seed), 20, 6)
    tau, beta = tangent_curve(poly, "upper"), tangent_curve(poly, "lower")
    assert all(a > b for a, b in zip(tau.slopes, tau.slopes[1:]))
    assert all(a < b for a, b in zip(beta.slopes, beta.slopes[1:]))
    p = point(x, y)
    try:
        up = curve_crossings(tau, p)
    except GeometryError:
        return
    assert len(up) <= 2
    if is_vertically_above(p, poly):
        assert len(up) == 2


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9))
def test_interval_ends_come_from_dual_crossings(seed):
    # the two tangents from v (read off the dual curves) bound exactly the blocked rays
    scene = random_scene(rng_for(seed), k_max=1)
    if not scene.obstacles:
        return
    poly = scene.obstacles[0]
    prof = blocking_profile(scene)
    for v, pv in scene.points.items():
        try:
            touch = set(tangent_vertices(pv, poly))
        except GeometryError:
            continue
        if len(touch) != 2:
            continue
        t1, t2 = touch
        s = orient(pv, t1, t2)
        cone = [u for u in prof.radial[v]
                if s * orient(pv, t1, scene.points[u]) >= 0 and s * orient(pv, scene.points[u], t2) >= 0]
        assert cone == prof.interval(v, 0)
