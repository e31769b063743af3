import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import general_points, random_graph, rng_for
from obstacles.arrangement import Drawing, DrawingError, planarize
from obstacles.constructions import cap_arrangement, lower_bound_drawing
from obstacles.geometry import Location, Polygon, Segment, locate_in_ring, on_segment, point, upper_chain_edge_count
from obstacles.graph import Graph


def square_drawing(graph):
    pos = {0: point(0, 0), 1: point(4, 0), 2: point(4, 4), 3: point(0, 4)}
    return Drawing(graph, {v: pos[v] for v in graph.vertices})


@pytest.fixture
def k4():
    return square_drawing(Graph.complete(4))


def test_two_disjoint_segments():
    d = Drawing(Graph(range(4), [(0, 1), (2, 3)]),
                {0: point(0, 0), 1: point(1, 0), 2: point(0, 2), 3: point(1, 3)})
    arr = planarize(d)
    assert (arr.num_nodes, arr.num_arcs, arr.num_faces) == (4, 2, 1)


def test_k4_convex(k4):
    arr = planarize(k4)
    assert (arr.num_nodes, arr.num_arcs, arr.num_faces) == (5, 8, 5)
    assert len(arr.bounded_faces()) == 4
    assert arr.euler_ok()


def test_triangle_cap():
    arr = cap_arrangement(3)
    assert (arr.num_nodes, arr.num_arcs, arr.num_faces) == (3, 3, 2)


def test_isolated_vertex_gets_a_face():
    d = Drawing(Graph(range(4), [(0, 1), (1, 2), (0, 2)]),
                {0: point(0, 0), 1: point(6, 0), 2: point(0, 6), 3: point(1, 1)})
    arr = planarize(d)
    inner = arr.isolated_face[arr.vertex_node[3]]
    assert arr.faces[inner].bounded
    assert arr.euler_ok()


def test_vertex_on_foreign_edge_rejected():
    d = Drawing(Graph(range(4), [(0, 1), (2, 3)]),
                {0: point(0, 0), 1: point(4, 0), 2: point(2, 2), 3: point(3, 5)})
    planarize(d)
    with pytest.raises(DrawingError):
        Drawing(Graph(range(3), [(0, 1)]), {0: point(0, 0), 1: point(4, 0), 2: point(2, 0)})


def test_stabbed_faces_of_edge_is_empty(k4):
    arr = planarize(k4)
    for u, v in k4.graph.sorted_edges():
        assert arr.stabbed_faces(k4.segment(u, v)) == set()


def test_stabbed_faces_path_triangle():
    d = Drawing(Graph(range(3), [(0, 1), (1, 2)]), {0: point(0, 0), 1: point(4, 0), 2: point(0, 4)})
    arr = planarize(d)
    assert arr.num_faces == 1
    assert arr.stabbed_faces(d.segment(0, 2)) == {0}


def test_excluded_pairs_stab_faces_inside_cap_free_faces():
    # faces of D_n met by X lie inside 4-cap-free faces of the cup drawing D'_m
    lb = lower_bound_drawing(12)
    arr = lb.arrangement
    cap = cap_arrangement(lb.m)
    checked = 0
    for u, v in lb.X:
        faces = arr.stabbed_faces(lb.drawing.segment(u, v))
        assert faces
        for f in faces:
            ring = arr.face_ring(f)
            inner = point(sum(p.x for p in ring[:3]) / 3, sum(p.y for p in ring[:3]) / 3)
            outer = cap.locate(inner)
            if outer is not None and cap.faces[outer].bounded:
                assert upper_chain_edge_count(Polygon(cap.face_ring(outer))) <= 2
                checked += 1
    assert checked > 0


def _random_drawing(seed, n_max=8, p=0.5):
    rng = rng_for(seed)
    n = rng.randint(2, n_max)
    g = random_graph(rng, n, p)
    return Drawing(g, dict(enumerate(general_points(rng, n, 30))))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_arc_incidence_sums_to_twice_arcs(seed):
    arr = planarize(_random_drawing(seed))
    assert sum(arr.face_arc_count(f.index) for f in arr.faces) == 2 * arr.num_arcs
    assert arr.euler_ok()


def _in_face(arr, f, p):
    face = arr.faces[f]
    if face.bounded and locate_in_ring(p, arr.face_ring(f)) is not Location.INSIDE:
        return False
    for hole in face.holes:
        ring = [arr.nodes[i] for i in hole]
        if len(set(ring)) >= 3 and locate_in_ring(p, ring) is not Location.OUTSIDE:
            return False
    return True


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.fractions(-5, 35, max_denominator=7), st.fractions(-5, 35, max_denominator=7))
def test_faces_tile_the_plane(seed, x, y):
    d = _random_drawing(seed)
    arr = planarize(d)
    p = point(x, y)
    if any(on_segment(p, *arr.arc_segment(k)) for k in range(arr.num_arcs)) or p in arr.nodes:
        return
    owners = [f.index for f in arr.faces if _in_face(arr, f.index, p)]
    assert len(owners) == 1
    assert arr.locate(p) == owners[0]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_nonedges_between_distinct_points_stab_a_face(seed):
    d = _random_drawing(seed)
    arr = planarize(d)
    for u, v in d.graph.nonedges():
        assert arr.stabbed_faces(Segment(d.position[u], d.position[v]))


def test_face_order_is_deterministic():
    a = planarize(_random_drawing(7))
    b = planarize(_random_drawing(7))
    assert [f.outer for f in a.faces] == [f.outer for f in b.faces]
