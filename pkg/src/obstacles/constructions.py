"""Explicit obstacle representations and the quadratic lower-bound drawing."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .arrangement import Arrangement, Drawing, DrawingError, crossing_signature, planarize
from .geometry import (
    GeometryError,
    Point,
    Polygon,
    Segment,
    collinear_triple,
    orient,
    point,
    segments_intersect,
    upper_chain_edge_count,
)
from .graph import Graph
from .obs_solver import build_cover_instance, faces_to_obstacles
from .visibility import Scene, is_obstacle_representation

CORNER_CONSTANT = 3


# -- vertex cover ------------------------------------------------------------

def vertex_cover(graph: Graph, k: int) -> Optional[frozenset]:
    """A vertex cover of size at most k, or None (bounded search tree)."""
    if k < 0:
        raise ValueError("k must be non-negative")

    def search(edges, budget):
        if not edges:
            return frozenset()
        if budget == 0:
            return None
        u, v = edges[0]
        for w in (u, v):
            rest = [e for e in edges if w not in e]
            sub = search(rest, budget - 1)
            if sub is not None:
                return sub | {w}
        return None

    return search(graph.sorted_edges(), k)


def min_vertex_cover(graph: Graph) -> frozenset:
    for k in itertools.count():
        cover = vertex_cover(graph, k)
        if cover is not None:
            return cover


@dataclass
class VcDecomposition:
    cover: frozenset
    types: dict                 # neighborhood (sorted tuple) -> sorted member list

    @property
    def k(self) -> int:
        return len(self.cover)


def vc_decomposition(graph: Graph, cover) -> VcDecomposition:
    cover = frozenset(cover)
    if not graph.is_vertex_cover(cover):
        raise ValueError("not a vertex cover")
    types = {}
    for v in graph.vertices:
        if v in cover:
            continue
        types.setdefault(tuple(sorted(graph.neighbors(v))), []).append(v)
    return VcDecomposition(cover, dict(sorted(types.items())))


def vc_obstacle_bound(k: int) -> int:
    return 1 + math.comb(k, 2) + k * 2 ** k


def _comb(xs) -> Polygon:
    """Base bar below the points with one thin tooth between consecutive xs."""
    lo, hi = xs[0] - 1, xs[-1] + 1
    tooth = Fraction(1, 8)
    top = Fraction(1, 4)
    ring = [point(lo, -2), point(hi, -2), point(hi, -1)]
    for a, b in reversed(list(zip(xs, xs[1:]))):
        c = Fraction(a + b, 2)
        ring += [point(c + tooth, -1), point(c + tooth, top), point(c - tooth, top), point(c - tooth, -1)]
    ring.append(point(lo, -1))
    return Polygon(ring)


def _perp(d):
    return Point(-d.y, d.x)


def vc_representation(graph: Graph, cover=None, max_attempts: int = 40) -> Scene:
    """Comb-based representation with at most 1 + C(k,2) + k 2^k obstacles.

    Non-cover vertices sit on a very flat cup, grouped by type; a comb
    under them blocks all pairs among them.  Cover vertices sit high on a
    cap.  Tiny triangles block non-adjacent cover pairs, and one triangle
    next to each cover vertex hides a whole type it is not adjacent to.
    """
    cover = min_vertex_cover(graph) if cover is None else frozenset(cover)
    dec = vc_decomposition(graph, cover)
    k = dec.k
    xs = {}
    cursor = 0
    clusters = []
    for members in dec.types.values():
        start = cursor
        for v in members:
            xs[v] = cursor
            cursor += 1
        clusters.append((start, cursor - 1))
        cursor += 3
    width = max(cursor - 4, 0)
    K = 64 * (width + 1) ** 2

    def cup(x):
        return point(x, Fraction(x * x, K))

    tops = sorted(cover)
    comb = _comb(sorted(xs.values())) if len(xs) >= 2 else None

    lift = 0
    for _ in range(max_attempts):
        H = 4 * (width + 2 * k + 4) + lift
        pos = {v: cup(x) for v, x in xs.items()}
        for j, v in enumerate(tops):
            s = 2 * j - (k - 1)
            pos[v] = point(Fraction(width, 2) + s, H - s * s)
        if collinear_triple([pos[v] for v in graph.vertices]) is not None:
            lift += 1
            continue
        lam = Fraction(1, 16)
        lam_t = Fraction(1, 4 * H)
        for _ in range(max_attempts):
            obstacles = [] if comb is None else [comb]
            for x, y in itertools.combinations(tops, 2):
                if graph.has_edge(x, y):
                    continue
                px, py = pos[x], pos[y]
                d = py - px
                mid = px + d.scaled(lam)
                off = _perp(d).scaled(lam / 4)
                obstacles.append(Polygon([mid + off, mid - off, px + d.scaled(2 * lam)]))
            for (nbhd, members), (s, e) in zip(dec.types.items(), clusters):
                pl, pr, pm = cup(s - 1), cup(e + 1), cup(Fraction(s + e, 2))
                for x in tops:
                    if x in nbhd:
                        continue
                    px = pos[x]
                    obstacles.append(Polygon([px + (pl - px).scaled(lam_t), px + (pr - px).scaled(lam_t),
                                              px + (pm - px).scaled(2 * lam_t)]))
            scene = Scene(pos, obstacles)
            if not scene.violations() and is_obstacle_representation(scene, graph, validate=False):
                return scene
            lam /= 2
            lam_t /= 2
        lift += 1
    raise GeometryError("comb construction failed to certify")


# -- planarization representation -----------------------------------------------

def random_positions(vertices, rng, size: int = 1000) -> dict:
    return {v: point(rng.randint(0, size), rng.randint(0, size)) for v in vertices}


def _general_drawing(graph: Graph, positions, seed, retries):
    rng = random.Random(seed)
    for _ in range(retries):
        pos = positions if positions is not None else random_positions(graph.vertices, rng)
        try:
            drawing = Drawing(graph, pos)
            arr = planarize(drawing)
            return drawing, arr
        except DrawingError:
            if positions is not None:
                raise
    raise DrawingError("could not find non-degenerate random positions")


def corner_count(scene: Scene) -> int:
    return sum(len(p.vertices) for p in scene.obstacles)


def corner_bound(graph: Graph) -> int:
    return CORNER_CONSTANT * (graph.m ** 2 + graph.n)


def _component_representation(graph, positions, seed, retries):
    if graph.n == 1:
        v = graph.vertices[0]
        pos = positions or {v: point(0, 0)}
        return Scene(dict(pos), [])
    drawing, arr = _general_drawing(graph, positions, seed, retries)
    inst = build_cover_instance(drawing, arr)
    return faces_to_obstacles(drawing, range(arr.num_faces), inst)


def planarization_representation(graph: Graph, positions=None, seed: int = 0,
                                 retries: int = 100) -> Scene:
    """One obstacle per face of a planarized straight-line drawing.

    Every face, the unbounded one included, is carved into a simply
    connected region and shrunk slightly; corners total at most
    ``CORNER_CONSTANT * (m^2 + n)`` for connected graphs.  Components of a
    disconnected graph are drawn in separate horizontal strips with a wide
    rectangle between consecutive strips.
    """
    comps = graph.components()
    if len(comps) <= 1:
        return _component_representation(graph, positions, seed, retries)
    points, obstacles = {}, []
    pitch = 3000
    for c, comp in enumerate(comps):
        sub = graph.induced(comp)
        local = None
        if positions is not None:
            local = {v: positions[v] for v in comp}
        scene = _component_representation(sub, local, seed + c, retries)
        shift = Point(Fraction(0), Fraction(pitch * c))
        if positions is not None and c:
            raise DrawingError("fixed positions are only supported for connected graphs")
        points.update({v: p + shift for v, p in scene.points.items()})
        obstacles += [Polygon([p + shift for p in o.vertices], check=False) for o in scene.obstacles]
        if c + 1 < len(comps):
            y0, y1 = pitch * c + 1600, pitch * c + 1900
            obstacles.append(Polygon([point(-600, y0), point(1600, y0), point(1600, y1), point(-600, y1)]))
    return Scene(points, obstacles)


# -- lower-bound drawing -------------------------------------------------------------

def _complete_drawing(points) -> Drawing:
    m = len(points)
    return Drawing(Graph.complete(m), {i: p for i, p in enumerate(points)})


def _crossings(points):
    """All intersection points of segments spanned by ``points`` (endpoints included)."""
    found = set(points)
    pairs = list(itertools.combinations(points, 2))
    for (a, b), (c, d) in itertools.combinations(pairs, 2):
        if {a, b} & {c, d}:
            continue
        hit = segments_intersect(Segment(a, b), Segment(c, d))
        if isinstance(hit, Point):
            found.add(hit)
    return found


def _face_polygon(arr: Arrangement, face) -> Polygon:
    ring = arr.face_ring(face)
    n = len(ring)
    ring = [ring[i] for i in range(n) if orient(ring[i - 1], ring[i], ring[(i + 1) % n]) != 0]
    return Polygon(ring, check=False)


def _condition_1(prev, pm) -> bool:
    pts = _crossings(prev)
    for i, pi in enumerate(prev, start=1):
        for z in pts:
            if (orient(pi, pm, z) > 0) != (z.x < i):
                return False
    return True


def _condition_2(arr: Arrangement, cup_points) -> bool:
    for f in arr.bounded_faces():
        poly = _face_polygon(arr, f)
        if not poly.is_convex() or upper_chain_edge_count(poly) != 2:
            continue
        vs = poly.vertices
        n = len(vs)
        left = min(range(n), key=lambda i: (vs[i].x, -vs[i].y))
        a, b = vs[left], vs[(left - 1) % n]     # leftmost upper edge, left to right
        for p in cup_points:
            if a.x < p.x < b.x and orient(a, b, p) < 0:
                return False
    return True


def _condition_3(points) -> bool:
    xs = {p.x for p in points}
    return not any(z.x in xs for z in _crossings(points) - set(points))


def cup_points(m: int) -> tuple:
    """Points p_1..p_m and their ordinates, with conditions 1-3 certified."""
    if m < 1:
        raise ValueError("m must be positive")
    ys = [Fraction(0), Fraction(0)][:m]
    pts = [point(i + 1, y) for i, y in enumerate(ys)]
    for mm in range(3, m + 1):
        y = 4 * ys[-1] + 4
        while True:
            pm = point(mm, y)
            cand = pts + [pm]
            if _condition_1(pts, pm) and _condition_3(cand):
                arr = planarize(_complete_drawing(cand))
                if _condition_2(arr, cand):
                    break
            y *= 2
        ys.append(y)
        pts.append(pm)
    return pts, ys


def verify_cap_claim(arr: Arrangement) -> bool:
    """Every inner face is convex and bounded from above by at most two edges."""
    for f in arr.bounded_faces():
        if f.holes:
            return False
        poly = _face_polygon(arr, f)
        if not poly.is_convex() or upper_chain_edge_count(poly) > 2:
            return False
    return True


@dataclass
class LowerBoundDrawing:
    m: int
    p: list
    y: list
    q: list
    epsilon: Fraction
    drawing: Drawing
    X: list                         # excluded pairs (labels of q_i, q_j with i, j even)
    isolated: Optional[int] = None
    arrangement: Arrangement = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return self.drawing.graph.n


def _dn_graph(m: int, extra: bool) -> tuple:
    labels = list(range(2 * m + (1 if extra else 0)))
    q = {i: m + i - 1 for i in range(1, m + 1)}
    X = [(q[i], q[j]) for i, j in itertools.combinations(range(2, m + 1, 2), 2)]
    edges = [e for e in itertools.combinations(range(2 * m), 2) if e not in set(X)]
    return Graph(labels, edges), X


def verify_nonedge_claim(lb: LowerBoundDrawing) -> bool:
    """Every face of D_n meets at most two segments of X."""
    arr = lb.arrangement if lb.arrangement is not None else planarize(lb.drawing)
    counts = {}
    for u, v in lb.X:
        for f in arr.stabbed_faces(lb.drawing.segment(u, v)):
            counts[f] = counts.get(f, 0) + 1
    return all(c <= 2 for c in counts.values())


def _isolated_point(pts) -> Point:
    x = max(p.x for p in pts) + 1
    y = min(p.y for p in pts) - 1
    while collinear_triple(pts + [point(x, y)]) is not None:
        y -= 1
    return point(x, y)


def lower_bound_drawing(n: int) -> LowerBoundDrawing:
    """Drawing D_n whose obstacle number is at least C(floor(n/4), 2) / 2.

    Odd n adds an isolated vertex to D_{n-1}.
    """
    if n < 4:
        raise ValueError("n must be at least 4")
    extra = n % 2 == 1
    m = (n - extra) // 2
    p, ys = cup_points(m)
    graph, X = _dn_graph(m, extra)
    eps = Fraction(1, 2)
    while True:
        q = [point(i, ys[i - 1] - eps) for i in range(1, m + 1)]
        pts = p + q
        finer = p + [point(i, ys[i - 1] - eps / 2) for i in range(1, m + 1)]
        if collinear_triple(pts) is None and crossing_signature(pts) == crossing_signature(finer):
            pos = {i: pt for i, pt in enumerate(pts)}
            if extra:
                pos[2 * m] = _isolated_point(pts)
            try:
                drawing = Drawing(graph, pos)
                arr = planarize(drawing)
            except DrawingError:
                drawing = None
            if drawing is not None:
                lb = LowerBoundDrawing(m, p, ys, q, eps, drawing, X, 2 * m if extra else None, arr)
                if verify_nonedge_claim(lb):
                    return lb
        eps /= 2


def cap_arrangement(m: int) -> Arrangement:
    """Planarization of D'_m (complete graph on the cup points)."""
    p, _ = cup_points(m)
    return planarize(_complete_drawing(p))
