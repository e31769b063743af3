"""Planarization of straight-line drawings.

An :class:`Arrangement` is a half-edge structure over the nodes (drawing
vertices plus edge crossings) and arcs (crossing-free pieces of edges).
Faces are traced with the face on the left of every half-edge; bounded
faces therefore have counterclockwise outer walks, and the outer walk of
every connected component is attributed as a hole to the face around it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Mapping

from .geometry import (
    Location,
    Point,
    Segment,
    collinear_triple,
    locate_in_ring,
    on_segment,
    orient,
    segments_intersect,
    signed_area2,
)
from .graph import Graph


class DrawingError(ValueError):
    """A drawing (or drawing-derived structure) violates an invariant."""


@dataclass(frozen=True, eq=False)
class Drawing:
    graph: Graph
    position: Mapping

    def __post_init__(self):
        missing = [v for v in self.graph.vertices if v not in self.position]
        if missing:
            raise DrawingError(f"no position for vertices {missing}")
        pts = [self.position[v] for v in self.graph.vertices]
        if len(set(pts)) != len(pts):
            raise DrawingError("positions pairwise distinct: two vertices share a point")
        triple = collinear_triple(pts)
        if triple is not None:
            names = [self.graph.vertices[i] for i in triple]
            raise DrawingError(f"general position: vertices {names} are collinear")

    def point(self, v) -> Point:
        return self.position[v]

    def segment(self, u, v) -> Segment:
        return Segment(self.position[u], self.position[v])

    def edge_segments(self) -> list:
        return [(e, self.segment(*e)) for e in self.graph.sorted_edges()]

    def points(self) -> list:
        return [self.position[v] for v in self.graph.vertices]

    def __eq__(self, other):
        return (isinstance(other, Drawing) and self.graph == other.graph
                and all(self.position[v] == other.position[v] for v in self.graph.vertices))


# -- angular utilities --------------------------------------------------------

def _half(d) -> int:
    return 0 if d[1] > 0 or (d[1] == 0 and d[0] > 0) else 1


def compare_directions(d1, d2) -> int:
    """Order directions counterclockwise starting from the positive x-axis."""
    h1, h2 = _half(d1), _half(d2)
    if h1 != h2:
        return h1 - h2
    c = d1[0] * d2[1] - d1[1] * d2[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def same_direction(d1, d2) -> bool:
    return d1[0] * d2[1] - d1[1] * d2[0] == 0 and d1[0] * d2[0] + d1[1] * d2[1] > 0


def _between_reflex(d1, d, d2) -> bool:
    # sweep from d1 to d2 exceeds a half turn: d is inside unless it lies in
    # the closed complementary sweep from d2 to d1
    c2 = d2[0] * d[1] - d2[1] * d[0]
    c1 = d[0] * d1[1] - d[1] * d1[0]
    in_complement = c2 >= 0 and c1 >= 0
    if c2 == 0 and not same_direction(d2, d):
        in_complement = False
    if c1 == 0 and not same_direction(d1, d):
        in_complement = False
    return not in_complement


def ccw_between(d1, d, d2) -> bool:
    c12 = d1[0] * d2[1] - d1[1] * d2[0]
    c1 = d1[0] * d[1] - d1[1] * d[0]
    c2 = d[0] * d2[1] - d[1] * d2[0]
    if c12 > 0:
        return c1 > 0 and c2 > 0
    if c12 < 0:
        return _between_reflex(d1, d, d2)
    if same_direction(d1, d2):
        return not same_direction(d1, d)
    return c1 > 0


# -- the arrangement ------------------------------------------------------------

@dataclass(frozen=True)
class Face:
    index: int
    bounded: bool
    outer: tuple            # node indices of the outer walk (empty if unbounded)
    holes: tuple            # node-index walks of components inside this face
    outer_halfedges: tuple
    hole_halfedges: tuple

    def boundary_nodes(self) -> set:
        nodes = set(self.outer)
        for h in self.holes:
            nodes.update(h)
        return nodes

    def halfedges(self) -> tuple:
        return self.outer_halfedges + tuple(itertools.chain.from_iterable(self.hole_halfedges))


@dataclass(eq=False)
class Arrangement:
    """Half-edge structure built from nodes and crossing-free arcs.

    ``arcs[k] = (i, j, origin)``; half-edge ``2k`` runs i -> j and ``2k+1``
    runs j -> i.  ``origin`` records what the arc belongs to (a graph edge,
    or a tag for auxiliary arcs).
    """

    nodes: list
    arcs: list
    vertex_node: dict = field(default_factory=dict)
    faces: list = field(init=False)

    def __post_init__(self):
        self.node_index = {p: i for i, p in enumerate(self.nodes)}
        self._build()

    # structure -------------------------------------------------------------
    def he_origin(self, h) -> int:
        i, j, _ = self.arcs[h >> 1]
        return i if h % 2 == 0 else j

    def he_target(self, h) -> int:
        i, j, _ = self.arcs[h >> 1]
        return j if h % 2 == 0 else i

    def he_vector(self, h):
        a = self.nodes[self.he_origin(h)]
        b = self.nodes[self.he_target(h)]
        return (b[0] - a[0], b[1] - a[1])

    def _build(self):
        n = len(self.nodes)
        out = [[] for _ in range(n)]
        for k, (i, j, _) in enumerate(self.arcs):
            if i == j:
                raise DrawingError("zero-length arc")
            out[i].append(2 * k)
            out[j].append(2 * k + 1)
        for i in range(n):
            out[i].sort(key=cmp_to_key(lambda a, b: compare_directions(self.he_vector(a), self.he_vector(b))))
            for a, b in zip(out[i], out[i][1:]):
                if compare_directions(self.he_vector(a), self.he_vector(b)) == 0:
                    raise DrawingError(f"overlapping arcs at node {self.nodes[i]}")
        self.out = out
        pos = {}
        for i in range(n):
            for idx, h in enumerate(out[i]):
                pos[h] = idx
        nh = 2 * len(self.arcs)
        nxt = [0] * nh
        for h in range(nh):
            v = self.he_target(h)
            twin = h ^ 1
            lst = out[v]
            nxt[h] = lst[pos[twin] - 1]
        self.next = nxt

        # trace boundary walks
        he_walk = [-1] * nh
        walks = []
        for h in range(nh):
            if he_walk[h] != -1:
                continue
            walk = []
            g = h
            while he_walk[g] == -1:
                he_walk[g] = len(walks)
                walk.append(g)
                g = nxt[g]
            walks.append(tuple(walk))

        # connected components over nodes
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, j, _ in self.arcs:
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
        self.component_of = [find(i) for i in range(n)]
        self.num_components = len(set(self.component_of))

        bounded, hole_walks = [], []
        for w in walks:
            ring = [self.nodes[self.he_origin(h)] for h in w]
            if signed_area2(ring) > 0:
                bounded.append(w)
            else:
                hole_walks.append(w)
        isolated = [i for i in range(n) if not out[i]]

        # attribute each hole (component outer walk or isolated node) to the
        # innermost bounded walk of another component that contains it
        rings = [[self.nodes[self.he_origin(h)] for h in w] for w in bounded]
        areas = [signed_area2(r) for r in rings]
        holes_of = {bi: [] for bi in range(len(bounded))}
        unbounded_holes = []
        for hole in [("walk", w) for w in hole_walks] + [("node", i) for i in isolated]:
            if hole[0] == "walk":
                probe = self.he_origin(hole[1][0])
            else:
                probe = hole[1]
            comp = self.component_of[probe]
            best = None
            for bi, w in enumerate(bounded):
                if self.component_of[self.he_origin(w[0])] == comp:
                    continue
                if locate_in_ring(self.nodes[probe], rings[bi]) is Location.INSIDE:
                    if best is None or areas[bi] < areas[best]:
                        best = bi
            (holes_of[best] if best is not None else unbounded_holes).append(hole)

        def hole_parts(holes):
            node_walks, he_walks = [], []
            for kind, obj in holes:
                if kind == "walk":
                    node_walks.append(tuple(self.he_origin(h) for h in obj))
                    he_walks.append(obj)
                else:
                    node_walks.append((obj,))
                    he_walks.append(())
            return node_walks, he_walks

        raw = []
        for bi, w in enumerate(bounded):
            hn, hh = hole_parts(holes_of[bi])
            raw.append((True, tuple(self.he_origin(h) for h in w), tuple(hn), w, tuple(hh)))
        hn, hh = hole_parts(unbounded_holes)
        raw.append((False, (), tuple(hn), (), tuple(hh)))

        def canon(walk):
            if not walk:
                return ()
            k = walk.index(min(walk))
            return walk[k:] + walk[:k]

        def sort_key(item):
            is_bounded, outer, holes, _, _ = item
            nodes = set(outer)
            for hwalk in holes:
                nodes.update(hwalk)
            first = min(nodes) if nodes else -1
            return (first, not is_bounded, canon(outer), tuple(sorted(canon(h) for h in holes)))

        raw.sort(key=sort_key)
        self.faces = []
        self.he_face = [-1] * nh
        self.isolated_face = {}
        for idx, (is_bounded, outer, holes, ohe, hhe) in enumerate(raw):
            face = Face(idx, is_bounded, outer, holes, ohe, hhe)
            self.faces.append(face)
            for h in ohe:
                self.he_face[h] = idx
            for walk_he, walk_nodes in zip(hhe, holes):
                for h in walk_he:
                    self.he_face[h] = idx
                if not walk_he:
                    self.isolated_face[walk_nodes[0]] = idx
        self.unbounded_face = next(f.index for f in self.faces if not f.bounded)

    # queries ---------------------------------------------------------------
    @property
    def num_nodes(self) -> int:
        return len(self.nodes)

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    def bounded_faces(self) -> list:
        return [f for f in self.faces if f.bounded]

    def face_ring(self, face) -> list:
        f = self.faces[face] if isinstance(face, int) else face
        return [self.nodes[i] for i in f.outer]

    def arc_segment(self, k) -> Segment:
        i, j, _ = self.arcs[k]
        return Segment(self.nodes[i], self.nodes[j])

    def face_of_wedge(self, node: int, d):
        """Face occupying direction ``d`` right next to ``node``.

        Returns ``None`` when ``d`` points along an arc.
        """
        lst = self.out[node]
        if not lst:
            return self.isolated_face[node]
        vecs = [self.he_vector(h) for h in lst]
        for v in vecs:
            if same_direction(v, d):
                return None
        if len(lst) == 1:
            return self.he_face[lst[0]]
        for k in range(len(lst)):
            if ccw_between(vecs[k], d, vecs[(k + 1) % len(lst)]):
                return self.he_face[lst[k]]
        raise AssertionError("direction not located in any wedge")

    def locate(self, p):
        """Face index containing point p, or ``None`` when p is on an arc or node."""
        p = Point(Fraction(p[0]), Fraction(p[1]))
        if p in self.node_index:
            return None
        for k in range(len(self.arcs)):
            a, b = self.arc_segment(k)
            if on_segment(p, a, b):
                return None
        best = None
        best_area = None
        for f in self.faces:
            if not f.bounded:
                continue
            ring = self.face_ring(f)
            if locate_in_ring(p, ring) is Location.INSIDE:
                area = signed_area2(ring)
                if best is None or area < best_area:
                    best, best_area = f.index, area
        return self.unbounded_face if best is None else best

    def stabbed_faces(self, s) -> set:
        """Faces whose interior meets the open segment ``s``.

        Both endpoints of ``s`` must be nodes of the arrangement.
        """
        a, b = Point(*s[0]), Point(*s[1])
        ia, ib = self.node_index[a], self.node_index[b]
        d = (b[0] - a[0], b[1] - a[1])
        use_x = d[0] != 0

        def param(z):
            return Fraction(z[0] - a[0]) / d[0] if use_x else Fraction(z[1] - a[1]) / d[1]

        events = {Fraction(0): ("node", ia), Fraction(1): ("node", ib)}
        seg = Segment(a, b)
        for k in range(len(self.arcs)):
            i, j, _ = self.arcs[k]
            hit = segments_intersect(seg, Segment(self.nodes[i], self.nodes[j]))
            if hit is None:
                continue
            if isinstance(hit, Segment):
                for z in hit:
                    events[param(z)] = ("node", self.node_index[z])
                continue
            if hit == self.nodes[i]:
                events[param(hit)] = ("node", i)
            elif hit == self.nodes[j]:
                events[param(hit)] = ("node", j)
            else:
                events.setdefault(param(hit), ("arc", k))
        faces = set()
        for t in sorted(events):
            if t == 1:
                break
            kind, obj = events[t]
            if kind == "node":
                f = self.face_of_wedge(obj, d)
            else:
                i, j, _ = self.arcs[obj]
                pi, pj = self.nodes[i], self.nodes[j]
                c = (pj[0] - pi[0]) * d[1] - (pj[1] - pi[1]) * d[0]
                f = self.he_face[2 * obj if c > 0 else 2 * obj + 1]
            if f is not None:
                faces.add(f)
        return faces

    def face_arc_count(self, face) -> int:
        return len(self.faces[face].halfedges())

    def euler_ok(self) -> bool:
        return self.num_nodes - self.num_arcs + self.num_faces == 1 + self.num_components


def segments_arrangement(segments, extra_points=(), origins=None) -> tuple:
    """Split segments at their mutual crossings.

    Returns ``(nodes, arcs)`` ready for :class:`Arrangement`.  Segments may
    meet at endpoints or cross; collinear overlaps and more than two
    segments through a crossing are rejected.
    """
    segs = [Segment(Point(*s[0]), Point(*s[1])) for s in segments]
    origins = list(origins) if origins is not None else list(range(len(segs)))
    on_seg = [set(s) for s in segs]
    through = {}
    for i in range(len(segs)):
        a, b = segs[i]
        ax0, ax1 = min(a.x, b.x), max(a.x, b.x)
        ay0, ay1 = min(a.y, b.y), max(a.y, b.y)
        for j in range(i + 1, len(segs)):
            c, d = segs[j]
            if max(c.x, d.x) < ax0 or min(c.x, d.x) > ax1 or max(c.y, d.y) < ay0 or min(c.y, d.y) > ay1:
                continue
            hit = segments_intersect(segs[i], segs[j])
            if hit is None:
                continue
            if isinstance(hit, Segment):
                raise DrawingError(f"segments {origins[i]} and {origins[j]} overlap")
            shared_end = hit in segs[i] and hit in segs[j]
            if shared_end:
                continue
            if hit in segs[i] or hit in segs[j]:
                raise DrawingError(f"vertex on foreign edge: {hit} touches {origins[i]} and {origins[j]}")
            on_seg[i].add(hit)
            on_seg[j].add(hit)
            through.setdefault(hit, set()).update((i, j))
    for p, ss in through.items():
        if len(ss) > 2:
            names = sorted(origins[s] for s in ss)
            raise DrawingError(f"three segments through one point {p}: {names}")
    nodes = sorted(set(itertools.chain.from_iterable(on_seg)) | set(Point(*p) for p in extra_points))
    index = {p: i for i, p in enumerate(nodes)}
    arcs = []
    for s, pts in zip(range(len(segs)), on_seg):
        chain = sorted(pts)
        for p, q in zip(chain, chain[1:]):
            arcs.append((index[p], index[q], origins[s]))
    return nodes, arcs


def planarize(drawing: Drawing) -> Arrangement:
    """Planarization of a drawing: crossings become nodes, edges split into arcs."""
    es = drawing.edge_segments()
    pts = drawing.points()
    for (u, v), (a, b) in es:
        for w in drawing.graph.vertices:
            if w not in (u, v) and on_segment(drawing.position[w], a, b):
                raise DrawingError(f"vertex on foreign edge: vertex {w} lies on edge {(u, v)}")
    nodes, arcs = segments_arrangement([s for _, s in es], pts, [e for e, _ in es])
    arr = Arrangement(nodes, arcs)
    arr.vertex_node = {v: arr.node_index[drawing.position[v]] for v in drawing.graph.vertices}
    arr.drawing = drawing
    return arr


def stabbed_faces(s, arr: Arrangement) -> set:
    return arr.stabbed_faces(s)


def crossing_signature(points) -> tuple:
    """Combinatorial crossing structure of all segments spanned by ``points``.

    For every segment (i, j) the list of segments crossing its interior, in
    order from i to j.  Concurrent triples and touching configurations are
    recorded as such so that any degeneracy changes the signature.
    """
    pts = [Point(*p) for p in points]
    pairs = list(itertools.combinations(range(len(pts)), 2))
    hits = {pr: [] for pr in pairs}
    for x, y in itertools.combinations(pairs, 2):
        if set(x) & set(y):
            continue
        a, b = pts[x[0]], pts[x[1]]
        c, d = pts[y[0]], pts[y[1]]
        o1, o2, o3, o4 = orient(a, b, c), orient(a, b, d), orient(c, d, a), orient(c, d, b)
        if o1 * o2 > 0 or o3 * o4 > 0:
            continue
        if 0 in (o1, o2, o3, o4):
            hits[x].append((None, y))
            hits[y].append((None, x))
            continue
        p = segments_intersect(Segment(a, b), Segment(c, d))
        hits[x].append((p, y))
        hits[y].append((p, x))
    sig = []
    for pr in pairs:
        a = pts[pr[0]]
        lst = hits[pr]
        if any(p is None for p, _ in lst):
            sig.append((pr, "degenerate", tuple(sorted(y for _, y in lst))))
            continue
        lst.sort(key=lambda item: abs(item[0][0] - a[0]) + abs(item[0][1] - a[1]))
        order = []
        for k, (p, y) in enumerate(lst):
            tie = k > 0 and lst[k - 1][0] == p
            order.append((y, tie))
        sig.append((pr, tuple(order)))
    return tuple(sig)
