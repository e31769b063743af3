"""Turning faces of an arrangement into obstacle polygons.

A face with holes (or the unbounded face) is not simply connected, so it
cannot be an obstacle as is.  :func:`carve` adds a bounding box and one
slit from the lowest node of every connected component down to the first
thing below it.  All slits share one steep direction, chosen so that no
slit runs along a line through two nodes.  Every face of the carved
arrangement is simply connected and has a single boundary walk; :func:`offset_ring`
pushes that walk a little into the face, which yields a simple polygon
strictly inside the face with one corner per walk position.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .arrangement import Arrangement
from .geometry import (
    GeometryError,
    Point,
    Polygon,
    Segment,
    l1_direction,
    on_segment,
    segments_intersect,
    segments_touch,
)

SLIT = "slit"
BOX = "box"


@dataclass
class Carved:
    base: Arrangement
    arr: Arrangement
    face_map: dict          # base face index -> carved face index
    box: tuple


def _slit_direction(nodes, tops):
    """Downward direction (delta, -1) along which no top node sees another node."""
    for k in itertools.count(3):
        for delta in ((Fraction(0),) if k == 3 else ()) + (Fraction(1, k), Fraction(-1, k)):
            if all((w.x - v.x) + delta * (w.y - v.y) != 0 or w == v
                   for v in tops for w in nodes):
                return Point(delta, Fraction(-1))


def _drop_hit(arr: Arrangement, v: Point, far: Point, isolated):
    """First point after v on the segment v-far, and the arc to split (if any)."""
    best = None
    best_arc = None
    ray = Segment(v, far)

    def key(z):
        return v.y - z.y

    for k, (i, j, _) in enumerate(arr.arcs):
        p, q = arr.nodes[i], arr.nodes[j]
        hit = segments_intersect(ray, Segment(p, q))
        if hit is None:
            continue
        if isinstance(hit, Segment):
            z = min(hit, key=key)
        else:
            z = hit
        if z == v:
            continue
        if best is None or key(z) < key(best):
            best = z
            best_arc = None if z in (p, q) else k
    for w in isolated:
        pw = arr.nodes[w]
        if pw != v and on_segment(pw, v, far) and (best is None or key(pw) < key(best)):
            best, best_arc = pw, None
    return best, best_arc


def carve(arr: Arrangement) -> Carved:
    nodes = list(arr.nodes)
    xs = [p.x for p in nodes]
    ys = [p.y for p in nodes]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    margin = max(x1 - x0, y1 - y0, Fraction(1)) / 2
    bl = Point(x0 - margin, y0 - margin)
    br = Point(x1 + margin, y0 - margin)
    tr = Point(x1 + margin, y1 + margin)
    tl = Point(x0 - margin, y1 + margin)

    lowest = {}
    for i, p in enumerate(nodes):
        c = arr.component_of[i]
        if c not in lowest or (p.y, p.x) < (nodes[lowest[c]].y, nodes[lowest[c]].x):
            lowest[c] = i
    isolated = [i for i in range(len(nodes)) if not arr.out[i]]

    d = _slit_direction(nodes, [nodes[v] for v in lowest.values()])
    splits = {k: set() for k in range(len(arr.arcs))}
    bottom = {bl, br}
    slits = []
    for c in sorted(lowest, key=lambda c: lowest[c]):
        v = lowest[c]
        pv = nodes[v]
        far = Point(pv.x + d.x * (pv.y - bl.y), bl.y)
        z, k = _drop_hit(arr, pv, far, isolated)
        if z is None:
            z = far
            bottom.add(z)
        elif k is not None:
            splits[k].add(z)
        slits.append((pv, z))

    index = {p: i for i, p in enumerate(nodes)}

    def node(p):
        if p not in index:
            index[p] = len(nodes)
            nodes.append(p)
        return index[p]

    arcs = []
    piece_of = {}
    for k, (i, j, origin) in enumerate(arr.arcs):
        chain = sorted({arr.nodes[i], arr.nodes[j]} | splits[k])
        first = len(arcs)
        for p, q in zip(chain, chain[1:]):
            arcs.append((node(p), node(q), ("arc", k, origin)))
        piece_of[k] = first
    for p, q in slits:
        arcs.append((node(p), node(q), (SLIT,)))
    chain = sorted(bottom)
    for p, q in zip(chain, chain[1:]):
        arcs.append((node(p), node(q), (BOX,)))
    box_first = len(arcs) - (len(chain) - 1)
    for p, q in ((br, tr), (tl, tr), (bl, tl)):
        arcs.append((node(min(p, q)), node(max(p, q)), (BOX,)))

    carved = Arrangement(nodes, arcs)
    face_map = {}
    for f in arr.faces:
        hes = f.halfedges()
        if hes:
            h = hes[0]
            g = 2 * piece_of[h >> 1] + (h & 1)
            face_map[f.index] = carved.he_face[g]
        else:
            face_map[f.index] = carved.he_face[2 * box_first]
    for f in face_map.values():
        if carved.faces[f].holes:
            raise GeometryError("carving left a face with holes")
    return Carved(arr, carved, face_map, (bl, br, tr, tl))


def _left_normal(d):
    return Point(-d[1], d[0])


def offset_ring(arr: Arrangement, face: int, t) -> list:
    """Corners of the boundary walk of ``face`` pushed into the face by ``t``."""
    walk = arr.faces[face].outer_halfedges
    n = len(walk)
    ring = []
    for idx in range(n):
        h = walk[idx]
        v = arr.nodes[arr.he_origin(h)]
        a = arr.nodes[arr.he_origin(walk[idx - 1])]
        b = arr.nodes[arr.he_target(h)]
        ua = l1_direction(v, a)
        ub = l1_direction(v, b)
        turn = ub[0] * ua[1] - ub[1] * ua[0]
        if a == b:
            w = Point(-ua[0], -ua[1])
        elif turn > 0:
            w = Point(ua[0] + ub[0], ua[1] + ub[1])
        elif turn < 0:
            w = Point(-ua[0] - ub[0], -ua[1] - ub[1])
        else:
            w = _left_normal(ub)
        ring.append(Point(v.x + t * w.x, v.y + t * w.y))
    return ring


def _walk_arcs(arr: Arrangement, face: int) -> list:
    return [arr.arc_segment(h >> 1) for h in arr.faces[face].outer_halfedges]


def ring_certified(arr: Arrangement, face: int, ring: list) -> bool:
    """Exact check that ``ring`` is a simple polygon strictly inside ``face``."""
    try:
        Polygon(ring)
    except GeometryError:
        return False
    arcs = _walk_arcs(arr, face)
    n = len(ring)
    for i in range(n):
        a, b = ring[i], ring[(i + 1) % n]
        for c, d in arcs:
            if segments_touch(a, b, c, d):
                return False
    h0 = arr.faces[face].outer_halfedges[0]
    v0 = arr.nodes[arr.he_origin(h0)]
    for c, d in arcs:
        if v0 in (c, d):
            continue
        if segments_touch(v0, ring[0], c, d):
            return False
    return True


def initial_offset(arr: Arrangement, face: int) -> Fraction:
    lengths = [abs(c.x - d.x) + abs(c.y - d.y) for c, d in _walk_arcs(arr, face)]
    return Fraction(min(lengths)) / 8


def face_polygon(arr: Arrangement, face: int, t=None, max_halvings: int = 80):
    """Certified offset polygon for a (simply connected) face.

    Returns ``(polygon, t)`` with the offset actually used.
    """
    t = initial_offset(arr, face) if t is None else Fraction(t)
    for _ in range(max_halvings):
        ring = offset_ring(arr, face, t)
        if ring_certified(arr, face, ring):
            return Polygon(ring, check=False), t
        t /= 2
    raise GeometryError(f"could not certify an obstacle polygon for face {face}")
