"""Visibility graphs among polygonal obstacles and representation checks."""

from __future__ import annotations

import bisect
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

from .geometry import (
    Location,
    Polygon,
    collinear_triple,
    locate_in_ring,
)
from .graph import Graph


class SceneError(ValueError):
    """A scene violates one of its invariants; the message names it."""


@dataclass(eq=False)
class Scene:
    """Labeled points plus obstacles.

    ``container`` optionally bounds the scene from outside: visibility is
    then also blocked by the closed complement of the container's interior.
    """

    points: Mapping
    obstacles: list = field(default_factory=list)
    container: Optional[Polygon] = None
    general_position: bool = True
    graph: Optional[Graph] = None       # drawn edges, when the scene came from a drawing

    @property
    def labels(self) -> list:
        return sorted(self.points)

    def violations(self) -> list:
        found = []
        labels = self.labels
        pts = [self.points[v] for v in labels]
        if len(set(pts)) != len(pts):
            found.append("points pairwise distinct")
        elif self.general_position and collinear_triple(pts) is not None:
            i, j, k = collinear_triple(pts)
            found.append(f"points in general position (collinear: {labels[i]}, {labels[j]}, {labels[k]})")
        ints = _Integerized(self)
        for a, b in itertools.combinations(range(len(self.obstacles)), 2):
            if _intpolys_intersect(ints.polys[a], ints.polys[b]):
                found.append(f"obstacles pairwise disjoint (obstacles {a} and {b} meet)")
                break
        for v, p in zip(labels, ints.points):
            for k, poly in enumerate(ints.polys):
                x0, y0, x1, y1 = poly.bbox
                if x0 <= p[0] <= x1 and y0 <= p[1] <= y1 and \
                        locate_in_ring(p, poly.vertices) is not Location.OUTSIDE:
                    found.append(f"no point inside or on an obstacle (point {v} in obstacle {k})")
                    break
            if ints.container is not None and \
                    locate_in_ring(p, ints.container.vertices) is not Location.INSIDE:
                found.append(f"points inside the container (point {v})")
        return found

    def validate(self) -> None:
        found = self.violations()
        if found:
            raise SceneError(found[0])


class _IntPoly:
    __slots__ = ("vertices", "bbox", "edges")

    def __init__(self, verts):
        self.vertices = verts
        xs = [p[0] for p in verts]
        ys = [p[1] for p in verts]
        self.bbox = (min(xs), min(ys), max(xs), max(ys))
        n = len(verts)
        self.edges = [(verts[i], verts[(i + 1) % n]) for i in range(n)]


class _Integerized:
    """Scene coordinates scaled to integers by a common denominator."""

    def __init__(self, scene: Scene):
        labels = scene.labels
        coords = [c for v in labels for c in scene.points[v]]
        for poly in scene.obstacles:
            coords.extend(c for p in poly.vertices for c in p)
        if scene.container is not None:
            coords.extend(c for p in scene.container.vertices for c in p)
        den = 1
        for c in coords:
            d = Fraction(c).denominator
            den = den * d // math.gcd(den, d)

        def conv(p):
            return (int(p[0] * den), int(p[1] * den))

        self.points = [conv(scene.points[v]) for v in labels]
        self.polys = [_IntPoly([conv(p) for p in poly.vertices]) for poly in scene.obstacles]
        self.container = None if scene.container is None else \
            _IntPoly([conv(p) for p in scene.container.vertices])


def _intpolys_intersect(p: _IntPoly, q: _IntPoly) -> bool:
    ax0, ay0, ax1, ay1 = p.bbox
    bx0, by0, bx1, by1 = q.bbox
    if ax1 < bx0 or bx1 < ax0 or ay1 < by0 or by1 < ay0:
        return False
    idx = EdgeIndex(q.edges)
    if any(idx.touches(a, b) for a, b in p.edges):
        return True
    return (locate_in_ring(p.vertices[0], q.vertices) is not Location.OUTSIDE
            or locate_in_ring(q.vertices[0], p.vertices) is not Location.OUTSIDE)


class EdgeIndex:
    """Edges sorted by left x-extent for quick segment-touch queries."""

    def __init__(self, edges):
        items = []
        for a, b in edges:
            items.append((min(a[0], b[0]), max(a[0], b[0]), min(a[1], b[1]), max(a[1], b[1]), a, b))
        items.sort(key=lambda t: t[0])
        self.items = items
        self.xmins = [t[0] for t in items]

    def touches(self, a, b) -> bool:
        sx0, sx1 = (a[0], b[0]) if a[0] <= b[0] else (b[0], a[0])
        sy0, sy1 = (a[1], b[1]) if a[1] <= b[1] else (b[1], a[1])
        hi = bisect.bisect_right(self.xmins, sx1)
        ax, ay = a
        bx, by = b
        dx, dy = bx - ax, by - ay
        for k in range(hi):
            ex0, ex1, ey0, ey1, c, d = self.items[k]
            if ex1 < sx0 or ey1 < sy0 or ey0 > sy1:
                continue
            cx, cy = c
            qx, qy = d
            o1 = dx * (cy - ay) - dy * (cx - ax)
            o2 = dx * (qy - ay) - dy * (qx - ax)
            if (o1 > 0 and o2 > 0) or (o1 < 0 and o2 < 0):
                continue
            ex, ey = qx - cx, qy - cy
            o3 = ex * (ay - cy) - ey * (ax - cx)
            o4 = ex * (by - cy) - ey * (bx - cx)
            if (o3 > 0 and o4 > 0) or (o3 < 0 and o4 < 0):
                continue
            return True
        return False


def _blocker(scene: Scene):
    """Return (labels, blocked(i, j)) for a scene, using integer arithmetic."""
    ints = _Integerized(scene)
    obstacle_index = [(p.bbox, EdgeIndex(p.edges)) for p in ints.polys]
    container_index = EdgeIndex(ints.container.edges) if ints.container is not None else None
    pts = ints.points

    def blocked(i, j) -> bool:
        a, b = pts[i], pts[j]
        x0, x1 = min(a[0], b[0]), max(a[0], b[0])
        y0, y1 = min(a[1], b[1]), max(a[1], b[1])
        for (bx0, by0, bx1, by1), idx in obstacle_index:
            if bx1 < x0 or bx0 > x1 or by1 < y0 or by0 > y1:
                continue
            if idx.touches(a, b):
                return True
        if container_index is not None and container_index.touches(a, b):
            return True
        return False

    return scene.labels, blocked


def visibility_graph(scene: Scene, validate: bool = True) -> Graph:
    """Visibility graph: an edge wherever the closed segment avoids every obstacle."""
    if validate:
        scene.validate()
    labels, blocked = _blocker(scene)
    edges = [(labels[i], labels[j]) for i, j in itertools.combinations(range(len(labels)), 2)
             if not blocked(i, j)]
    return Graph(labels, edges)


def visibility_graph_bruteforce(scene: Scene) -> Graph:
    """Independent slow oracle: Fraction predicates, every edge, plus containment."""
    from .geometry import segment_hits_polygon, segments_touch

    labels = scene.labels
    edges = []
    for u, v in itertools.combinations(labels, 2):
        a, b = scene.points[u], scene.points[v]
        hit = any(segment_hits_polygon((a, b), poly) for poly in scene.obstacles)
        if not hit and scene.container is not None:
            hit = any(segments_touch(a, b, c, d) for c, d in scene.container.edges())
        if not hit:
            edges.append((u, v))
    return Graph(labels, edges)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    pair: Optional[tuple] = None
    kind: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "Yes"
        return f"No({self.kind}: {self.pair[0]}-{self.pair[1]})"


def is_obstacle_representation(scene: Scene, graph: Graph, validate: bool = True) -> Verdict:
    """Does the scene's visibility graph equal ``graph`` edge for edge?"""
    if sorted(scene.points) != list(graph.vertices):
        raise SceneError("label mismatch between scene points and graph vertices")
    vis = visibility_graph(scene, validate=validate)
    for e in sorted(graph.edges | vis.edges):
        if e in graph.edges and e not in vis.edges:
            return Verdict(False, e, "missing edge")
        if e in vis.edges and e not in graph.edges:
            return Verdict(False, e, "unblocked non-edge")
    return Verdict(True)


def scene_from_drawing(drawing, obstacles=()) -> Scene:
    return Scene(dict(drawing.position), list(obstacles), graph=drawing.graph)
