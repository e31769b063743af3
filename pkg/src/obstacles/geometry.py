"""Exact rational geometry: points, segments, simple polygons and predicates.

Every coordinate is a :class:`fractions.Fraction` (plain ``int`` values are
accepted by the predicates too, which keeps the hot loops fast when a caller
has already cleared denominators).  Nothing here ever rounds.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

Scalar = Fraction


def scalar(value) -> Fraction:
    """Coerce ``int``, ``str`` (``"3/2"``) or ``Fraction`` to a canonical Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact coordinates")
    return Fraction(value)


def format_scalar(value) -> str:
    return str(scalar(value))


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    def __add__(self, other):  # type: ignore[override]
        return Point(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Point(self.x - other[0], self.y - other[1])

    def scaled(self, f) -> "Point":
        return Point(self.x * f, self.y * f)

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def point(x, y) -> Point:
    return Point(scalar(x), scalar(y))


class Segment(NamedTuple):
    a: Point
    b: Point


def segment(a, b) -> Segment:
    a, b = point(*a), point(*b)
    if a == b:
        raise ValueError("segment endpoints must differ")
    return Segment(a, b)


class Location(enum.Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


class GeometryError(ValueError):
    """Raised when a geometric precondition (simplicity, convexity, ...) fails."""


# -- predicates -------------------------------------------------------------

def cross(ax, ay, bx, by):
    return ax * by - ay * bx


def orient(a, b, c) -> int:
    """Sign of the turn a -> b -> c: +1 left, 0 collinear, -1 right."""
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (d > 0) - (d < 0)


def on_segment(p, a, b) -> bool:
    """True iff p lies on the closed segment ab."""
    if orient(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segments_touch(a, b, c, d) -> bool:
    """Closed segments ab and cd share at least one point."""
    if (max(a[0], b[0]) < min(c[0], d[0]) or max(c[0], d[0]) < min(a[0], b[0])
            or max(a[1], b[1]) < min(c[1], d[1]) or max(c[1], d[1]) < min(a[1], b[1])):
        return False
    d1 = orient(a, b, c)
    d2 = orient(a, b, d)
    if d1 == d2 != 0:
        return False
    d3 = orient(c, d, a)
    d4 = orient(c, d, b)
    if d3 == d4 != 0:
        return False
    # collinear pieces reach here only with overlapping bounding boxes
    return True


def segments_cross_properly(a, b, c, d) -> bool:
    """Interiors cross in a single point that is not an endpoint of either."""
    d1 = orient(a, b, c)
    d2 = orient(a, b, d)
    d3 = orient(c, d, a)
    d4 = orient(c, d, b)
    return d1 * d2 < 0 and d3 * d4 < 0


def line_intersection(a, b, c, d) -> Point:
    """Intersection of the (non-parallel) lines ab and cd."""
    rx, ry = b[0] - a[0], b[1] - a[1]
    sx, sy = d[0] - c[0], d[1] - c[1]
    den = rx * sy - ry * sx
    if den == 0:
        raise GeometryError("parallel lines")
    t = Fraction((c[0] - a[0]) * sy - (c[1] - a[1]) * sx) / den
    return Point(Fraction(a[0]) + t * rx, Fraction(a[1]) + t * ry)


def segments_intersect(s: Segment, t: Segment):
    """Exact intersection of two closed segments.

    Returns ``None`` when disjoint, a :class:`Point` for a single common
    point, or a :class:`Segment` (lexicographically ordered) for a
    collinear overlap of positive length.
    """
    a, b = s
    c, d = t
    d1 = orient(a, b, c)
    d2 = orient(a, b, d)
    if d1 == 0 and d2 == 0:
        lo = max(min(a, b), min(c, d))
        hi = min(max(a, b), max(c, d))
        if lo > hi:
            return None
        if lo == hi:
            return Point(*lo)
        return Segment(Point(*lo), Point(*hi))
    if d1 * d2 > 0:
        return None
    d3 = orient(c, d, a)
    d4 = orient(c, d, b)
    if d3 * d4 > 0:
        return None
    if d1 == 0:
        return Point(*c)
    if d2 == 0:
        return Point(*d)
    if d3 == 0:
        return Point(*a)
    if d4 == 0:
        return Point(*b)
    return line_intersection(a, b, c, d)


def signed_area2(pts: Sequence) -> Fraction:
    """Twice the signed area (positive for counterclockwise order)."""
    total = 0
    n = len(pts)
    for i in range(n):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % n]
        total += x0 * y1 - x1 * y0
    return total


def locate_in_ring(p, ring: Sequence) -> Location:
    """Crossing-number location of p relative to a closed ring.

    The ring may be weakly simple (edges traversed twice, as in the boundary
    walk of a face with a dangling edge); such doubled edges cancel.
    """
    n = len(ring)
    px, py = p
    inside = False
    for i in range(n):
        a = ring[i]
        b = ring[(i + 1) % n]
        if on_segment(p, a, b):
            return Location.BOUNDARY
        ay, by = a[1], b[1]
        if (ay > py) != (by > py):
            # sign of (x_cross - px) * (by - ay), no division
            num = (a[0] - px) * (by - ay) + (py - ay) * (b[0] - a[0])
            if (num > 0) == (by > ay):
                inside = not inside
    return Location.INSIDE if inside else Location.OUTSIDE


# -- polygons ---------------------------------------------------------------

def _is_simple_ring(pts: Sequence) -> bool:
    n = len(pts)
    if len(set(pts)) != n:
        return False
    edges = [(pts[i], pts[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        a, b = edges[i]
        for j in range(i + 1, n):
            c, d = edges[j]
            if j == i + 1 or (i == 0 and j == n - 1):
                # adjacent edges may only share their common vertex
                shared = b if j == i + 1 else a
                other_end = d if j == i + 1 else c
                own_end = a if j == i + 1 else b
                if orient(own_end, shared, other_end) == 0:
                    # collinear adjacent edges folding back onto each other
                    if on_segment(other_end, own_end, shared) or on_segment(own_end, shared, other_end):
                        return False
                continue
            if segments_touch(a, b, c, d):
                return False
    return True


class Polygon:
    """A simple polygon stored counterclockwise.

    Construction validates the invariants (at least three vertices, no
    self-intersection) and reverses clockwise input.
    """

    __slots__ = ("vertices", "_bbox")

    def __init__(self, vertices: Iterable, check: bool = True):
        pts = [p if isinstance(p, Point) else point(*p) for p in vertices]
        if len(pts) < 3:
            raise GeometryError("polygon needs at least three vertices")
        area = signed_area2(pts)
        if area == 0:
            raise GeometryError("polygon has zero area")
        if area < 0:
            pts.reverse()
        if check and not _is_simple_ring(pts):
            raise GeometryError("polygon is not simple")
        self.vertices = tuple(pts)
        xs = [p.x for p in pts]
        ys = [p.y for p in pts]
        self._bbox = (min(xs), min(ys), max(xs), max(ys))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polygon) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return "Polygon([" + ", ".join(str(p) for p in self.vertices) + "])"

    @property
    def bbox(self):
        return self._bbox

    def edges(self):
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def area(self) -> Fraction:
        return Fraction(signed_area2(self.vertices)) / 2

    def is_convex(self) -> bool:
        n = len(self.vertices)
        return all(orient(self.vertices[i - 1], self.vertices[i], self.vertices[(i + 1) % n]) > 0
                   for i in range(n))


def unit_square() -> Polygon:
    return Polygon([(0, 0), (1, 0), (1, 1), (0, 1)])


def point_in_polygon(p, poly: Polygon) -> Location:
    return locate_in_ring(p, poly.vertices)


def segment_hits_polygon(s, poly: Polygon) -> bool:
    """Closed segment meets the closed polygon region (touching counts)."""
    a, b = s
    x0, y0, x1, y1 = poly.bbox
    if (max(a[0], b[0]) < x0 or min(a[0], b[0]) > x1
            or max(a[1], b[1]) < y0 or min(a[1], b[1]) > y1):
        return False
    for c, d in poly.edges():
        if segments_touch(a, b, c, d):
            return True
    return locate_in_ring(a, poly.vertices) is not Location.OUTSIDE


def polygons_intersect(p: Polygon, q: Polygon) -> bool:
    """Closed polygon regions share a point."""
    ax0, ay0, ax1, ay1 = p.bbox
    bx0, by0, bx1, by1 = q.bbox
    if ax1 < bx0 or bx1 < ax0 or ay1 < by0 or by1 < ay0:
        return False
    for a, b in p.edges():
        for c, d in q.edges():
            if segments_touch(a, b, c, d):
                return True
    return (locate_in_ring(p.vertices[0], q.vertices) is not Location.OUTSIDE
            or locate_in_ring(q.vertices[0], p.vertices) is not Location.OUTSIDE)


def upper_chain_edge_count(poly: Polygon) -> int:
    """Edges on the upper chain of a convex polygon.

    The chain runs from the leftmost vertex to the rightmost one over the
    top (topmost representatives when an extreme side is vertical).  A
    convex polygon is k-cap free exactly when this count is at most k - 2.
    """
    if not poly.is_convex():
        raise GeometryError("upper chain is only defined for convex polygons")
    vs = poly.vertices
    n = len(vs)
    left = min(range(n), key=lambda i: (vs[i].x, -vs[i].y))
    right = max(range(n), key=lambda i: (vs[i].x, vs[i].y))
    # counterclockwise order walks from the right end over the top to the left
    return (left - right) % n


def classify_vertices(poly: Polygon) -> dict:
    """Count convex and reflex corners (an auditing aid)."""
    vs = poly.vertices
    n = len(vs)
    counts = {"convex": 0, "reflex": 0}
    for i in range(n):
        if orient(vs[i - 1], vs[i], vs[(i + 1) % n]) > 0:
            counts["convex"] += 1
        else:
            counts["reflex"] += 1
    return counts


def convex_hull(points: Iterable) -> Polygon:
    """Strict convex hull (collinear boundary points dropped), counterclockwise."""
    pts = sorted(set(p if isinstance(p, Point) else point(*p) for p in points))
    if len(pts) < 3:
        raise GeometryError("hull needs at least three points")

    def half(seq):
        chain = []
        for p in seq:
            while len(chain) >= 2 and orient(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise GeometryError("points are collinear")
    return Polygon(hull, check=False)


def _direction_key(dx, dy):
    if dx == 0:
        return None
    return Fraction(dy) / dx


def collinear_triple(points: Sequence):
    """Return some collinear triple of indices, or ``None``."""
    pts = list(points)
    n = len(pts)
    if len(set(pts)) != n:
        seen = {}
        for i, p in enumerate(pts):
            if p in seen:
                return (seen[p], i, i)
            seen[p] = i
    for i in range(n):
        slopes = {}
        px, py = pts[i]
        for j in range(i + 1, n):
            key = _direction_key(pts[j][0] - px, pts[j][1] - py)
            if key in slopes:
                return (i, slopes[key], j)
            slopes[key] = j
    return None


def is_general_position(points: Sequence) -> bool:
    """No three of the points lie on a common line (and none repeat)."""
    return collinear_triple(points) is None


def l1_direction(a, b) -> Point:
    """Direction from a to b scaled to unit L1 length (rational)."""
    dx = Fraction(b[0] - a[0])
    dy = Fraction(b[1] - a[1])
    norm = abs(dx) + abs(dy)
    return Point(dx / norm, dy / norm)


def bbox_of(points: Iterable):
    pts = list(points)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return min(xs), min(ys), max(xs), max(ys)
