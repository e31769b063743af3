"""Order types, radial systems, blocking intervals and tangent curves.

Duality used throughout: the point (a, b) maps to the line y = a x - b and
the line y = m x + c maps to the point (m, -c).  The upper tangent of a
convex obstacle with slope x dualizes to the point (x, tau(x)) where
tau is the lower envelope of the lines dual to the obstacle's vertices;
the lower tangents give the upper envelope beta.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Mapping

from .geometry import GeometryError, Point, Polygon, cross, orient, point, segments_touch
from .graph import Graph


def _labeled(points) -> dict:
    if isinstance(points, Mapping):
        return dict(points)
    return {i: p for i, p in enumerate(points)}


# -- chirotope ---------------------------------------------------------------------

def _perm_sign(seq) -> int:
    sign = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


class Chirotope:
    """Orientation sign of every triple of labels."""

    def __init__(self, labels, signs: dict):
        self.labels = tuple(sorted(labels))
        self._signs = signs          # sorted triple -> sign

    @property
    def n(self) -> int:
        return len(self.labels)

    def __call__(self, a, b, c) -> int:
        if len({a, b, c}) < 3:
            return 0
        key = tuple(sorted((a, b, c)))
        return self._signs[key] * _perm_sign((a, b, c))

    def __eq__(self, other):
        return isinstance(other, Chirotope) and self._signs == other._signs

    def __hash__(self):
        return hash(tuple(sorted(self._signs.items())))


def chirotope(points) -> Chirotope:
    pts = _labeled(points)
    signs = {}
    for t in itertools.combinations(sorted(pts), 3):
        s = orient(*(pts[v] for v in t))
        if s == 0:
            raise GeometryError(f"collinear triple {t}")
        signs[t] = s
    return Chirotope(pts, signs)


# -- radial systems ----------------------------------------------------------------

def _clockwise_from_up(d):
    """Sort key pieces: half 0 covers straight up through the right side."""
    dx, dy = d
    return 0 if dx > 0 or (dx == 0 and dy > 0) else 1


def _cw_cmp(d1, d2) -> int:
    h1, h2 = _clockwise_from_up(d1), _clockwise_from_up(d2)
    if h1 != h2:
        return h1 - h2
    c = cross(d1[0], d1[1], d2[0], d2[1])
    return 1 if c > 0 else (-1 if c < 0 else 0)


def radial_order(v, pts: dict) -> list:
    """Other labels clockwise around v, starting from straight up."""
    pv = pts[v]
    others = [u for u in sorted(pts) if u != v]
    dirs = {u: (pts[u][0] - pv[0], pts[u][1] - pv[1]) for u in others}
    return sorted(others, key=cmp_to_key(lambda a, b: _cw_cmp(dirs[a], dirs[b])))


@dataclass(frozen=True)
class RadialSystem:
    orders: dict

    def __getitem__(self, v):
        return self.orders[v]

    def equivalent(self, other) -> bool:
        """Same cyclic orders (rotation allowed)."""
        if set(self.orders) != set(other.orders):
            return False
        return all(same_cycle(self.orders[v], other.orders[v]) for v in self.orders)


def same_cycle(a, b) -> bool:
    a, b = list(a), list(b)
    if len(a) != len(b) or set(a) != set(b):
        return False
    if not a:
        return True
    k = b.index(a[0])
    return a == b[k:] + b[:k]


def radial_system(points) -> RadialSystem:
    pts = _labeled(points)
    chirotope(pts)      # rejects collinear triples
    return RadialSystem({v: radial_order(v, pts) for v in sorted(pts)})


def radial_from_chirotope(chi: Chirotope) -> RadialSystem:
    """Clockwise cyclic orders recovered from orientation signs alone."""
    orders = {}
    for v in chi.labels:
        others = [u for u in chi.labels if u != v]
        if not others:
            orders[v] = []
            continue
        u0 = others[0]
        right = [w for w in others[1:] if chi(v, u0, w) < 0]
        left = [w for w in others[1:] if chi(v, u0, w) > 0]

        def cmp(a, b):
            return 1 if chi(v, a, b) > 0 else -1

        orders[v] = [u0] + sorted(right, key=cmp_to_key(cmp)) + sorted(left, key=cmp_to_key(cmp))
    return RadialSystem(orders)


# -- blocking intervals ---------------------------------------------------------------

def _require_convex(obstacles):
    for k, o in enumerate(obstacles):
        if not o.is_convex():
            raise GeometryError(f"obstacle {k} is not convex")


def ray_hits_convex(v, target, poly: Polygon) -> bool:
    """Does the ray from v through target meet the closed convex polygon (v outside)?"""
    r = (target[0] - v[0], target[1] - v[1])
    dirs = [(w.x - v[0], w.y - v[1]) for w in poly.vertices]
    # extreme directions of the cone the polygon subtends from v
    lo = hi = dirs[0]
    for d in dirs[1:]:
        if cross(lo[0], lo[1], d[0], d[1]) < 0:
            lo = d
        if cross(hi[0], hi[1], d[0], d[1]) > 0:
            hi = d
    return cross(lo[0], lo[1], r[0], r[1]) >= 0 and cross(r[0], r[1], hi[0], hi[1]) >= 0


def ray_hits_polygon_bruteforce(v, target, poly: Polygon) -> bool:
    """Oracle: clip the ray at a distance past the polygon and test edges."""
    r = (target[0] - v[0], target[1] - v[1])
    reach = max(max(abs(w.x - v[0]), abs(w.y - v[1])) for w in poly.vertices)
    t = Fraction(reach) / max(abs(r[0]), abs(r[1])) + 1
    far = point(v[0] + t * r[0], v[1] + t * r[1])
    return any(segments_touch(v, far, c, d) for c, d in poly.edges())


@dataclass(frozen=True)
class BlockingProfile:
    radial: RadialSystem
    intervals: dict              # (v, obstacle index) -> labels in R(v) order

    def interval(self, v, k) -> list:
        return self.intervals[(v, k)]


def blocking_profile(scene, require_convex: bool = True) -> BlockingProfile:
    """Per point and obstacle, the rays of R(v) that meet the obstacle.

    With ``require_convex=False`` non-convex obstacles are allowed and
    tested with the clipped-ray check instead.
    """
    if require_convex:
        _require_convex(scene.obstacles)
    pts = dict(scene.points)
    radial = radial_system(pts)
    intervals = {}
    for k, o in enumerate(scene.obstacles):
        hits = ray_hits_convex if o.is_convex() else ray_hits_polygon_bruteforce
        for v in sorted(pts):
            intervals[(v, k)] = [u for u in radial[v] if hits(pts[v], pts[u], o)]
    return BlockingProfile(radial, intervals)


def is_cyclic_interval(order, subset) -> bool:
    """Members of ``subset`` are contiguous in the cyclic sequence ``order``.

    Equivalently, membership changes at most twice going once around.
    """
    sub = set(subset)
    flags = [u in sub for u in order]
    n = len(flags)
    if n == 0:
        return True
    changes = sum(flags[i] != flags[(i + 1) % n] for i in range(n))
    return changes <= 2


def alternation_free(order, subset) -> bool:
    """No a, b, c, d in cyclic order with a, c inside and b, d outside."""
    sub = set(subset)
    n = len(order)
    for i, j, k, l in itertools.combinations(range(n), 4):
        a, b, c, d = order[i], order[j], order[k], order[l]
        ins = (a in sub, b in sub, c in sub, d in sub)
        if ins in ((True, False, True, False), (False, True, False, True)):
            return False
    return True


def nonedge_criterion(scene, profile: BlockingProfile = None, require_convex: bool = True) -> Graph:
    """Visibility graph read off mutual blocking-interval membership."""
    profile = blocking_profile(scene, require_convex) if profile is None else profile
    labels = sorted(scene.points)
    blocked = set()
    for k in range(len(scene.obstacles)):
        sets = {v: set(profile.intervals[(v, k)]) for v in labels}
        for u, v in itertools.combinations(labels, 2):
            if u in sets[v] and v in sets[u]:
                blocked.add((u, v))
    return Graph(labels, [e for e in itertools.combinations(labels, 2) if e not in blocked])


def nonconvex_counterexample():
    """U-shaped obstacle that both rays hit while the segment passes over it."""
    from .visibility import Scene
    u, v = point(0, 0), point(10, 0)
    cup = Polygon([(-2, -1), (12, -1), (12, 3), (11, 3), (11, -1 + Fraction(1, 2)),
                   (-1, -1 + Fraction(1, 2)), (-1, 3), (-2, 3)])
    return Scene({0: u, 1: v}, [cup])


# -- duality ---------------------------------------------------------------------------

def dual_line(p) -> tuple:
    """(slope, intercept) of the line dual to p."""
    return (Fraction(p[0]), -Fraction(p[1]))


def dual_point(line) -> Point:
    m, c = line
    return point(m, -Fraction(c))


def line_of_point_pair(p, q) -> tuple:
    if p[0] == q[0]:
        raise GeometryError("vertical line has no dual point")
    m = Fraction(q[1] - p[1]) / (q[0] - p[0])
    return (m, p[1] - m * p[0])


def point_above_line(p, line) -> int:
    m, c = line
    d = p[1] - (m * p[0] + c)
    return (d > 0) - (d < 0)


# -- tangent curves ----------------------------------------------------------------------

def _chain(vertices, upper: bool):
    pts = sorted(set(vertices))
    if upper:
        # keep the top vertex on each vertical
        best = {}
        for p in pts:
            if p.x not in best or p.y > best[p.x].y:
                best[p.x] = p
        pts = sorted(best.values())
        sign = -1
    else:
        best = {}
        for p in pts:
            if p.x not in best or p.y < best[p.x].y:
                best[p.x] = p
        pts = sorted(best.values())
        sign = 1
    chain = []
    for p in pts:
        while len(chain) >= 2 and sign * orient(chain[-2], chain[-1], p) <= 0:
            chain.pop()
        chain.append(p)
    return chain


@dataclass(frozen=True)
class TangentCurve:
    orientation: str             # "upper" or "lower"
    supports: tuple              # obstacle vertices, one per linear piece, left to right in the dual
    breakpoints: tuple           # dual points between consecutive pieces

    @property
    def slopes(self) -> tuple:
        return tuple(v.x for v in self.supports)

    def piece_bounds(self, i) -> tuple:
        lo = self.breakpoints[i - 1].x if i > 0 else None
        hi = self.breakpoints[i].x if i < len(self.breakpoints) else None
        return lo, hi

    def __call__(self, x):
        vals = [v.x * x - v.y for v in self.supports]
        return min(vals) if self.orientation == "upper" else max(vals)


def tangent_curve(poly: Polygon, orientation: str) -> TangentCurve:
    if orientation not in ("upper", "lower"):
        raise ValueError("orientation must be 'upper' or 'lower'")
    if not poly.is_convex():
        raise GeometryError("tangent curves need a convex obstacle")
    if orientation == "upper":
        supports = list(reversed(_chain(poly.vertices, True)))
    else:
        supports = _chain(poly.vertices, False)
    bps = []
    for a, b in zip(supports, supports[1:]):
        s = Fraction(a.y - b.y) / (a.x - b.x)
        bps.append(point(s, a.x * s - a.y))
    return TangentCurve(orientation, tuple(supports), tuple(bps))


def curve_crossings(curve: TangentCurve, p) -> list:
    """x-coordinates where the dual line of p crosses the curve, increasing."""
    p = point(*p)
    found = []
    for i, h in enumerate(curve.supports):
        if h == p:
            raise GeometryError("point is an obstacle vertex")
        if h.x == p.x:
            continue
        x = Fraction(p.y - h.y) / (p.x - h.x)
        lo, hi = curve.piece_bounds(i)
        if (lo is not None and x == lo) or (hi is not None and x == hi):
            raise GeometryError(f"point {p} lies on a tangent through an obstacle edge")
        if (lo is None or lo < x) and (hi is None or x < hi):
            found.append(x)
    return sorted(found)


def cutpath(curve: TangentCurve, points) -> list:
    """Crossings of the curve with the duals of ``points`` as (label, x), left to right."""
    pts = _labeled(points)
    seq = [(v, x) for v in sorted(pts) for x in curve_crossings(curve, pts[v])]
    return sorted(seq, key=lambda item: (item[1], item[0]))


def is_vertically_above(p, poly: Polygon) -> bool:
    """p lies above the upper hull, strictly inside the obstacle's x-range."""
    chain = _chain(poly.vertices, True)
    if not chain[0].x < p[0] < chain[-1].x:
        return False
    for a, b in zip(chain, chain[1:]):
        if a.x <= p[0] <= b.x:
            return orient(a, b, p) > 0
    return False


def tangent_vertices(p, poly: Polygon) -> list:
    """Obstacle vertices touched by the tangent lines from p, via both dual curves."""
    out = []
    for orientation in ("upper", "lower"):
        curve = tangent_curve(poly, orientation)
        for x in curve_crossings(curve, p):
            vals = [(h.x * x - h.y, h) for h in curve.supports]
            target = min(vals)[0] if orientation == "upper" else max(vals)[0]
            out.extend(h for val, h in vals if val == target)
    return out
