"""Trivial-yes rule, neighborhood types, type pruning and the ETR export."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .constructions import CORNER_CONSTANT, min_vertex_cover, vc_obstacle_bound
from .graph import Graph

YES = "Yes"
UNDECIDED = "Undecided"


def decide_trivial(graph: Graph, h: int) -> str:
    """Yes when h obstacles always suffice for the vertex cover number of G."""
    k = len(min_vertex_cover(graph))
    return YES if h >= vc_obstacle_bound(k) else UNDECIDED


def ramsey_upper(q: int, s: int) -> int:
    """Crude upper bound q^(q*s) for the q-color Ramsey number of K_s."""
    if q < 1 or s < 1:
        raise ValueError("q and s must be positive")
    if q == 1:
        return s
    return q ** (q * s)


def typesize(k: int, h: int) -> int:
    if k < 1 or h < 1:
        raise ValueError("k and h must be positive")
    return ramsey_upper(h, 15 * k * 2 ** k)


def neighborhood_types(graph: Graph, cover) -> dict:
    cover = frozenset(cover)
    types = {}
    for v in graph.vertices:
        if v not in cover:
            types.setdefault(tuple(sorted(graph.neighbors(v))), []).append(v)
    return types


@dataclass
class KernelInstance:
    graph: Graph
    h: int
    k: int
    typesize: Optional[int]
    threshold: int
    log: list = field(default_factory=list)       # (vertex, type signature)

    @property
    def size_bound(self) -> int:
        return self.k + 2 ** self.k * self.threshold


def kernel(graph: Graph, h: int, threshold: Optional[int] = None, order: str = "lowest") -> KernelInstance:
    """Shrink every oversized type to the threshold.

    The threshold is typesize(k, h) unless overridden.  Vertices are
    removed lowest label first (or highest with ``order="highest"``); the
    vertex cover is recomputed after each batch and the process repeats
    until no type exceeds the threshold.
    """
    if order not in ("lowest", "highest"):
        raise ValueError("order must be 'lowest' or 'highest'")
    cover = min_vertex_cover(graph)
    k = len(cover)
    ts = typesize(k, h) if k >= 1 and h >= 1 else None
    if threshold is not None:
        t = threshold
    elif ts is not None:
        t = ts
    else:
        t = graph.n          # nothing to prune without a cover or obstacles
    log = []
    g = graph
    while True:
        changed = False
        for sig, members in sorted(neighborhood_types(g, cover).items()):
            if len(members) <= t:
                continue
            ranked = sorted(members, reverse=(order == "highest"))
            drop = ranked[:len(members) - t]
            log += [(v, sig) for v in drop]
            g = g.without(drop)
            changed = True
            cover = min_vertex_cover(g)
            break
        if not changed:
            break
    return KernelInstance(g, h, len(min_vertex_cover(g)), ts, t, log)


# -- ETR export -------------------------------------------------------------------

def etr_corner_budget(graph: Graph, h: int) -> int:
    return max(CORNER_CONSTANT * (graph.m ** 2 + graph.n), 3 * h)


def _split(total: int, parts: int) -> list:
    base, extra = divmod(total, parts)
    return [base + (1 if i < extra else 0) for i in range(parts)]


def _orient_term(a, b, c) -> str:
    """Prefix polynomial for the orientation determinant of three points."""
    (ax, ay), (bx, by), (cx, cy) = a, b, c
    return (f"(- (* (- {bx} {ax}) (- {cy} {ay})) "
            f"(* (- {by} {ay}) (- {cx} {ax})))")


def etr_export(graph: Graph, h: int) -> str:
    """Existential formula asserting an h-obstacle representation exists.

    Variables: (x_v, y_v) per vertex and (ox_j, oy_j) per obstacle corner.
    Corners are dealt out to the h obstacles as evenly as possible; each
    obstacle is the polygon on its corners in order.  Every line after the
    header is one constraint, in prefix notation.
    """
    if h < 1:
        raise ValueError("need at least one obstacle")
    n = graph.n
    N = etr_corner_budget(graph, h)
    sizes = _split(N, h)
    vert = {v: (f"x{v}", f"y{v}") for v in graph.vertices}
    corners = [(f"ox{j}", f"oy{j}") for j in range(N)]
    sides = []
    start = 0
    for size in sizes:
        ring = corners[start:start + size]
        sides.append([(ring[i], ring[(i + 1) % size]) for i in range(size)])
        start += size
    lines = [f"; etr n={n} m={graph.m} N={N} h={h} vars={2 * n + 2 * N}",
             "(exists (" + " ".join(c for v in graph.vertices for c in vert[v])
             + " " + " ".join(c for corner in corners for c in corner) + "))"]
    for u, v in graph.sorted_edges():
        a, b = vert[u], vert[v]
        for obstacle in sides:
            for c, d in obstacle:
                o1 = _orient_term(a, b, c)
                o2 = _orient_term(a, b, d)
                o3 = _orient_term(c, d, a)
                o4 = _orient_term(c, d, b)
                lines.append(f"(edge {u} {v} (or (> (* {o1} {o2}) 0) (> (* {o3} {o4}) 0)))")
    for u, v in graph.nonedges():
        a, b = vert[u], vert[v]
        options = []
        for obstacle in sides:
            for c, d in obstacle:
                o1 = _orient_term(a, b, c)
                o2 = _orient_term(a, b, d)
                o3 = _orient_term(c, d, a)
                o4 = _orient_term(c, d, b)
                options.append(f"(and (<= (* {o1} {o2}) 0) (<= (* {o3} {o4}) 0))")
        lines.append(f"(nonedge {u} {v} (or {' '.join(options)}))")
    return "\n".join(lines) + "\n"


def etr_stats(text: str) -> dict:
    header = text.splitlines()[0]
    fields = dict(part.split("=") for part in header.split()[2:])
    body = text.splitlines()[2:]
    return {
        **{k: int(v) for k, v in fields.items()},
        "edge_constraints": sum(1 for line in body if line.startswith("(edge ")),
        "nonedge_constraints": sum(1 for line in body if line.startswith("(nonedge ")),
    }


def ramsey_r33_bruteforce() -> int:
    """Smallest s with every red/blue coloring of K_s containing a monochromatic triangle."""
    for s in itertools.count(3):
        pairs = list(itertools.combinations(range(s), 2))
        triangles = list(itertools.combinations(range(s), 3))
        forced = True
        for colors in itertools.product((0, 1), repeat=len(pairs)):
            col = dict(zip(pairs, colors))
            if not any(col[(a, b)] == col[(a, c)] == col[(b, c)] for a, b, c in triangles):
                forced = False
                break
        if forced:
            return s


def type_size_multiset(graph: Graph) -> list:
    cover = min_vertex_cover(graph)
    return sorted(len(m) for m in neighborhood_types(graph, cover).values())

