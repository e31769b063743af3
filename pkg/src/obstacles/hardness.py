"""Graph and polygon produced from a 3-Partition instance.

Clique vertex i gets a_i pendant leaves.  The polygon has m groups of B
unit bays below a rectangular hall, consecutive halls joined by long low
corridors.  A yes-certificate (a 3-partition) turns into a placement of
all vertices inside the polygon whose visibility graph is the input graph.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .geometry import Polygon, point
from .graph import Graph
from .visibility import Scene, is_obstacle_representation


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class PartitionInstance:
    values: tuple

    def __post_init__(self):
        vals = tuple(int(a) for a in self.values)
        object.__setattr__(self, "values", vals)
        if not vals or len(vals) % 3:
            raise PartitionError("need 3m values")
        if any(a <= 0 for a in vals):
            raise PartitionError("values must be positive")
        if sum(vals) % self.m:
            raise PartitionError("sum is not divisible by m")
        B = self.B
        bad = [a for a in vals if not (B < 4 * a and 2 * a < B)]
        if bad:
            raise PartitionError(f"values {bad} not strictly between B/4 and B/2 (B={B})")

    @property
    def m(self) -> int:
        return len(self.values) // 3

    @property
    def B(self) -> int:
        return sum(self.values) // self.m


def leaf_labels(S: PartitionInstance) -> list:
    """Labels of the leaves of each clique vertex."""
    out = []
    nxt = 3 * S.m
    for a in S.values:
        out.append(list(range(nxt, nxt + a)))
        nxt += a
    return out


def gadget_graph(S: PartitionInstance) -> Graph:
    n = 3 * S.m
    edges = list(itertools.combinations(range(n), 2))
    for i, leaves in enumerate(leaf_labels(S)):
        edges += [(i, l) for l in leaves]
    return Graph(range(n + S.m * S.B), edges)


@dataclass
class GadgetOutput:
    instance: PartitionInstance
    graph: Graph
    polygon: Polygon
    bay_centers: list            # per group, B points
    groups: list                 # per group, (x0, y0, x1, y1) of the hall
    corridors: list              # (x0, y0, x1, y1)
    corridor_floor: Fraction = field(default=Fraction(0))

    @property
    def num_bays(self) -> int:
        return sum(len(g) for g in self.bay_centers)


def corridor_floor(B: int) -> Fraction:
    """Lower edge of every corridor, centered on the possible clique heights."""
    evens = [h for h in range(0, B) if 4 * (h + 1) > B and 2 * h < B and h % 2 == 0]
    c = Fraction(min(evens) + max(evens), 2) - Fraction(B, 8)
    c = max(c, Fraction(1, 4))
    return min(c, Fraction(B, 4) - Fraction(1, 4))


def gen_instance(S: PartitionInstance) -> GadgetOutput:
    m, B = S.m, S.B
    top = Fraction(B, 2)
    c = corridor_floor(B)
    step = 6 * B + 1
    bottom, upper = [], []
    bays, groups, corridors = [], [], []
    for g in range(m):
        gx = g * step
        right = gx + 2 * B + 1
        groups.append((gx, 0, right, top))
        bottom.append(point(gx, 0))
        centers = []
        for j in range(B):
            x = gx + 1 + 2 * j
            bottom += [point(x, 0), point(x, -1), point(x + 1, -1), point(x + 1, 0)]
            centers.append(point(Fraction(2 * x + 1, 2), Fraction(-1, 2)))
        bays.append(centers)
        bottom.append(point(right, 0))
        if g + 1 < m:
            corridors.append((right, c, gx + step, c + Fraction(B, 4)))
            bottom += [point(right, c), point(gx + step, c)]
            upper.append([point(gx + step, c + Fraction(B, 4)), point(right, c + Fraction(B, 4))])
    ring = bottom[:]
    for g in reversed(range(m)):
        gx = g * step
        ring += [point(gx + 2 * B + 1, top), point(gx, top)]
        if g > 0:
            ring += upper[g - 1]
    poly = Polygon(_drop_collinear(ring))
    return GadgetOutput(S, gadget_graph(S), poly, bays, groups, corridors, c)


def _drop_collinear(ring):
    out = []
    n = len(ring)
    for i in range(n):
        a, b, d = ring[i - 1], ring[i], ring[(i + 1) % n]
        if (b.x - a.x) * (d.y - a.y) - (b.y - a.y) * (d.x - a.x) != 0:
            out.append(b)
    return out


def is_orthogonal(poly: Polygon) -> bool:
    return all(a.x == b.x or a.y == b.y for a, b in poly.edges())


def _check_partition(S: PartitionInstance, partition):
    idx = sorted(i for t in partition for i in t)
    if idx != list(range(3 * S.m)) or any(len(t) != 3 for t in partition):
        raise PartitionError("partition must use every index exactly once, in triples")
    for t in partition:
        if sum(S.values[i] for i in t) != S.B:
            raise PartitionError(f"triple {tuple(t)} does not sum to B={S.B}")


def clique_height(a: int) -> Fraction:
    """Height of a clique vertex above the floor of its hall.

    a = 1 (possible only for B = 3) would land on the floor; half a unit
    keeps it inside while still seeing only the bay right below.
    """
    if a == 1:
        return Fraction(1, 2)
    return Fraction(a if a % 2 == 0 else a - 1)


@dataclass
class Placement:
    gadget: GadgetOutput
    positions: dict
    group_of: dict               # clique vertex -> group index

    def scene(self) -> Scene:
        return Scene(self.positions, [], container=self.gadget.polygon, general_position=False)

    def verify(self):
        return is_obstacle_representation(self.scene(), self.gadget.graph)


def witness_placement(S: PartitionInstance, partition, gadget: GadgetOutput = None) -> Placement:
    """Leaves at bay centers, group by group; clique vertices above their leaves.

    Leaf rows sit half a unit below the hall floor, so a clique vertex at
    height h above the floor is h + 1/2 above its leaves.
    """
    _check_partition(S, partition)
    gadget = gen_instance(S) if gadget is None else gadget
    leaves = leaf_labels(S)
    pos, group_of = {}, {}
    for g, triple in enumerate(partition):
        bay = 0
        for i in triple:
            centers = gadget.bay_centers[g][bay:bay + S.values[i]]
            for l, p in zip(leaves[i], centers):
                pos[l] = p
            pos[i] = point((centers[0].x + centers[-1].x) / 2, clique_height(S.values[i]))
            group_of[i] = g
            bay += S.values[i]
    return Placement(gadget, pos, group_of)


def three_partition_brute(S: PartitionInstance):
    """Some 3-partition as index triples, or None."""
    vals = S.values
    B = S.B

    def solve(free):
        if not free:
            return []
        i = free[0]
        rest = free[1:]
        for j, k in itertools.combinations(rest, 2):
            if vals[i] + vals[j] + vals[k] == B:
                sub = solve([x for x in rest if x not in (j, k)])
                if sub is not None:
                    return [(i, j, k)] + sub
        return None

    return solve(list(range(len(vals))))


def expected_sizes(S: PartitionInstance) -> tuple:
    """Vertex count, edge count and bay count of the gadget."""
    return 3 * S.m + S.B * S.m, math.comb(3 * S.m, 2) + S.B * S.m, S.m * S.B


def small_instances(max_m: int = 3, max_B: int = 24):
    """Every valid multiset (sorted) with m <= max_m and B <= max_B."""
    for m in range(1, max_m + 1):
        for B in range(1, max_B + 1):
            vals = [a for a in range(1, B) if 4 * a > B and 2 * a < B]
            for S in itertools.combinations_with_replacement(vals, 3 * m):
                if sum(S) == m * B:
                    yield PartitionInstance(S)
