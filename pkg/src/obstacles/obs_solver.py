"""obs(D) as a minimum face cover, and realizing a cover as obstacles."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .arrangement import Arrangement, Drawing, planarize
from .carving import carve, face_polygon, offset_ring, ring_certified
from .geometry import GeometryError, Polygon
from .visibility import Scene, is_obstacle_representation


class DegenerateDrawing(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


@dataclass
class CoverInstance:
    faces: list
    nonedges: list
    hits: list
    arrangement: Arrangement = None
    drawing: Drawing = None

    def __post_init__(self):
        for e, hs in zip(self.nonedges, self.hits):
            if not hs:
                raise DegenerateDrawing(f"non-edge {e} meets no face")
            bad = [f for f in hs if not 0 <= f < len(self.faces)]
            if bad:
                raise ValueError(f"hit set of {e} references unknown faces {bad}")

    def is_cover(self, chosen) -> bool:
        chosen = set(chosen)
        return all(hs & chosen for hs in self.hits)


def build_cover_instance(drawing: Drawing, arr: Arrangement = None) -> CoverInstance:
    arr = planarize(drawing) if arr is None else arr
    nonedges = drawing.graph.nonedges()
    hits = []
    for u, v in nonedges:
        hits.append(frozenset(arr.stabbed_faces(drawing.segment(u, v))))
    return CoverInstance(list(range(arr.num_faces)), nonedges, hits, arr, drawing)


@dataclass
class CoverResult:
    size: int
    chosen: frozenset
    optimal: bool
    nodes: int = 0

    def __iter__(self):
        return iter((self.size, self.chosen))


def _greedy(masks, nfaces):
    uncovered = (1 << len(masks)) - 1
    by_face = [0] * nfaces
    for e, m in enumerate(masks):
        for f in _bits(m):
            by_face[f] |= 1 << e
    chosen = []
    while uncovered:
        f = max(range(nfaces), key=lambda f: (bin(by_face[f] & uncovered).count("1"), -f))
        chosen.append(f)
        uncovered &= ~by_face[f]
    return chosen


def _bits(m):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def _packing_bound(masks, uncovered):
    """Number of pairwise face-disjoint uncovered non-edges (greedy packing)."""
    used = 0
    count = 0
    order = sorted(_bits(uncovered), key=lambda e: (bin(masks[e]).count("1"), e))
    for e in order:
        if not masks[e] & used:
            used |= masks[e]
            count += 1
    return count


def min_face_cover(inst: CoverInstance, mode: str = "exact", budget: int = 1_000_000) -> CoverResult:
    """Minimum set of faces meeting every non-edge.

    ``exact`` runs branch and bound (greedy incumbent, packing lower bound,
    branching on the non-edge with fewest faces); when ``budget`` search
    nodes are used up the best cover found so far is returned with
    ``optimal=False``.
    """
    if mode not in ("exact", "greedy"):
        raise ValueError(f"unknown mode {mode!r}")
    nfaces = len(inst.faces)
    masks = [sum(1 << f for f in hs) for hs in inst.hits]
    if not masks:
        return CoverResult(0, frozenset(), True)
    by_face = [0] * nfaces
    for e, m in enumerate(masks):
        for f in _bits(m):
            by_face[f] |= 1 << e
    greedy = _greedy(masks, nfaces)
    if mode == "greedy":
        return CoverResult(len(greedy), frozenset(greedy), False)

    best = list(greedy)
    nodes = 0
    exhausted = False

    def search(uncovered, chosen):
        nonlocal best, nodes, exhausted
        if exhausted:
            return
        if not uncovered:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        if len(chosen) + _packing_bound(masks, uncovered) >= len(best):
            return
        nodes += 1
        if nodes > budget:
            exhausted = True
            return
        e = min(_bits(uncovered), key=lambda e: (bin(masks[e]).count("1"), e))
        for f in _bits(masks[e]):
            chosen.append(f)
            search(uncovered & ~by_face[f], chosen)
            chosen.pop()

    search((1 << len(masks)) - 1, [])
    return CoverResult(len(best), frozenset(best), not exhausted, nodes)


def min_face_cover_bruteforce(inst: CoverInstance):
    """Exhaustive oracle: smallest subset of faces, by increasing size."""
    if not inst.nonedges:
        return 0, frozenset()
    for r in range(1, len(inst.faces) + 1):
        for combo in itertools.combinations(range(len(inst.faces)), r):
            if inst.is_cover(combo):
                return r, frozenset(combo)
    raise DegenerateDrawing("no cover exists")


def _assign(inst: CoverInstance, chosen):
    """Non-edges each chosen face is responsible for."""
    assigned = {f: [] for f in chosen}
    for e, hs in zip(inst.nonedges, inst.hits):
        for f in sorted(hs & set(chosen)):
            assigned[f].append(e)
    return assigned


def faces_to_obstacles(drawing: Drawing, chosen, inst: CoverInstance = None,
                       max_rounds: int = 60) -> Scene:
    """One certified polygon inside each chosen face; the scene realizes the graph.

    Faces are carved so each one is simply connected, pushed inward by an
    exact offset, and the offset is halved for faces whose non-edges slip
    past until the visibility graph matches.
    """
    inst = build_cover_instance(drawing) if inst is None else inst
    chosen = sorted(set(chosen))
    if not inst.is_cover(chosen):
        raise ValueError("chosen faces do not cover every non-edge")
    arr = inst.arrangement
    cut = carve(arr)
    offsets = {}
    polys = {}
    for f in chosen:
        polys[f], offsets[f] = face_polygon(cut.arr, cut.face_map[f])
    assigned = _assign(inst, chosen)
    graph = drawing.graph
    for _ in range(max_rounds):
        scene = Scene(dict(drawing.position), [polys[f] for f in chosen], graph=graph)
        verdict = is_obstacle_representation(scene, graph)
        if verdict:
            return scene
        if verdict.kind != "unblocked non-edge":
            raise GeometryError(f"materialized obstacles broke an edge: {verdict}")
        culprits = [f for f in chosen if verdict.pair in assigned[f]]
        for f in culprits:
            cf = cut.face_map[f]
            t = offsets[f] / 2
            while True:
                ring = offset_ring(cut.arr, cf, t)
                if ring_certified(cut.arr, cf, ring):
                    break
                t /= 2
            polys[f], offsets[f] = Polygon(ring, check=False), t
    raise GeometryError("offset refinement did not converge")


def obs_of_drawing(drawing: Drawing, mode: str = "exact", budget: int = 1_000_000):
    inst = build_cover_instance(drawing)
    return inst, min_face_cover(inst, mode, budget)
