"""Graphs with a small vertex cover need few obstacles, whatever their size."""

import itertools
import sys
from pathlib import Path

from obstacles.constructions import min_vertex_cover, vc_decomposition, vc_obstacle_bound, vc_representation
from obstacles.graph import Graph
from obstacles.svg import emit_svg
from obstacles.visibility import visibility_graph

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demos/out")
out.mkdir(parents=True, exist_ok=True)

# two hubs, leaves of three types: hub 0 only, hub 1 only, both
edges = [(0, 1)] + [(0, v) for v in (2, 3, 4)] + [(1, v) for v in (5, 6)] + list(itertools.product((0, 1), (7, 8)))
g = Graph(range(9), edges)
cover = min_vertex_cover(g)
dec = vc_decomposition(g, cover)
print("cover:", sorted(cover))
for sig, members in dec.types.items():
    print(f"  type {sig}: {members}")

scene = vc_representation(g, cover)
print(f"{len(scene.obstacles)} obstacles (bound {vc_obstacle_bound(dec.k)})")
print("visibility graph matches:", visibility_graph(scene) == g)

# adding leaves never adds obstacles beyond the bound
for extra in (5, 20):
    big = Graph(range(9 + extra), edges + [(0, 9 + i) for i in range(extra)])
    print(f"  with {extra} more leaves: {len(vc_representation(big).obstacles)} obstacles")

(out / "vertex_cover.svg").write_text(emit_svg(scene, {"graph": g}))
