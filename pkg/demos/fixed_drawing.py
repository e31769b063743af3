"""Obstacle number of a fixed drawing, then real obstacles for the optimal faces."""

import sys
from pathlib import Path

from obstacles.constructions import lower_bound_drawing
from obstacles.obs_solver import faces_to_obstacles, obs_of_drawing
from obstacles.svg import emit_svg
from obstacles.visibility import is_obstacle_representation

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demos/out")
out.mkdir(parents=True, exist_ok=True)

# D_n: points on a steep cup plus copies just below; the pairs q_i q_j with i, j even are left out
for n in (8, 12, 16):
    lb = lower_bound_drawing(n)
    inst, res = obs_of_drawing(lb.drawing)
    print(f"D_{n}: {lb.arrangement.num_faces} faces, {len(inst.nonedges)} non-edges, "
          f"|X| = {len(lb.X)}, obs = {res.size} (optimal: {res.optimal})")

# materialize the cover for D_8 and check it
lb = lower_bound_drawing(8)
inst, res = obs_of_drawing(lb.drawing)
scene = faces_to_obstacles(lb.drawing, res.chosen, inst)
print("D_8 scene verifies:", is_obstacle_representation(scene, lb.drawing.graph))

(out / "d8_faces.svg").write_text(emit_svg(inst.arrangement, {"chosen": res.chosen}))
(out / "d8_scene.svg").write_text(emit_svg(scene, {"nonedges": True}))
print("wrote", out / "d8_faces.svg", "and", out / "d8_scene.svg")
