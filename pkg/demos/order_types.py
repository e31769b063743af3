"""Blocking intervals around each point, and the dual picture of one obstacle."""

import random

from obstacles.geometry import Polygon, point
from obstacles.order_types import (
    blocking_profile, curve_crossings, is_cyclic_interval, nonconvex_counterexample, nonedge_criterion,
    tangent_curve,
)
from obstacles.visibility import Scene, visibility_graph

rng = random.Random(4)
pts = {}
while len(pts) < 7:
    p = point(rng.randint(0, 30), rng.randint(0, 30))
    if not (10 <= p.x <= 20 and 10 <= p.y <= 20):
        pts[len(pts)] = p
box = Polygon([(11, 11), (19, 12), (18, 19), (12, 18)])
scene = Scene(pts, [box])

prof = blocking_profile(scene)
for v in scene.labels:
    members = prof.interval(v, 0)
    print(f"R({v}) = {prof.radial[v]}  blocked: {members}  interval: {is_cyclic_interval(prof.radial[v], members)}")
print("criterion = visibility:", nonedge_criterion(scene, prof) == visibility_graph(scene))

tau = tangent_curve(box, "upper")
print("upper tangent curve slopes:", [str(s) for s in tau.slopes])
print("dual of a point high above crosses it at", [str(x) for x in curve_crossings(tau, point(15, 45))])

bad = nonconvex_counterexample()
print("U-shaped obstacle: visibility", visibility_graph(bad).sorted_edges(),
      "criterion", nonedge_criterion(bad, require_convex=False).sorted_edges())
