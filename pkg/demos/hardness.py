"""A 3-Partition instance turned into a graph and a polygon, with a witness placement."""

import sys
from pathlib import Path

from obstacles.hardness import PartitionInstance, gen_instance, three_partition_brute, witness_placement
from obstacles.svg import emit_svg

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demos/out")
out.mkdir(parents=True, exist_ok=True)

S = PartitionInstance((6, 7, 7, 6, 7, 7))
gadget = gen_instance(S)
print(f"m = {S.m}, B = {S.B}")
print(f"graph: {gadget.graph.n} vertices, {gadget.graph.m} edges")
print(f"polygon: {len(gadget.polygon.vertices)} corners, {gadget.num_bays} bays, corridor floor {gadget.corridor_floor}")

partition = three_partition_brute(S)
print("partition:", [[S.values[i] for i in t] for t in partition])
placement = witness_placement(S, partition, gadget)
print("placement verifies:", placement.verify())

# no partition, no placement to check
print("(5,5,5,7,7,7) has a partition:", three_partition_brute(PartitionInstance((5, 5, 5, 7, 7, 7))) is not None)

(out / "hardness.svg").write_text(emit_svg(placement))
