"""Trivial answers, type pruning and the exported formula."""

from obstacles.graph import Graph
from obstacles.kernelize import decide_trivial, etr_export, etr_stats, kernel, typesize

star = Graph(range(8), [(0, i) for i in range(1, 8)])
print("star K_1,7 with h = 3:", decide_trivial(star, 3))

g = Graph(range(10), [(0, 1)] + [(0, i) for i in range(2, 6)] + [(1, i) for i in range(6, 10)])
print("two hubs with h = 2:", decide_trivial(g, 2))
print("typesize(2, 2) has", len(str(typesize(2, 2))), "digits, so nothing gets pruned in practice")

res = kernel(g, 2, threshold=2)
print(f"with threshold 2: {g.n} -> {res.graph.n} vertices (bound {res.size_bound})")
for v, sig in res.log:
    print(f"  dropped {v} of type {sig}")

text = etr_export(Graph.path(3), 1)
print("formula for P3 with one obstacle:", etr_stats(text))
print(text.splitlines()[0])
