"""Simple undirected graphs with integer vertex labels."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable


def _norm_edge(u, v):
    if u == v:
        raise ValueError(f"self-loop at {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    vertices: tuple
    edges: frozenset

    def __init__(self, vertices: Iterable, edges: Iterable = ()):
        vs = tuple(sorted(set(vertices)))
        es = frozenset(_norm_edge(u, v) for u, v in edges)
        vset = set(vs)
        for u, v in es:
            if u not in vset or v not in vset:
                raise ValueError(f"edge ({u}, {v}) uses an unknown vertex")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(range(n), itertools.combinations(range(n), 2))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(range(n))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(range(n), [(i, i + 1) for i in range(n - 1)])

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u, v) -> bool:
        return _norm_edge(u, v) in self.edges

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def nonedges(self) -> list:
        return [(u, v) for u, v in itertools.combinations(self.vertices, 2)
                if (u, v) not in self.edges]

    def adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def neighbors(self, v) -> frozenset:
        return frozenset(w for e in self.edges if v in e for w in e if w != v)

    def induced(self, keep: Iterable) -> "Graph":
        keep = set(keep)
        return Graph(keep, [e for e in self.edges if e[0] in keep and e[1] in keep])

    def without(self, drop: Iterable) -> "Graph":
        drop = set(drop)
        return self.induced(v for v in self.vertices if v not in drop)

    def components(self) -> list:
        adj = self.adjacency()
        seen = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            stack = [s]
            seen.add(s)
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def relabeled(self) -> tuple["Graph", dict]:
        """Copy with labels 0..n-1 (in sorted order) and the old->new map."""
        mapping = {v: i for i, v in enumerate(self.vertices)}
        return Graph(range(self.n), [(mapping[u], mapping[v]) for u, v in self.edges]), mapping

    def is_vertex_cover(self, cover: Iterable) -> bool:
        cover = set(cover)
        return all(u in cover or v in cover for u, v in self.edges)
