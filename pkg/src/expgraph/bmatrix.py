"""B-matrix portrait of an undirected graph.

Entry ``[l][k]`` counts the vertices that have exactly ``k`` vertices at
shortest-path distance exactly ``l``. Rows run from ``l = 0`` to the
largest finite eccentricity; columns from ``k = 0`` to ``max(n - 1, 1)``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyGraph, WrongDirectedness
from .graph import Graph
from .ops import bfs_distances


@dataclass
class BMatrix:
    rows: list[list[int]]

    @property
    def depth(self) -> int:
        """Largest shell index L."""
        return len(self.rows) - 1

    def __getitem__(self, lk):
        l, k = lk
        return self.rows[l][k]

    def entries(self):
        """Non-zero ``(l, k, count)`` triples in lexicographic order."""
        for l, row in enumerate(self.rows):
            for k, count in enumerate(row):
                if count:
                    yield l, k, count

    def to_csv(self) -> str:
        lines = ["l,k,count"]
        lines.extend(f"{l},{k},{c}" for l, k, c in self.entries())
        return "\n".join(lines) + "\n"


def b_matrix(g: Graph) -> BMatrix:
    if g.directed:
        raise WrongDirectedness("b_matrix needs an undirected graph")
    n = len(g)
    if not n:
        raise EmptyGraph("b_matrix of an empty graph")
    adj = g.adjacency()
    shells = []
    for v in g:
        counts: dict[int, int] = {}
        for d in bfs_distances(adj, v).values():
            counts[d] = counts.get(d, 0) + 1
        shells.append(counts)
    depth = max(max(c) for c in shells)
    width = max(n - 1, 1) + 1
    rows = [[0] * width for _ in range(depth + 1)]
    for counts in shells:
        for l in range(depth + 1):
            rows[l][counts.get(l, 0)] += 1
    return BMatrix(rows)
