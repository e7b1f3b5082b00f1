"""Chromatic number and proper colorings of undirected graphs.

The exact search works in polynomial space: some optimal coloring has a
color class that is a maximal independent set containing any fixed
vertex v, so it suffices to try every maximal independent set through v
as the next class and recurse on what is left.
"""
from __future__ import annotations

from .errors import WrongDirectedness
from .graph import Graph, VertexSet
from .mis import _FGK, _closed, _without, maximal_independent_sets

Adj = dict[int, set[int]]
ColorPartition = list  # list[VertexSet]


def _undirected(g: Graph, what: str) -> Adj:
    if g.directed:
        raise WrongDirectedness(f"{what} needs an undirected graph")
    return g.adjacency()


def _normalize(classes) -> ColorPartition:
    return sorted((sorted(c) for c in classes if c), key=lambda c: c[0])


def _greedy_clique(adj: Adj) -> int:
    if not adj:
        return 0
    clique: set[int] = set()
    candidates = set(adj)
    while candidates:
        v = min(candidates, key=lambda x: (-len(adj[x] & candidates), x))
        clique.add(v)
        candidates &= adj[v]
    return len(clique)


def _first_fit(adj: Adj) -> list[set[int]]:
    # largest-degree-first sequential coloring
    classes: list[set[int]] = []
    for v in sorted(adj, key=lambda x: (-len(adj[x]), x)):
        for c in classes:
            if not adj[v] & c:
                c.add(v)
                break
        else:
            classes.append({v})
    return classes


class _ColorSearch:
    def __init__(self, adj: Adj):
        self.best = _first_fit(adj)
        self.floor = _greedy_clique(adj)

    def run(self, adj: Adj, classes: list[set[int]]) -> None:
        if len(self.best) <= self.floor:
            return
        if not adj:
            if len(classes) < len(self.best):
                self.best = [set(c) for c in classes]
            return
        if len(classes) + max(1, _greedy_clique(adj)) >= len(self.best):
            return
        v = min(adj, key=lambda x: (-len(adj[x]), x))
        tried: set[frozenset[int]] = set()
        for rest in maximal_independent_sets(_without(adj, _closed(adj, v))):
            cls = frozenset(rest | {v})
            if cls in tried:
                continue
            tried.add(cls)
            classes.append(set(cls))
            self.run(_without(adj, cls), classes)
            classes.pop()


def graph_coloring(g: Graph) -> ColorPartition:
    """A proper coloring with the minimum number of classes."""
    adj = _undirected(g, "graph_coloring")
    if not adj:
        return []
    search = _ColorSearch(adj)
    search.run(adj, [])
    return _normalize(search.best)


def chromatic_number(g: Graph) -> int:
    """Minimum number of colors; 0 for the empty graph."""
    return len(graph_coloring(g))


def greedy_graph_coloring(g: Graph) -> ColorPartition:
    """Peel off a maximum independent set as the next color until nothing is left."""
    adj = _undirected(g, "greedy_graph_coloring")
    classes = []
    while adj:
        cls = _FGK().solve(adj)
        classes.append(cls)
        adj = _without(adj, cls)
    return _normalize(classes)


def is_proper_coloring(g: Graph, classes) -> bool:
    """Classes are disjoint, cover every vertex and are independent."""
    adj = g.adjacency()
    seen: set[int] = set()
    for c in classes:
        c = set(c)
        if c & seen or not c <= adj.keys():
            return False
        if any(adj[v] & c for v in c):
            return False
        seen |= c
    return seen == set(adj)
