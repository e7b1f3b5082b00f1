"""Classical graph operations: degrees, metrics, copies, components."""
from __future__ import annotations

import math
from collections import deque

from .errors import EmptyGraph, UnknownVertex, WrongDirectedness
from .graph import Graph, VertexSet

INFINITE = math.inf


def degrees(g: Graph) -> dict[int, int]:
    return {v: g.degree(v) for v in g}


def min_degree_vertex(g: Graph) -> int:
    """Vertex of smallest degree, ties broken by smallest id."""
    if not len(g):
        raise EmptyGraph("min_degree_vertex of an empty graph")
    return min(g, key=lambda v: (g.degree(v), v))


def max_degree_vertex(g: Graph) -> int:
    """Vertex of largest degree, ties broken by smallest id."""
    if not len(g):
        raise EmptyGraph("max_degree_vertex of an empty graph")
    return min(g, key=lambda v: (-g.degree(v), v))


def min_degree(g: Graph) -> int:
    return g.degree(min_degree_vertex(g))


def max_degree(g: Graph) -> int:
    return g.degree(max_degree_vertex(g))


def is_regular(g: Graph) -> bool:
    return len({g.degree(v) for v in g}) <= 1


def is_clique(g: Graph, s=None) -> bool:
    """True when every pair of ``s`` (default: all vertices) is adjacent."""
    members = list(g) if s is None else list(s)
    adj = g.adjacency()
    for v in members:
        if v not in adj:
            raise UnknownVertex(v)
    return all(b in adj[a] for i, a in enumerate(members) for b in members[i + 1:])


def bfs_distances(adj: dict[int, set[int]], source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        d = dist[v] + 1
        for w in adj[v]:
            if w not in dist:
                dist[w] = d
                queue.append(w)
    return dist


def eccentricity(g: Graph, v: int):
    """Largest distance from ``v``; INFINITE if some vertex is unreachable."""
    dist = bfs_distances(g.adjacency(), v)
    if len(dist) < len(g):
        return INFINITE
    return max(dist.values())


def diameter(g: Graph):
    """Unweighted diameter of the undirected view; INFINITE if disconnected."""
    if not len(g):
        raise EmptyGraph("diameter of an empty graph")
    adj = g.adjacency()
    best = 0
    for v in g:
        dist = bfs_distances(adj, v)
        if len(dist) < len(g):
            return INFINITE
        best = max(best, max(dist.values()))
    return best


def connected_components(g: Graph) -> list[VertexSet]:
    """Components of the undirected view, ordered by their smallest vertex."""
    adj = g.adjacency()
    seen: set[int] = set()
    comps = []
    for v in sorted(adj):
        if v in seen:
            continue
        comp = bfs_distances(adj, v)
        seen.update(comp)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def _scc(succ: dict[int, set[int]]) -> list[list[int]]:
    # iterative Tarjan; components emitted in reverse topological order
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    result = []
    counter = 0
    for root in sorted(succ):
        if root in index:
            continue
        work = [(root, iter(sorted(succ[root])))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(sorted(succ[w]))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                result.append(sorted(comp))
    return result


def strongly_connected_components(g: Graph) -> list[VertexSet]:
    """Tarjan's SCCs of a digraph, ordered by their smallest vertex."""
    if not g.directed:
        raise WrongDirectedness("strongly connected components need a directed graph")
    return sorted(_scc(g.successor_map()), key=lambda c: c[0])


def is_acyclic(g: Graph) -> bool:
    """True for digraphs with no circuit (self-loops count as circuits)."""
    if not g.directed:
        raise WrongDirectedness("is_acyclic expects a directed graph")
    succ = g.successor_map()
    if any(v in succ[v] for v in succ):
        return False
    return all(len(c) == 1 for c in _scc(succ))


def copy_graph(g: Graph) -> Graph:
    return g.copy()


def induced_subgraph(g: Graph, s) -> Graph:
    keep = list(dict.fromkeys(s))
    for v in keep:
        if v not in g:
            raise UnknownVertex(v)
    members = set(keep)
    h = Graph(g.directed)
    for v in g:
        if v in members:
            h.add_vertex(g.label(v), vid=v)
    for u, v in g.edges():
        if u in members and v in members:
            h.add_edge(u, v)
    return h


def remove_vertices(g: Graph, s) -> Graph:
    """Copy of ``g`` without the vertices of ``s``."""
    drop = set(s)
    return induced_subgraph(g, [v for v in g if v not in drop])


def merge_graphs(a: Graph, b: Graph) -> Graph:
    """Union of two graphs, vertices matched by id (labels of ``a`` win)."""
    if a.directed != b.directed:
        raise WrongDirectedness("cannot merge a directed and an undirected graph")
    h = a.copy()
    for v in b:
        h.add_vertex(b.label(v), vid=v)
    for u, v in b.edges():
        h.add_edge(u, v)
    return h
