"""Minimal separators of undirected graphs.

A set S is a minimal ab-separator when a and b fall in different
components of G - S and no proper subset of S does that. Equivalently,
the components of a and of b in G - S are both *full*: each of them is
adjacent to every vertex of S.

Both enumerations start from separators "close" to a vertex, the
neighborhoods N(C) of the components C of G - N[v], and saturate the
collection: for a known separator S and x in S, the neighborhoods of the
components of G - (S u N[x]) are separators as well.
"""
from __future__ import annotations

from collections import deque

from .errors import SameVertex, UnknownVertex, WrongDirectedness
from .graph import Graph, VertexSet

Adj = dict[int, set[int]]


def _undirected(g: Graph, what: str) -> Adj:
    if g.directed:
        raise WrongDirectedness(f"{what} needs an undirected graph")
    return g.adjacency()


def _components(adj: Adj, removed: set[int]) -> list[set[int]]:
    seen = set(removed)
    comps = []
    for start in sorted(adj):
        if start in seen:
            continue
        comp = {start}
        seen.add(start)
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def _component_of(adj: Adj, removed: set[int], v: int) -> set[int]:
    comp = {v}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for w in adj[x]:
            if w not in removed and w not in comp:
                comp.add(w)
                queue.append(w)
    return comp


def _boundary(adj: Adj, comp: set[int]) -> frozenset[int]:
    out: set[int] = set()
    for v in comp:
        out |= adj[v]
    return frozenset(out - comp)


def _separates_minimally(adj: Adj, s: frozenset[int], a: int, b: int) -> bool:
    if a in s or b in s:
        return False
    ca = _component_of(adj, set(s), a)
    if b in ca:
        return False
    cb = _component_of(adj, set(s), b)
    return _boundary(adj, ca) == s and _boundary(adj, cb) == s


def _canonical(seps) -> list[VertexSet]:
    return sorted((sorted(s) for s in seps), key=lambda s: (len(s), s))


def is_ab_separator(g: Graph, s, a: int, b: int) -> bool:
    """a and b lie in different components of g - s."""
    adj = g.adjacency()
    s = set(s)
    return a not in s and b not in s and b not in _component_of(adj, s, a)


def is_minimal_ab_separator(g: Graph, s, a: int, b: int) -> bool:
    return _separates_minimally(g.adjacency(), frozenset(s), a, b)


def get_ab_separators(g: Graph, a: int, b: int) -> list[VertexSet]:
    """All minimal ab-separators, sorted by size then by members.

    Adjacent a and b have none. When a and b are already in different
    components the only minimal separator is the empty set.
    """
    adj = _undirected(g, "get_ab_separators")
    for v in (a, b):
        if v not in adj:
            raise UnknownVertex(v)
    if a == b:
        raise SameVertex(f"a and b must differ, both are {a}")
    if b in adj[a]:
        return []
    if b not in _component_of(adj, set(), a):
        return [[]]

    found: set[frozenset[int]] = set()
    queue: deque[frozenset[int]] = deque()

    def offer(s: frozenset[int]) -> None:
        if s not in found and _separates_minimally(adj, s, a, b):
            found.add(s)
            queue.append(s)

    closed_a = adj[a] | {a}
    for comp in _components(adj, closed_a):
        offer(_boundary(adj, comp))
    while queue:
        s = queue.popleft()
        for x in sorted(s):
            for comp in _components(adj, set(s) | adj[x]):
                offer(_boundary(adj, comp))
    return _canonical(found)


def _minimal_separators_connected(adj: Adj) -> set[frozenset[int]]:
    found: set[frozenset[int]] = set()
    queue: deque[frozenset[int]] = deque()

    def offer(s: frozenset[int]) -> None:
        if s and s not in found:
            found.add(s)
            queue.append(s)

    for v in sorted(adj):
        for comp in _components(adj, adj[v] | {v}):
            offer(_boundary(adj, comp))
    while queue:
        s = queue.popleft()
        for x in sorted(s):
            for comp in _components(adj, set(s) | adj[x]):
                offer(_boundary(adj, comp))
    return found


def get_all_minimal_separators(g: Graph) -> list[VertexSet]:
    """Union of the minimal ab-separators over all vertex pairs.

    Computed per connected component; a disconnected graph additionally
    has the empty separator.
    """
    adj = _undirected(g, "get_all_minimal_separators")
    comps = _components(adj, set())
    found: set[frozenset[int]] = set()
    if len(comps) > 1:
        found.add(frozenset())
    for comp in comps:
        sub = {v: adj[v] for v in comp}
        found |= _minimal_separators_connected(sub)
    return _canonical(found)
