"""Minimum vertex cover on undirected graphs.

Besides the two polynomial heuristics there are four exact deciders for
"is there a cover of size at most k". Each decider has a ``*_cover``
companion returning a witness cover (or ``None``) and
:func:`minimum_vertex_cover` finds the optimum by trying k = 0, 1, 2, ...
"""
from __future__ import annotations

from itertools import combinations

from .errors import InvalidParameter, WrongDirectedness
from .graph import Graph, VertexSet

Adj = dict[int, set[int]]


def _undirected(g: Graph, what: str) -> Adj:
    if g.directed:
        raise WrongDirectedness(f"{what} needs an undirected graph")
    return g.adjacency()


def _check_k(k: int) -> None:
    if k < 0:
        raise InvalidParameter(f"k must be non-negative, got {k}")


def _without(adj: Adj, vs) -> Adj:
    vs = set(vs)
    return {v: nb - vs for v, nb in adj.items() if v not in vs}


def _strip_isolated(adj: Adj) -> Adj:
    return {v: nb for v, nb in adj.items() if nb}


def _edge_count(adj: Adj) -> int:
    return sum(len(nb) for nb in adj.values()) // 2


def is_vertex_cover(g: Graph, s) -> bool:
    inside = set(s)
    return all(u in inside or v in inside for u, v in g.edges())


# ---- heuristics ---------------------------------------------------------

def two_approximation_cover(g: Graph) -> VertexSet:
    """Both endpoints of a greedily built maximal matching."""
    _undirected(g, "two_approximation_cover")
    cover: set[int] = set()
    for u, v in g.edges():
        if u not in cover and v not in cover:
            cover.update((u, v))
    return sorted(cover)


def greedy_cover_max_degree(g: Graph) -> VertexSet:
    """Repeatedly take a vertex of current maximum degree until no edge is left."""
    adj = _strip_isolated(_undirected(g, "greedy_cover_max_degree"))
    cover = []
    while adj:
        v = min(adj, key=lambda x: (-len(adj[x]), x))
        cover.append(v)
        adj = _strip_isolated(_without(adj, {v}))
    return sorted(cover)


# ---- brute force --------------------------------------------------------

def _brute_force_cover(adj: Adj, k: int) -> set[int] | None:
    edges = [(u, v) for u in adj for v in adj[u] if u < v]
    if not edges:
        return set()
    # vertices that cover something first, highest degree first
    order = sorted(adj, key=lambda v: (-len(adj[v]), v))
    k = min(k, len(order))
    for subset in combinations(order, k):
        chosen = set(subset)
        if all(u in chosen or v in chosen for u, v in edges):
            return chosen
    return None


def vertex_cover_brute_force(g: Graph, k: int) -> VertexSet | None:
    """A cover of size exactly ``k`` found by exhaustive search, or None."""
    adj = _undirected(g, "k_vertex_cover_brute_force")
    _check_k(k)
    if k > len(adj):
        raise InvalidParameter(f"k={k} exceeds the number of vertices {len(adj)}")
    found = _brute_force_cover(adj, k)
    if found is None:
        return None
    # pad with unused vertices: every superset of a cover is a cover
    for v in sorted(adj):
        if len(found) >= k:
            break
        found.add(v)
    return sorted(found)


def k_vertex_cover_brute_force(g: Graph, k: int) -> bool:
    return vertex_cover_brute_force(g, k) is not None


# ---- degree branching strategy ------------------------------------------

def _max_degree_two_cover(adj: Adj) -> set[int]:
    """Optimal cover of a disjoint union of paths and cycles."""
    seen: set[int] = set()
    cover: set[int] = set()
    # paths first, walked from an endpoint
    for start in sorted(adj):
        if start in seen or len(adj[start]) != 1:
            continue
        walk = _walk(adj, start)
        seen.update(walk)
        cover.update(walk[1::2])
    for start in sorted(adj):
        if start in seen or not adj[start]:
            continue
        walk = _walk(adj, start)
        seen.update(walk)
        cover.update(walk[0::2])
        if len(walk) % 2:
            cover.add(walk[-1])
    return cover


def _walk(adj: Adj, start: int) -> list[int]:
    walk = [start]
    seen = {start}
    cur = start
    while True:
        nxt = [w for w in sorted(adj[cur]) if w not in seen]
        if not nxt:
            return walk
        cur = nxt[0]
        walk.append(cur)
        seen.add(cur)


def _dbs(adj: Adj, k: int) -> set[int] | None:
    adj = _strip_isolated(adj)
    if not adj:
        return set()
    if k <= 0:
        return None
    # degree-1 rule: the neighbor of a pendant vertex can always be taken
    for v in sorted(adj):
        if len(adj[v]) == 1:
            (u,) = adj[v]
            sub = _dbs(_without(adj, {u}), k - 1)
            return None if sub is None else sub | {u}
    v = min(adj, key=lambda x: (-len(adj[x]), x))
    degree = len(adj[v])
    if _edge_count(adj) > k * degree:
        return None
    if degree <= 2:
        cover = _max_degree_two_cover(adj)
        return cover if len(cover) <= k else None
    sub = _dbs(_without(adj, {v}), k - 1)
    if sub is not None:
        return sub | {v}
    if degree <= k:
        sub = _dbs(_without(adj, adj[v]), k - degree)
        if sub is not None:
            return sub | adj[v]
    return None


def vertex_cover_dbs(g: Graph, k: int) -> VertexSet | None:
    """Search tree that branches on a vertex v of degree >= 3: v or N(v).

    Once the maximum degree drops to 2 the rest is a union of paths and
    cycles and is solved directly.
    """
    adj = _undirected(g, "k_vertex_cover_dbs")
    _check_k(k)
    found = _dbs(adj, k)
    return None if found is None else sorted(found)


def k_vertex_cover_dbs(g: Graph, k: int) -> bool:
    return vertex_cover_dbs(g, k) is not None


# ---- refined search tree ------------------------------------------------

def _take(adj: Adj, k: int, forced) -> set[int] | None:
    forced = set(forced)
    if len(forced) > k:
        return None
    sub = _niedermeier(_without(adj, forced), k - len(forced))
    return None if sub is None else sub | forced


def _first(adj: Adj, k: int, *branches) -> set[int] | None:
    for forced in branches:
        found = _take(adj, k, forced)
        if found is not None:
            return found
    return None


def _niedermeier(adj: Adj, k: int) -> set[int] | None:
    adj = _strip_isolated(adj)
    if not adj:
        return set()
    if k <= 0:
        return None
    max_deg = max(len(nb) for nb in adj.values())
    if _edge_count(adj) > k * max_deg:
        return None
    by_degree = sorted(adj, key=lambda x: (len(adj[x]), x))

    # degree 1: take the neighbor
    v = by_degree[0]
    if len(adj[v]) == 1:
        return _take(adj, k, adj[v])

    # degree >= 5: v or N(v)
    big = [x for x in by_degree if len(adj[x]) >= 5]
    if big:
        v = big[0]
        return _first(adj, k, {v}, adj[v])

    # degree 2
    if len(adj[v]) == 2:
        a1, a2 = sorted(adj[v])
        if a2 in adj[a1]:
            return _take(adj, k, {a1, a2})
        common = adj[a1] & adj[a2]
        if adj[a1] == adj[a2] and len(common) == 2:
            (a,) = common - {v}
            return _take(adj, k, {v, a})
        return _first(adj, k, {a1, a2}, adj[a1] | adj[a2])

    # degree 3
    if len(adj[v]) == 3:
        a = sorted(adj[v])
        for x, y in combinations(a, 2):
            if y in adj[x]:
                (z,) = set(a) - {x, y}
                return _first(adj, k, adj[v], adj[z])
        for x, y in combinations(a, 2):
            shared = (adj[x] & adj[y]) - {v}
            if shared:
                return _first(adj, k, adj[v], {v, min(shared)})
        a1 = max(a, key=lambda x: (len(adj[x]), -x))
        a2, a3 = [x for x in a if x != a1]
        return _first(adj, k, adj[v], adj[a1], {a1} | adj[a2] | adj[a3])

    # every vertex has degree 4
    return _first(adj, k, {v}, adj[v])


def vertex_cover_niedermeier(g: Graph, k: int) -> VertexSet | None:
    """Refined search tree with case analysis on vertices of degree 1, 2, 3 and >= 5."""
    adj = _undirected(g, "k_vertex_cover_niedermeier")
    _check_k(k)
    found = _niedermeier(adj, k)
    return None if found is None else sorted(found)


def k_vertex_cover_niedermeier(g: Graph, k: int) -> bool:
    return vertex_cover_niedermeier(g, k) is not None


# ---- Buss-Goldsmith kernel ----------------------------------------------

def buss_kernel(adj: Adj, k: int) -> tuple[Adj, set[int], int] | None:
    """Apply the high-degree rule to a fixpoint.

    Returns ``(kernel, forced, budget)`` or ``None`` when the instance is
    rejected: budget exhausted, or more than ``k * budget`` edges left.
    """
    adj = _strip_isolated(adj)
    forced: set[int] = set()
    budget = k
    while True:
        high = sorted(v for v, nb in adj.items() if len(nb) > budget)
        if not high:
            break
        v = high[0]
        forced.add(v)
        budget -= 1
        if budget < 0:
            return None
        adj = _strip_isolated(_without(adj, {v}))
    if _edge_count(adj) > k * budget:
        return None
    return adj, forced, budget


def _edge_branching(adj: Adj, k: int) -> set[int] | None:
    """Exhaustive 2^k search: some endpoint of any edge is in the cover."""
    u = next((x for x in sorted(adj) if adj[x]), None)
    if u is None:
        return set()
    if k == 0:
        return None
    v = min(adj[u])
    for pick in (u, v):
        sub = _edge_branching(_without(adj, {pick}), k - 1)
        if sub is not None:
            return sub | {pick}
    return None


def vertex_cover_buss_goldsmith(g: Graph, k: int) -> VertexSet | None:
    """Kernelize with the degree > k rule, then search the kernel exhaustively
    by branching on the endpoints of an uncovered edge."""
    adj = _undirected(g, "k_vertex_cover_buss_goldsmith")
    _check_k(k)
    kernel = buss_kernel(adj, k)
    if kernel is None:
        return None
    adj, forced, budget = kernel
    found = _edge_branching(adj, budget)
    return None if found is None else sorted(found | forced)


def k_vertex_cover_buss_goldsmith(g: Graph, k: int) -> bool:
    return vertex_cover_buss_goldsmith(g, k) is not None


# ---- optimisation wrapper -----------------------------------------------

COVER_FINDERS = {
    "brute_force": vertex_cover_brute_force,
    "dbs": vertex_cover_dbs,
    "niedermeier": vertex_cover_niedermeier,
    "buss_goldsmith": vertex_cover_buss_goldsmith,
}


def minimum_vertex_cover(g: Graph, method: str = "niedermeier") -> VertexSet:
    """Smallest cover, found by raising k from 0 until ``method`` accepts."""
    finder = COVER_FINDERS[method]
    for k in range(len(g) + 1):
        found = finder(g, k)
        if found is not None:
            return found
    raise AssertionError("the whole vertex set is always a cover")
