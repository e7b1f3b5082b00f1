"""Maximum independent set: predicates, a greedy heuristic and exact solvers.

Directed inputs are handled through their underlying undirected graph.
All solvers break ties by smallest vertex id and return sorted id lists.
Internally the solvers work on adjacency dictionaries ``{v: set(N(v))}``
which they copy before mutating.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .errors import UnknownVertex
from .graph import Graph, VertexSet

Adj = dict[int, set[int]]


def _members(g: Graph, s) -> list[int]:
    members = list(dict.fromkeys(s))
    for v in members:
        if v not in g:
            raise UnknownVertex(v)
    return members


def is_independent_set(g: Graph, s) -> bool:
    members = _members(g, s)
    inside = set(members)
    adj = g.adjacency()
    return all(not (adj[v] & inside) for v in members)


def is_maximal_independent_set(g: Graph, s) -> bool:
    """Independent and not extendable by any outside vertex."""
    if not is_independent_set(g, s):
        return False
    inside = set(s)
    adj = g.adjacency()
    return all(adj[v] & inside for v in adj if v not in inside)


# ---- adjacency helpers --------------------------------------------------

def _delete(adj: Adj, vs) -> None:
    """Remove vertices ``vs`` from ``adj`` in place."""
    vs = set(vs)
    for v in vs:
        for w in adj.pop(v):
            if w not in vs:
                adj[w].discard(v)


def _without(adj: Adj, vs) -> Adj:
    vs = set(vs)
    return {v: nb - vs for v, nb in adj.items() if v not in vs}


def _closed(adj: Adj, v: int) -> set[int]:
    return adj[v] | {v}


# ---- heuristic ----------------------------------------------------------

def mis_greedy(g: Graph) -> VertexSet:
    """Maximal independent set: repeatedly take a minimum-degree vertex.

    The chosen vertex and its neighbors are deleted after each pick.
    """
    adj = g.adjacency()
    # bucket queue keyed by current degree
    buckets: dict[int, set[int]] = {}
    for v, nb in adj.items():
        buckets.setdefault(len(nb), set()).add(v)
    result = []
    while adj:
        d = min(k for k, b in buckets.items() if b)
        v = min(buckets[d])
        result.append(v)
        gone = _closed(adj, v)
        touched = set()
        for x in gone:
            buckets[len(adj[x])].discard(x)
            touched |= adj[x]
        touched -= gone
        for y in touched:
            buckets[len(adj[y])].discard(y)
        _delete(adj, gone)
        for y in touched:
            buckets.setdefault(len(adj[y]), set()).add(y)
    return sorted(result)


# ---- brute force --------------------------------------------------------

def mis_brute_force(g: Graph) -> VertexSet:
    """Try subsets from the largest size down; the first independent one wins.

    Subsets of equal size are scanned in lexicographic id order, so the
    lexicographically smallest maximum independent set is returned.
    """
    order = sorted(g)
    adj = g.adjacency()
    for size in range(len(order), 0, -1):
        for subset in combinations(order, size):
            chosen = set(subset)
            if all(not (adj[v] & chosen) for v in subset):
                return list(subset)
    return []


# ---- branching on maximum degree ----------------------------------------

def _max_degree_branch(adj: Adj) -> set[int]:
    isolated = {v for v, nb in adj.items() if not nb}
    if isolated:
        rest = _without(adj, isolated)
        return isolated | (_max_degree_branch(rest) if rest else set())
    if not adj:
        return set()
    v = min(adj, key=lambda x: (-len(adj[x]), x))
    taken = {v} | _max_degree_branch(_without(adj, _closed(adj, v)))
    # excluding v can only win if the remaining graph has room for more
    if len(adj) - 1 <= len(taken):
        return taken
    skipped = _max_degree_branch(_without(adj, {v}))
    return skipped if len(skipped) > len(taken) else taken


def mis_max_degree_branching(g: Graph) -> VertexSet:
    """Exact: branch on a maximum-degree vertex (out, or in with N[v] deleted)."""
    return sorted(_max_degree_branch(g.adjacency()))


# ---- Moon-Moser maximal set enumeration ----------------------------------

def _branch_set(adj: Adj) -> list[int]:
    # closed neighborhood of a minimum-degree vertex, in id order
    v = min(adj, key=lambda x: (len(adj[x]), x))
    return sorted(_closed(adj, v))


def maximal_independent_sets(adj: Adj) -> Iterator[set[int]]:
    """Yield every maximal independent set of ``adj``.

    Each maximal set contains a vertex of N[v] for any v, so branching on
    the closed neighborhood of a minimum-degree vertex covers them all.
    A set may be yielded more than once.
    """
    stack: list[tuple[Adj, frozenset[int]]] = [(adj, frozenset())]
    while stack:
        cur, chosen = stack.pop()
        if not cur:
            yield set(chosen)
            continue
        for u in reversed(_branch_set(cur)):
            stack.append((_without(cur, _closed(cur, u)), chosen | {u}))


def _moon_moser_recursive(adj: Adj, chosen: list[int], best: list[int]) -> list[int]:
    if not adj:
        return list(chosen) if len(chosen) > len(best) else best
    if len(chosen) + len(adj) <= len(best):
        return best
    for u in _branch_set(adj):
        chosen.append(u)
        best = _moon_moser_recursive(_without(adj, _closed(adj, u)), chosen, best)
        chosen.pop()
    return best


def _moon_moser_iterative(adj: Adj) -> list[int]:
    best: list[int] = []
    stack: list[tuple[Adj, tuple[int, ...]]] = [(adj, ())]
    while stack:
        cur, chosen = stack.pop()
        if not cur:
            if len(chosen) > len(best):
                best = list(chosen)
            continue
        if len(chosen) + len(cur) <= len(best):
            continue
        # pushed in reverse so children are explored in id order
        for u in reversed(_branch_set(cur)):
            stack.append((_without(cur, _closed(cur, u)), chosen + (u,)))
    return best


def mis_moon_moser(g: Graph, mode: str = "recursive") -> VertexSet:
    """Exact MIS by enumerating maximal independent sets.

    ``mode`` is ``"recursive"`` or ``"iterative"`` (explicit stack); both
    explore the same branches in the same order and return the same set.
    """
    adj = g.adjacency()
    if mode == "recursive":
        best = _moon_moser_recursive(adj, [], [])
    elif mode == "iterative":
        best = _moon_moser_iterative(adj)
    else:
        raise ValueError(f"mode must be 'recursive' or 'iterative', got {mode!r}")
    return sorted(best)


# ---- measure & conquer branch-and-reduce --------------------------------

class _FGK:
    """Branch-and-reduce with folding, domination and mirror branching.

    Folded vertices get fresh negative ids; they are unfolded on the way
    back up so the returned set lives in the original id space.
    """

    def __init__(self):
        self._fresh = -1

    def _new_id(self) -> int:
        v = self._fresh
        self._fresh -= 1
        return v

    def solve(self, adj: Adj) -> set[int]:
        if len(adj) <= 1:
            return set(adj)

        comps = _components(adj)
        if len(comps) > 1:
            out: set[int] = set()
            for comp in comps:
                out |= self.solve({v: adj[v] for v in comp})
            return out

        # a vertex of degree <= 1 is always safe to take
        for v in sorted(adj):
            if len(adj[v]) <= 1:
                return {v} | self.solve(_without(adj, _closed(adj, v)))

        # domination: N[w] subset of N[v] means v can be discarded
        for v in sorted(adj):
            closed_v = _closed(adj, v)
            for w in sorted(adj[v]):
                if adj[w] | {w} <= closed_v:
                    return self.solve(_without(adj, {v}))

        for v in sorted(adj):
            if len(adj[v]) == 2:
                return self._fold(adj, v)

        v = min(adj, key=lambda x: (-len(adj[x]), _edges_within(adj, adj[x]), x))
        mirrors = _mirrors(adj, v)
        taken = {v} | self.solve(_without(adj, _closed(adj, v)))
        if len(adj) - 1 - len(mirrors) <= len(taken):
            return taken
        skipped = self.solve(_without(adj, {v} | mirrors))
        return skipped if len(skipped) > len(taken) else taken

    def _fold(self, adj: Adj, v: int) -> set[int]:
        # after domination the two neighbors of v are non-adjacent
        u1, u2 = sorted(adj[v])
        merged = self._new_id()
        outer = (adj[u1] | adj[u2]) - {v, u1, u2}
        folded = _without(adj, {v, u1, u2})
        folded[merged] = set(outer)
        for x in outer:
            folded[x].add(merged)
        sol = self.solve(folded)
        if merged in sol:
            sol.discard(merged)
            return sol | {u1, u2}
        return sol | {v}


def _components(adj: Adj) -> list[set[int]]:
    seen: set[int] = set()
    comps = []
    for start in sorted(adj):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(comp)
    return comps


def _edges_within(adj: Adj, s: set[int]) -> int:
    return sum(len(adj[x] & s) for x in s) // 2


def _mirrors(adj: Adj, v: int) -> set[int]:
    """Vertices u at distance 2 from v such that N(v) - N(u) is a clique."""
    nv = adj[v]
    second = set().union(*(adj[x] for x in nv)) - nv - {v}
    out = set()
    for u in second:
        rest = nv - adj[u]
        if all(b in adj[a] for a, b in combinations(rest, 2)):
            out.add(u)
    return out


def mis_fgk(g: Graph) -> VertexSet:
    """Exact MIS by measure & conquer style branch-and-reduce."""
    return sorted(_FGK().solve(g.adjacency()))


def independence_number(g: Graph) -> int:
    return len(mis_fgk(g))
