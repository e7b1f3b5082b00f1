"""Small classic graphs used as fixtures and test instances."""
from __future__ import annotations

from itertools import combinations

from .graph import Graph, from_edges


def empty_graph(n: int, directed: bool = False) -> Graph:
    return from_edges(n, [], directed)


def complete_graph(n: int) -> Graph:
    return from_edges(n, combinations(range(n), 2))


def complete_digraph(n: int) -> Graph:
    return from_edges(n, [(u, v) for u in range(n) for v in range(n) if u != v], True)


def path_graph(n: int, labels=None) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)], labels=labels)


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def directed_cycle(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)], True)


def star_graph(leaves: int) -> Graph:
    """Center 0 joined to leaves 1..leaves."""
    return from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(p: int, q: int) -> Graph:
    return from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def cocktail_party(pairs: int) -> Graph:
    """Complete multipartite graph K_{pairs x 2}: all edges except 2i -- 2i+1."""
    n = 2 * pairs
    return from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if u // 2 != v // 2])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner)


def listing_graph() -> Graph:
    """The four-vertex example a-b, b-c, b-d, c-d."""
    return from_edges(4, [(0, 1), (1, 2), (1, 3), (2, 3)], labels="abcd")
