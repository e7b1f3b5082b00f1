"""Seeded random and structured graph generators.

All random generators draw from :class:`random.Random` seeded with the
given integer, so identical parameters and seed give identical graphs.
Generated vertices are numbered ``0..n-1`` with labels equal to the id.
"""
from __future__ import annotations

import math
import random
from itertools import combinations

from .errors import InvalidParameter
from .graph import Graph, from_edges


def _rng(seed) -> random.Random:
    return random.Random(seed)


def _check_probability(name, p):
    if not 0.0 <= p <= 1.0:
        raise InvalidParameter(f"{name} must lie in [0, 1], got {p}")


def _check_positive(**params):
    for name, value in params.items():
        if value < 1:
            raise InvalidParameter(f"{name} must be positive, got {value}")


def erdos_renyi(n: int, p: float, seed=0) -> Graph:
    """G(n, p): each of the n(n-1)/2 pairs is an edge with probability p."""
    _check_positive(n=n)
    _check_probability("p", p)
    rng = _rng(seed)
    return from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def barabasi_albert(n0: int, m: int, steps: int, seed=0) -> Graph:
    """Preferential attachment grown from ``n0`` isolated vertices.

    Every step adds one vertex joined to ``m`` distinct existing vertices,
    each picked with probability proportional to ``degree + 1``.
    """
    _check_positive(n0=n0, m=m)
    if m > n0:
        raise InvalidParameter(f"m={m} exceeds the {n0} seed vertices")
    if steps < 0:
        raise InvalidParameter("steps must be non-negative")
    rng = _rng(seed)
    g = from_edges(n0, [])
    for _ in range(steps):
        existing = g.vertices()
        weights = [g.degree(v) + 1 for v in existing]
        chosen: list[int] = []
        while len(chosen) < m:
            # sample without replacement by zeroing picked weights
            i = rng.choices(range(len(existing)), weights=weights)[0]
            chosen.append(existing[i])
            weights[i] = 0
        v = g.add_vertex()
        for u in chosen:
            g.add_edge(u, v)
    return g


def k_regular_ring(n: int, k: int) -> Graph:
    """Vertex i adjacent to i +- 1, ..., i +- k (mod n)."""
    _check_positive(n=n, k=k)
    if n <= 2 * k:
        raise InvalidParameter(f"ring needs n > 2k, got n={n}, k={k}")
    return from_edges(n, [(i, (i + j) % n) for i in range(n) for j in range(1, k + 1)])


def watts_strogatz(n: int, k: int, beta: float, seed=0) -> Graph:
    """Small world: the k-regular ring with each edge rewired with probability beta.

    A rewired edge keeps its first endpoint and moves its second one to a
    uniformly chosen vertex that creates neither a loop nor a duplicate;
    the edge is left alone when no such vertex exists.
    """
    _check_probability("beta", beta)
    g = k_regular_ring(n, k)
    rng = _rng(seed)
    for u, v in [(i, (i + j) % n) for j in range(1, k + 1) for i in range(n)]:
        if rng.random() >= beta:
            continue
        candidates = [w for w in range(n) if w != u and not g.has_edge(u, w)]
        if not candidates:
            continue
        g.remove_edge(u, v)
        g.add_edge(u, rng.choice(candidates))
    return g


def grid_2d(rows: int, cols: int) -> Graph:
    """Rectangular lattice; vertex ``r*cols + c`` sits at row r, column c."""
    _check_positive(rows=rows, cols=cols)
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return from_edges(rows * cols, edges)


def kleinberg(rows: int, cols: int, r: float = 2.0, seed=0) -> Graph:
    """Kleinberg small world on a rows x cols lattice.

    On top of the lattice every vertex u draws one long-range contact v != u
    with probability proportional to ``d(u, v) ** -r`` (Manhattan distance).
    Contacts that duplicate an existing edge are absorbed.
    """
    _check_positive(rows=rows, cols=cols)
    if rows * cols < 2:
        raise InvalidParameter("Kleinberg lattice needs at least two vertices")
    if r < 0:
        raise InvalidParameter(f"clustering exponent must be non-negative, got {r}")
    g = grid_2d(rows, cols)
    rng = _rng(seed)
    n = rows * cols
    for u in range(n):
        ur, uc = divmod(u, cols)
        targets, weights = [], []
        for v in range(n):
            if v == u:
                continue
            vr, vc = divmod(v, cols)
            targets.append(v)
            weights.append((abs(ur - vr) + abs(uc - vc)) ** -r)
        g.add_edge(u, rng.choices(targets, weights=weights)[0])
    return g


def _pair_from_index(index: int) -> tuple[int, int]:
    # inverse of index = v*(v-1)/2 + u for u < v
    v = (1 + math.isqrt(1 + 8 * index)) // 2
    u = index - v * (v - 1) // 2
    return u, v


def eppstein_power_law(n: int, m: int, iterations: int = 1000, seed=0) -> Graph:
    """Eppstein-Wang steady-state power-law model.

    Starts from ``m`` uniformly random edges; each iteration picks a random
    edge and tries to move it between two endpoints drawn with probability
    proportional to degree. Moves that would create a loop or a duplicate
    are skipped, so the edge count never changes.
    """
    _check_positive(n=n)
    if not 0 <= m <= n * (n - 1) // 2:
        raise InvalidParameter(f"m={m} edges do not fit on {n} vertices")
    if iterations < 0:
        raise InvalidParameter("iterations must be non-negative")
    rng = _rng(seed)
    picks = sorted(rng.sample(range(n * (n - 1) // 2), m))
    g = from_edges(n, [_pair_from_index(i) for i in picks])
    if m == 0:
        return g
    edges = g.edges()
    for _ in range(iterations):
        i = rng.randrange(m)
        # a random end of a random edge is a degree-proportional vertex
        u = rng.choice(edges[rng.randrange(m)])
        w = rng.choice(edges[rng.randrange(m)])
        x, y = edges[i]
        if u == w or g.has_edge(u, w):
            continue
        g.remove_edge(x, y)
        g.add_edge(u, w)
        edges[i] = (min(u, w), max(u, w))
    return g


def k_regular_random(n: int, k: int, seed=0, max_attempts: int = 100_000) -> Graph:
    """Random k-regular simple graph from the pairing model.

    Points are matched uniformly; a matching with a loop or a double edge
    is thrown away and redrawn.
    """
    _check_positive(n=n)
    if k < 0 or k >= n:
        raise InvalidParameter(f"need 0 <= k < n, got k={k}, n={n}")
    if (n * k) % 2:
        raise InvalidParameter(f"n*k must be even, got n={n}, k={k}")
    rng = _rng(seed)
    points = [v for v in range(n) for _ in range(k)]
    for _ in range(max_attempts):
        rng.shuffle(points)
        pairs = set()
        ok = True
        for a, b in zip(points[::2], points[1::2]):
            e = (a, b) if a < b else (b, a)
            if a == b or e in pairs:
                ok = False
                break
            pairs.add(e)
        if ok:
            return from_edges(n, sorted(pairs))
    raise InvalidParameter(f"no simple {k}-regular pairing found in {max_attempts} attempts")
