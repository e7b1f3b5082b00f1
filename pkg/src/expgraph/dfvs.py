"""Directed feedback vertex sets and elementary circuit enumeration."""
from __future__ import annotations

from collections import defaultdict

from .errors import InvalidParameter, WrongDirectedness
from .graph import Graph, VertexSet
from .ops import _scc

Succ = dict[int, set[int]]


def _directed(g: Graph, what: str) -> None:
    if not g.directed:
        raise WrongDirectedness(f"{what} needs a directed graph")


class _Digraph:
    """Mutable successor/predecessor maps used by the exact search."""

    __slots__ = ("succ", "pred")

    def __init__(self, succ: Succ, pred: Succ):
        self.succ = succ
        self.pred = pred

    @classmethod
    def of(cls, g: Graph) -> "_Digraph":
        succ = g.successor_map()
        pred: Succ = {v: set() for v in succ}
        for u, outs in succ.items():
            for v in outs:
                pred[v].add(u)
        return cls(succ, pred)

    def copy(self) -> "_Digraph":
        return _Digraph({v: set(s) for v, s in self.succ.items()},
                        {v: set(p) for v, p in self.pred.items()})

    def restrict(self, keep: set[int]) -> "_Digraph":
        return _Digraph({v: self.succ[v] & keep for v in keep},
                        {v: self.pred[v] & keep for v in keep})

    def delete(self, v: int) -> None:
        for w in self.succ.pop(v):
            if w != v:
                self.pred[w].discard(v)
        for w in self.pred.pop(v):
            if w != v:
                self.succ[w].discard(v)

    def bypass(self, v: int) -> None:
        """Remove v, joining each predecessor to each successor."""
        ins = self.pred[v] - {v}
        outs = self.succ[v] - {v}
        self.delete(v)
        for p in ins:
            for s in outs:
                self.succ[p].add(s)
                self.pred[s].add(p)


def _reduce(d: _Digraph, forced: set[int]) -> None:
    """Solution-preserving reductions, applied until nothing changes.

    * a self-loop vertex belongs to every feedback vertex set;
    * a vertex without predecessors or successors lies on no circuit;
    * a vertex with a single predecessor (or successor) u can be kept out
      of the solution, since u hits every circuit through it; it is
      bypassed.
    """
    changed = True
    while changed:
        changed = False
        for v in sorted(d.succ):
            if v not in d.succ:
                continue
            if v in d.succ[v]:
                forced.add(v)
                d.delete(v)
            elif not d.succ[v] or not d.pred[v]:
                d.delete(v)
            elif len(d.pred[v]) == 1 or len(d.succ[v]) == 1:
                d.bypass(v)
            else:
                continue
            changed = True


def _solve(d: _Digraph, budget: int) -> set[int] | None:
    """Minimum feedback vertex set of ``d`` if its size is at most ``budget``."""
    if budget < 0:
        return None
    forced: set[int] = set()
    _reduce(d, forced)
    budget -= len(forced)
    if budget < 0:
        return None
    if not d.succ:
        return forced

    comps = [c for c in _scc(d.succ) if len(c) > 1]
    if len(comps) > budget:
        return None
    if len(comps) > 1 or len(comps[0]) < len(d.succ):
        total = set(forced)
        # each remaining component needs at least one vertex
        spare = budget - len(comps)
        for comp in comps:
            part = _solve(d.restrict(set(comp)), spare + 1)
            if part is None:
                return None
            spare -= len(part) - 1
            total |= part
        return total

    v = min(d.succ, key=lambda x: (-len(d.succ[x]) - len(d.pred[x]), x))
    removed = d.copy()
    removed.delete(v)
    best = _solve(removed, budget - 1)
    if best is not None:
        best = best | {v}
        budget = len(best) - 1
    kept = d.copy()
    kept.bypass(v)
    alt = _solve(kept, budget)
    if alt is not None:
        best = alt
    return None if best is None else best | forced


def minimum_directed_fvs(g: Graph) -> VertexSet:
    """Smallest vertex set whose removal leaves the digraph acyclic.

    Branch and reduce: a chosen vertex is either deleted (it joins the
    solution) or kept, in which case it is bypassed; between branches the
    reductions of :func:`_reduce` run and strongly connected components are
    solved independently.
    """
    _directed(g, "minimum_directed_fvs")
    found = _solve(_Digraph.of(g), len(g))
    return sorted(found)


def maximum_directed_acyclic_subset(g: Graph) -> VertexSet:
    """Largest vertex set inducing an acyclic subgraph (complement of a minimum FVS)."""
    _directed(g, "maximum_directed_acyclic_subset")
    fvs = set(minimum_directed_fvs(g))
    return [v for v in sorted(g) if v not in fvs]


def _has_circuit(succ: Succ) -> bool:
    if any(v in outs for v, outs in succ.items()):
        return True
    return any(len(c) > 1 for c in _scc(succ))


def greedy_min_fvs(g: Graph) -> VertexSet:
    """Remove a vertex of highest total degree until no circuit is left."""
    _directed(g, "greedy_min_fvs")
    d = _Digraph.of(g)
    removed = []
    while _has_circuit(d.succ):
        v = min(d.succ, key=lambda x: (-len(d.succ[x]) - len(d.pred[x]), x))
        removed.append(v)
        d.delete(v)
    return sorted(removed)


def is_feedback_vertex_set(g: Graph, s) -> bool:
    drop = set(s)
    succ = {v: outs - drop for v, outs in g.successor_map().items() if v not in drop}
    return not _has_circuit(succ)


# ---- circuits -----------------------------------------------------------

class CircuitList(list):
    """Circuits as vertex lists starting at their smallest id.

    ``truncated`` is True when enumeration stopped at the requested cap.
    """

    truncated = False


def _circuits_from(s: int, adj: Succ, out: CircuitList, cap) -> bool:
    # Johnson's blocked-set search for circuits through s (s is minimal)
    blocked = {s}
    memo: dict[int, set[int]] = defaultdict(set)
    path = [s]
    stack = [iter(sorted(adj[s]))]
    closed = [False]
    while stack:
        for w in stack[-1]:
            if w == s:
                out.append(list(path))
                closed[-1] = True
                if cap is not None and len(out) >= cap:
                    return False
            elif w not in blocked:
                path.append(w)
                blocked.add(w)
                stack.append(iter(sorted(adj[w])))
                closed.append(False)
                break
        else:
            v = path.pop()
            stack.pop()
            found = closed.pop()
            if found:
                pending = [v]
                while pending:
                    u = pending.pop()
                    if u in blocked:
                        blocked.discard(u)
                        pending.extend(memo[u])
                        memo[u].clear()
            else:
                for w in adj[v]:
                    memo[w].add(v)
            if closed:
                closed[-1] = closed[-1] or found
    return True


def enum_all_circuits(g: Graph, cap: int | None = None) -> CircuitList:
    """Every elementary circuit exactly once; self-loops are length-1 circuits.

    Circuits are listed by their smallest vertex, then in depth-first order.
    With ``cap`` set, at most that many circuits are returned and
    ``result.truncated`` tells whether more exist.
    """
    _directed(g, "enum_all_circuits")
    if cap is not None and cap < 0:
        raise InvalidParameter("cap must be non-negative")
    # look one past the cap to know whether anything was cut off
    limit = None if cap is None else cap + 1
    out = CircuitList()
    succ = g.successor_map()
    remaining = set(succ)
    for s in sorted(succ):
        if s in succ[s]:
            out.append([s])
            if limit is not None and len(out) >= limit:
                break
        sub = {v: {w for w in succ[v] if w in remaining and w != v} for v in remaining}
        comp = next(c for c in _scc(sub) if s in c)
        if len(comp) > 1:
            members = set(comp)
            adj = {v: sub[v] & members for v in members}
            if not _circuits_from(s, adj, out, limit):
                break
        remaining.discard(s)
    if cap is not None and len(out) > cap:
        del out[cap:]
        out.truncated = True
    return out
