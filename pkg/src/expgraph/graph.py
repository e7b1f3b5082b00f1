"""Simple directed/undirected graph with stable integer vertex ids.

Vertices are dense non-negative integers handed out by the graph's own
allocator; each carries a text label (the decimal id unless given).
Vertex, edge and neighbor iteration is deterministic: insertion order
for vertices and edges, ascending id for neighborhoods.
"""
from __future__ import annotations

import enum
from typing import Iterable, Iterator

from .errors import SelfLoopForbidden, UnknownVertex

VertexSet = list  # list[int], sorted by id, duplicate-free


class Kind(enum.Enum):
    DIRECTED = "directed"
    UNDIRECTED = "undirected"


class Graph:
    """A simple graph (no parallel edges).

    Undirected graphs reject self-loops; directed graphs allow them.
    """

    __slots__ = ("_directed", "_labels", "_succ", "_pred", "_edges", "_next_id")

    def __init__(self, directed: bool = False) -> None:
        self._directed = bool(directed)
        self._labels: dict[int, str] = {}
        self._succ: dict[int, dict[int, None]] = {}
        # for undirected graphs _pred is _succ (symmetric adjacency)
        self._pred: dict[int, dict[int, None]] = {} if directed else self._succ
        self._edges: dict[tuple[int, int], None] = {}
        self._next_id = 0

    # ---- basic properties -------------------------------------------------

    @property
    def directed(self) -> bool:
        return self._directed

    @property
    def kind(self) -> Kind:
        return Kind.DIRECTED if self._directed else Kind.UNDIRECTED

    def __len__(self) -> int:
        return len(self._labels)

    def __contains__(self, v) -> bool:
        return v in self._labels

    def __iter__(self) -> Iterator[int]:
        return iter(self._labels)

    def number_of_vertices(self) -> int:
        return len(self._labels)

    def number_of_edges(self) -> int:
        return len(self._edges)

    def vertices(self) -> list[int]:
        return list(self._labels)

    def edges(self) -> list[tuple[int, int]]:
        """Edges in insertion order; undirected edges as (smaller id, larger id)."""
        return list(self._edges)

    # ---- labels -----------------------------------------------------------

    def label(self, v: int) -> str:
        self._check(v)
        return self._labels[v]

    def set_label(self, v: int, label: str) -> None:
        self._check(v)
        self._labels[v] = str(label)

    def labels(self) -> dict[int, str]:
        return dict(self._labels)

    def find(self, label: str) -> int:
        """Return the first vertex (in iteration order) carrying ``label``."""
        for v, lab in self._labels.items():
            if lab == label:
                return v
        raise UnknownVertex(label)

    # ---- mutation ---------------------------------------------------------

    def add_vertex(self, label: str | None = None, vid: int | None = None) -> int:
        """Add a vertex and return its id.

        Without ``vid`` the next free id is allocated. An explicit ``vid``
        that already exists is left untouched (its label is kept).
        """
        if vid is None:
            vid = self._next_id
        elif not isinstance(vid, int) or vid < 0:
            raise ValueError(f"vertex ids are non-negative integers, got {vid!r}")
        if vid in self._labels:
            return vid
        self._labels[vid] = str(vid) if label is None else str(label)
        self._succ[vid] = {}
        if self._directed:
            self._pred[vid] = {}
        self._next_id = max(self._next_id, vid + 1)
        return vid

    def add_vertices(self, count: int) -> list[int]:
        return [self.add_vertex() for _ in range(count)]

    def add_edge(self, u: int, v: int) -> None:
        self._check(u)
        self._check(v)
        if self._directed:
            key = (u, v)
        else:
            if u == v:
                raise SelfLoopForbidden(f"self-loop on {u} in an undirected graph")
            key = (u, v) if u < v else (v, u)
        if key in self._edges:
            return
        self._edges[key] = None
        self._succ[u][v] = None
        self._pred[v][u] = None

    def add_edges_from(self, pairs: Iterable[tuple[int, int]]) -> None:
        for u, v in pairs:
            self.add_edge(u, v)

    def remove_edge(self, u: int, v: int) -> None:
        key = (u, v) if self._directed or u < v else (v, u)
        if key not in self._edges:
            raise KeyError(f"no edge {u}-{v}")
        del self._edges[key]
        del self._succ[u][v]
        del self._pred[v][u]

    def remove_vertex(self, v: int) -> None:
        self._check(v)
        for w in list(self._succ[v]):
            self.remove_edge(v, w)
        if self._directed:
            for w in list(self._pred[v]):
                self.remove_edge(w, v)
            del self._pred[v]
        del self._succ[v]
        del self._labels[v]

    def remove_vertices_from(self, vs: Iterable[int]) -> None:
        for v in list(vs):
            self.remove_vertex(v)

    # ---- queries ----------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._succ and v in self._succ[u]

    def successors(self, v: int) -> list[int]:
        self._check(v)
        return sorted(self._succ[v])

    def predecessors(self, v: int) -> list[int]:
        self._check(v)
        return sorted(self._pred[v])

    def neighbors(self, v: int) -> VertexSet:
        """Open neighborhood; successors and predecessors for digraphs."""
        self._check(v)
        if not self._directed:
            return sorted(self._succ[v])
        out = set(self._succ[v])
        out.update(self._pred[v])
        out.discard(v)
        return sorted(out)

    def degree(self, v: int) -> int:
        """Number of incident edge ends; a directed self-loop counts twice."""
        self._check(v)
        if self._directed:
            return len(self._succ[v]) + len(self._pred[v])
        return len(self._succ[v])

    def in_degree(self, v: int) -> int:
        self._check(v)
        return len(self._pred[v])

    def out_degree(self, v: int) -> int:
        self._check(v)
        return len(self._succ[v])

    def has_self_loop(self, v: int) -> bool:
        return self._directed and v in self._succ.get(v, ())

    def adjacency(self) -> dict[int, set[int]]:
        """Undirected-view adjacency sets (self-loops dropped); a fresh copy."""
        adj = {v: set(self._succ[v]) for v in self._labels}
        if self._directed:
            for v in self._labels:
                adj[v].update(self._pred[v])
                adj[v].discard(v)
        return adj

    def successor_map(self) -> dict[int, set[int]]:
        """Out-adjacency sets, self-loops kept; a fresh copy."""
        return {v: set(self._succ[v]) for v in self._labels}

    # ---- copying / comparison ----------------------------------------------

    def copy(self) -> "Graph":
        g = Graph(self._directed)
        for v, lab in self._labels.items():
            g.add_vertex(lab, vid=v)
        for u, v in self._edges:
            g.add_edge(u, v)
        g._next_id = self._next_id
        return g

    def labelled_edges(self) -> set[tuple[str, str]]:
        """Edge set expressed with labels; undirected pairs are sorted."""
        lab = self._labels
        if self._directed:
            return {(lab[u], lab[v]) for u, v in self._edges}
        return {tuple(sorted((lab[u], lab[v]))) for u, v in self._edges}

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._directed == other._directed
            and self._labels == other._labels
            and set(self._edges) == set(other._edges)
        )

    __hash__ = None  # mutable

    def __repr__(self) -> str:
        kind = "directed" if self._directed else "undirected"
        return f"<Graph {kind} |V|={len(self)} |E|={self.number_of_edges()}>"

    def _check(self, v) -> None:
        if v not in self._labels:
            raise UnknownVertex(v)


def create_graph(kind: Kind | str = Kind.UNDIRECTED) -> Graph:
    kind = Kind(kind)
    return Graph(directed=kind is Kind.DIRECTED)


def from_edges(n: int, edges: Iterable[tuple[int, int]], directed: bool = False,
               labels: Iterable[str] | None = None) -> Graph:
    """Graph on vertices 0..n-1 with the given edges."""
    g = Graph(directed)
    labels = list(labels) if labels is not None else [None] * n
    for i in range(n):
        g.add_vertex(labels[i])
    g.add_edges_from(edges)
    return g
