"""Pajek ``.net`` read/write, TGF read and GraphViz ``.gv`` write.

The ``.net`` dialect handled here is the adjacency-list one::

    *Vertices 4
    1 "a"
    2 "b"
    3 "c"
    4 "d"
    *edgeslist
    1 2
    2 3 4
    3 4

``*arcslist`` instead of ``*edgeslist`` makes the graph directed.
"""
from __future__ import annotations

import os
import re

from .errors import ParseError, SelfLoopForbidden, UnknownVertex
from .graph import Graph

_HEADER = re.compile(r"\*vertices\s+(\d+)\s*$", re.IGNORECASE)
_VERTEX = re.compile(r'(-?\d+)\s+"([^"]*)"\s*$')
_MARKERS = {"*edgeslist": False, "*arcslist": True}


def _text(source) -> str:
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, (bytes, bytearray)):
        source = bytes(source).decode("utf-8")
    return source


def _lines(source):
    # splitlines handles both LF and CRLF
    for number, raw in enumerate(_text(source).splitlines(), start=1):
        yield number, raw.strip()


def read_net(source) -> Graph:
    """Parse a Pajek adjacency-list document (str, bytes or file object)."""
    lines = [(n, s) for n, s in _lines(source) if s]
    if not lines:
        raise ParseError("empty document")
    number, header = lines[0]
    m = _HEADER.match(header)
    if not m:
        raise ParseError(f"expected '*Vertices N', got {header!r}", number)
    expected = int(m.group(1))

    pos = 1
    declared: dict[int, tuple[str, int]] = {}
    while pos < len(lines) and not lines[pos][1].startswith("*"):
        number, line = lines[pos]
        vm = _VERTEX.match(line)
        if not vm:
            raise ParseError(f'expected <id> "<label>", got {line!r}', number)
        vid = int(vm.group(1))
        if vid in declared:
            raise ParseError(f"vertex {vid} declared twice", number)
        declared[vid] = (vm.group(2), number)
        pos += 1
    if len(declared) != expected:
        raise ParseError(f"header announces {expected} vertices, found {len(declared)}",
                         lines[0][0])
    if pos >= len(lines):
        raise ParseError("missing '*edgeslist' or '*arcslist' marker")
    number, marker = lines[pos]
    directed = _MARKERS.get(marker.lower())
    if directed is None:
        raise ParseError(f"unknown section marker {marker!r}", number)

    g = Graph(directed)
    ids = {}
    for file_id, (label, _) in declared.items():
        ids[file_id] = g.add_vertex(label)

    for number, line in lines[pos + 1:]:
        try:
            fields = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer id in adjacency line {line!r}", number) from None
        src, *dsts = fields
        for file_id in fields:
            if file_id not in ids:
                raise UnknownVertex(file_id)
        for dst in dsts:
            try:
                g.add_edge(ids[src], ids[dst])
            except SelfLoopForbidden:
                raise ParseError(f"self-loop {src} {dst} in an edge list", number) from None
    return g


def write_net(g: Graph) -> str:
    """Serialize ``g``; vertices are renumbered 1..n in iteration order."""
    order = g.vertices()
    number = {v: i for i, v in enumerate(order, start=1)}
    out = [f"*Vertices {len(order)}"]
    for v in order:
        label = g.label(v)
        if '"' in label or "\n" in label or "\r" in label:
            raise ValueError(f"label {label!r} cannot be written to a .net file")
        out.append(f'{number[v]} "{label}"')
    out.append("*arcslist" if g.directed else "*edgeslist")
    for v in order:
        if g.directed:
            targets = g.successors(v)
        else:
            targets = [w for w in g.neighbors(v) if number[w] > number[v]]
        if targets:
            targets.sort(key=number.__getitem__)
            out.append(" ".join(str(number[x]) for x in [v, *targets]))
    return "\n".join(out) + "\n"


def read_tgf(source) -> Graph:
    """Parse Trivial Graph Format into a directed graph."""
    g = Graph(directed=True)
    ids: dict[str, int] = {}
    in_edges = False
    for number, line in _lines(source):
        if not line:
            continue
        if line == "#":
            if in_edges:
                raise ParseError("second '#' separator", number)
            in_edges = True
            continue
        fields = line.split(None, 1)
        if not in_edges:
            key = fields[0]
            if key in ids:
                raise ParseError(f"node {key} declared twice", number)
            ids[key] = g.add_vertex(fields[1] if len(fields) > 1 else key)
            continue
        parts = line.split(None, 2)
        if len(parts) < 2:
            raise ParseError(f"edge line needs two node ids, got {line!r}", number)
        try:
            g.add_edge(ids[parts[0]], ids[parts[1]])
        except KeyError as exc:
            raise ParseError(f"edge references undeclared node {exc.args[0]}", number) from None
    if not in_edges:
        raise ParseError("missing '#' separator between nodes and edges")
    return g


def _gv_quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def write_gv(g: Graph) -> str:
    head, arrow = ("digraph G {", "->") if g.directed else ("graph G {", "--")
    out = [head]
    touched = set()
    for u, v in g.edges():
        touched.update((u, v))
        out.append(f"  {_gv_quote(g.label(u))} {arrow} {_gv_quote(g.label(v))};")
    for v in g:
        if v not in touched:
            out.append(f"  {_gv_quote(g.label(v))};")
    out.append("}")
    return "\n".join(out) + "\n"


def load(path) -> Graph:
    """Read a graph file, choosing the parser from the extension."""
    ext = os.path.splitext(str(path))[1].lower()
    with open(path, "rb") as fh:
        data = fh.read()
    if ext == ".tgf":
        return read_tgf(data)
    return read_net(data)


def save_net(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(write_net(g))


def save_gv(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(write_gv(g))
