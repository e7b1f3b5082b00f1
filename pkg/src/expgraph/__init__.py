"""Exact exponential and parameterized graph algorithms.

Maximum independent set, minimum vertex cover, chromatic number,
directed feedback vertex set and minimal separators, together with
graph generators, Pajek/TGF/GraphViz I/O and a small graph toolbox.
"""
from .errors import (EmptyGraph, GraphError, InvalidParameter, ParseError,
                     SameVertex, SelfLoopForbidden, UnknownAcronym, UnknownVertex,
                     WrongDirectedness)
from .graph import Graph, Kind, VertexSet, create_graph, from_edges

__all__ = [
    "EmptyGraph", "GraphError", "InvalidParameter", "ParseError", "SameVertex",
    "SelfLoopForbidden", "UnknownAcronym", "UnknownVertex", "WrongDirectedness",
    "Graph", "Kind", "VertexSet", "create_graph", "from_edges",
]

__version__ = "0.1.0"
