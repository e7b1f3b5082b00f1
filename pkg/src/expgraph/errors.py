"""Exception hierarchy shared by every module."""


class GraphError(Exception):
    """Base class for all errors raised by expgraph."""


class UnknownVertex(GraphError, KeyError):
    def __init__(self, vertex):
        super().__init__(vertex)
        self.vertex = vertex

    def __str__(self):
        return f"unknown vertex: {self.vertex!r}"


class SelfLoopForbidden(GraphError, ValueError):
    pass


class WrongDirectedness(GraphError, TypeError):
    pass


class EmptyGraph(GraphError, ValueError):
    pass


class InvalidParameter(GraphError, ValueError):
    pass


class SameVertex(GraphError, ValueError):
    pass


class ParseError(GraphError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnknownAcronym(GraphError, LookupError):
    pass
