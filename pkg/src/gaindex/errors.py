"""Exception hierarchy shared by every module of the package."""


class GAIndexError(Exception):
    """Base class for all errors raised by gaindex."""


class GraphError(GAIndexError, ValueError):
    pass


class LoopEdge(GraphError):
    pass


class BadVertex(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class BadGraph6(GraphError):
    pass


class BadEdgeList(GraphError):
    pass


class BadDegree(GAIndexError, ValueError):
    pass


class EmptyGraph(GAIndexError, ValueError):
    pass


class BadParams(GAIndexError, ValueError):
    """Parameters outside an operation's domain."""


class NotApplicable(GAIndexError):
    """A bound or gate was evaluated outside the range where it is stated."""


class BadSpec(GAIndexError, ValueError):
    pass


class NoGraphs(GAIndexError):
    """An exhaustive search found no graph with the requested profile."""
