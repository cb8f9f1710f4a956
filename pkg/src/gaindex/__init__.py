"""GA1 index, extremal families, degree-based lower bounds and their exhaustive certification."""

from .bounds import BoundId, BoundResult, best_lower_bound, best_lower_bound_for_graph
from .errors import GAIndexError
from .families import FamilyKind, FamilySpec
from .formats import parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .graph import DegreeSummary, Graph, degree_summary, from_edge_list
from .index import ga1

__version__ = "0.1.0"

__all__ = [
    "BoundId", "BoundResult", "DegreeSummary", "FamilyKind", "FamilySpec", "GAIndexError", "Graph",
    "best_lower_bound", "best_lower_bound_for_graph", "degree_summary", "from_edge_list", "ga1",
    "parse_edge_list", "parse_graph6", "write_edge_list", "write_graph6",
]
