"""The first geometric-arithmetic index and the classic min/max-degree bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadDegree, BadParams, EmptyGraph
from .graph import Graph, degree_summary, is_degree_bipartition, is_regular

TOL = 1e-9


def edge_weight(du: int, dv: int) -> float:
    """Ratio of geometric to arithmetic mean of the end degrees, 2*sqrt(du*dv)/(du+dv)."""
    if du < 1 or dv < 1:
        raise BadDegree(f"edge weight needs degrees >= 1, got ({du}, {dv})")
    if du == dv:
        return 1.0
    return 2.0 * math.sqrt(du * dv) / (du + dv)


def ga1(g: Graph) -> float:
    """Sum of edge weights over all edges, accumulated in edge-rank order.

    Isolated vertices contribute nothing; the caller sees them through
    ``degree_summary(g).delta == 0``.
    """
    degs = g.degrees
    total = 0.0
    empty = True
    for u, v in g.edges():
        total += edge_weight(degs[u], degs[v])
        empty = False
    if empty:
        raise EmptyGraph("GA1 is undefined on a graph without edges")
    return total


def f_lemma(t: float) -> float:
    if t < 0:
        raise BadParams(f"f is defined on t >= 0, got {t}")
    return 2.0 * t / (1.0 + t * t)


def g_ratio(x: float, y: float) -> float:
    """Real-argument form of ``edge_weight``; equals ``f_lemma(sqrt(x / y))``."""
    if x <= 0 or y <= 0:
        raise BadParams(f"g needs positive arguments, got ({x}, {y})")
    return 2.0 * math.sqrt(x * y) / (x + y)


@dataclass(frozen=True)
class ClassicBounds:
    lower: float
    upper: float
    m: int
    delta: int
    Delta: int


def classic_bounds(m: int, delta: int, Delta: int) -> ClassicBounds:
    if m < 1 or not 1 <= delta <= Delta:
        raise BadParams(f"classic bounds need m >= 1 and 1 <= delta <= Delta, got m={m}, ({delta}, {Delta})")
    return ClassicBounds(m * edge_weight(delta, Delta), float(m), m, delta, Delta)


def classic_lower_equality(g: Graph) -> bool:
    """Structural test for GA1 meeting the classic lower bound: regular, or degree-bipartitioned."""
    s = degree_summary(g)
    if s.m < 1:
        raise EmptyGraph("GA1 is undefined on a graph without edges")
    if s.delta < 1:
        raise BadDegree("classic bound equality needs minimum degree >= 1")
    return is_regular(g) or is_degree_bipartition(g, s.delta, s.Delta)
