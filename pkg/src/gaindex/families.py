"""Extremal graph families: constructors, membership tests and closed-form GA1 values."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

import networkx as nx
import numpy as np

from .errors import BadParams
from .graph import Graph, complete_graph, degree_summary, from_edge_list, rank_pairs


class FamilyKind(str, enum.Enum):
    GDD_case1 = "GDD_case1"
    GDD_case2 = "GDD_case2"
    GDD_case3 = "GDD_case3"
    GDD_case4 = "GDD_case4"
    CompleteBipartite = "CompleteBipartite"
    HDelta = "HDelta"
    TwoHub = "TwoHub"
    Star = "Star"
    Complete = "Complete"
    ExactGraph = "ExactGraph"


GDD_KINDS = (FamilyKind.GDD_case1, FamilyKind.GDD_case2, FamilyKind.GDD_case3, FamilyKind.GDD_case4)


class Verdict(str, enum.Enum):
    GDD_GREATER = "GDD_GREATER"
    K_GREATER = "K_GREATER"
    UNDECIDED = "UNDECIDED"


def _check_profile(delta: int, Delta: int) -> None:
    if not 1 <= delta <= Delta:
        raise BadParams(f"need 1 <= delta <= Delta, got ({delta}, {Delta})")


def gdd_case(delta: int, Delta: int) -> FamilyKind:
    """Which of the four edge-minimal cases applies to the profile (delta, Delta)."""
    _check_profile(delta, Delta)
    if delta == Delta:
        return FamilyKind.GDD_case1
    if Delta * (delta + 1) % 2 == 0:
        return FamilyKind.GDD_case2
    if delta < Delta - 1:
        return FamilyKind.GDD_case3
    return FamilyKind.GDD_case4


@dataclass(frozen=True)
class FamilySpec:
    kind: FamilyKind
    delta: int | None = None
    Delta: int | None = None
    graph: Graph | None = None

    def describe(self) -> str:
        k, d, D = self.kind, self.delta, self.Delta
        if k in GDD_KINDS:
            return f"G[{d},{D}] ({k.value[-5:]})"
        if k is FamilyKind.CompleteBipartite:
            return f"K[{d},{D}]"
        if k is FamilyKind.HDelta:
            return f"H[{D}]"
        if k is FamilyKind.TwoHub:
            return f"two-hub[{d},{D}]"
        if k is FamilyKind.Star:
            return f"star K[1,{D}]"
        if k is FamilyKind.Complete:
            return f"complete K[{D + 1}]"
        return f"exact graph n={self.graph.n}"

    def contains(self, g: Graph) -> bool:
        k = self.kind
        if k in GDD_KINDS:
            spec = gdd_membership(g, self.delta, self.Delta)
            return spec is not None and spec.kind is k
        if k is FamilyKind.Star:
            s = degree_summary(g)
            return s.degree_multiset == (1,) * self.Delta + (self.Delta,)
        if k is FamilyKind.Complete:
            return g.n == self.Delta + 1 and g.m == g.n * (g.n - 1) // 2
        if k is FamilyKind.CompleteBipartite:
            return is_isomorphic(g, construct_complete_bipartite(self.delta, self.Delta))
        if k is FamilyKind.HDelta:
            return is_isomorphic(g, construct_h_delta(self.Delta))
        if k is FamilyKind.TwoHub:
            return is_isomorphic(g, construct_two_hub(self.delta, self.Delta))
        return is_isomorphic(g, self.graph)


def gdd_family(delta: int, Delta: int) -> FamilySpec:
    return FamilySpec(gdd_case(delta, Delta), delta, Delta)


def gdd_membership(g: Graph, delta: int, Delta: int) -> FamilySpec | None:
    """The matching edge-minimal case for ``g``, or None when ``g`` is not a member.

    Cases 2-4 are decided by the degree multiset alone; case 1 also checks
    that the graph is complete.
    """
    _check_profile(delta, Delta)
    s = degree_summary(g)
    if s.delta != delta or s.Delta != Delta or s.n != Delta + 1:
        return None
    kind = gdd_case(delta, Delta)
    degs = s.degree_multiset
    if kind is FamilyKind.GDD_case1:
        ok = s.m == s.n * (s.n - 1) // 2
    elif kind is FamilyKind.GDD_case2:
        ok = degs == (delta,) * Delta + (Delta,)
    elif kind is FamilyKind.GDD_case3:
        ok = degs == (delta,) * (Delta - 1) + (delta + 1, Delta)
    else:
        ok = degs == (delta,) * (Delta - 1) + (Delta, Delta)
    return FamilySpec(kind, delta, Delta) if ok else None


def _ring_distance(i: int, j: int, size: int) -> int:
    d = abs(i - j)
    return min(d, size - d)


def construct_gdd(delta: int, Delta: int) -> Graph:
    """One member of the edge-minimal family on vertices 0..Delta, hub at vertex 0.

    Ring vertices 1..Delta are joined by circular distance; parity of
    (delta, Delta) selects the extra matching needed to lift every ring
    vertex to degree delta.
    """
    _check_profile(delta, Delta)
    if delta == Delta:
        return complete_graph(Delta + 1)
    edges = [(0, i) for i in range(1, Delta + 1)]
    ring = range(1, Delta + 1)
    if delta % 2 == 1:
        reach = (delta - 1) // 2
        edges += [(i, j) for i in ring for j in ring if i < j and _ring_distance(i, j, Delta) <= reach]
    elif Delta % 2 == 0:
        reach = (delta - 2) // 2
        edges += [(i, j) for i in ring for j in ring
                  if i < j and (_ring_distance(i, j, Delta) <= reach or _ring_distance(i, j, Delta) == Delta // 2)]
    else:
        reach = (delta - 2) // 2
        edges += [(i, j) for i in ring for j in ring if i < j and _ring_distance(i, j, Delta) <= reach]
        half = (Delta - 1) // 2
        edges += [(i, i + half) for i in range(1, half + 1)]
        edges.append((delta // 2 + 1, Delta))
    return from_edge_list(Delta + 1, edges)


def construct_complete_bipartite(delta: int, Delta: int) -> Graph:
    """K_{delta,Delta}: vertices 0..delta-1 have degree Delta, the rest degree delta."""
    _check_profile(delta, Delta)
    return from_edge_list(delta + Delta, [(a, b) for a in range(delta) for b in range(delta, delta + Delta)])


def _adjacent_hubs(Delta: int) -> Graph:
    edges = [(0, 1)] + [(h, k) for k in range(2, Delta + 1) for h in (0, 1)]
    return from_edge_list(Delta + 1, edges)


def construct_h_delta(Delta: int) -> Graph:
    """Two adjacent hubs 0 and 1 sharing Delta - 1 neighbours of degree 2 (Delta odd)."""
    if Delta < 3 or Delta % 2 == 0:
        raise BadParams(f"H needs an odd Delta >= 3, got {Delta}")
    return _adjacent_hubs(Delta)


def construct_example_210() -> Graph:
    """The 57-vertex graph with minimum degree 4 and maximum degree 56 that defeats the min-of-families guess.

    Hubs 0 and 1 are adjacent to each other and to ring vertices 2..56,
    which form a 55-cycle.
    """
    ring = list(range(2, 57))
    edges = [(0, 1)] + [(h, b) for b in ring for h in (0, 1)]
    edges += [(ring[k], ring[(k + 1) % 55]) for k in range(55)]
    return from_edge_list(57, edges)


def construct_two_hub(delta: int, Delta: int) -> Graph:
    if delta < 3 or Delta < delta + 2:
        raise BadParams(f"two-hub graph needs delta >= 3 and Delta >= delta + 2, got ({delta}, {Delta})")
    ring_deg = delta - 2
    size = Delta - 1
    if ring_deg % 2 == 1 and size % 2 == 1:
        raise BadParams(f"no {ring_deg}-regular circulant on {size} ring vertices (both odd)")
    dists = set(range(1, ring_deg // 2 + 1))
    if ring_deg % 2 == 1:
        dists.add(size // 2)
    ring = range(2, Delta + 1)
    edges = [(0, 1)] + [(h, b) for b in ring for h in (0, 1)]
    edges += [(i, j) for i in ring for j in ring if i < j and _ring_distance(i - 2, j - 2, size) in dists]
    return from_edge_list(Delta + 1, edges)


def min_edges(delta: int, Delta: int) -> int:
    _check_profile(delta, Delta)
    twice = Delta * (delta + 1)
    return (twice + twice % 2) // 2


def ga1_closed_form_gdd(delta: int, Delta: int) -> float:
    _check_profile(delta, Delta)
    d, D = delta, Delta
    if D * (d + 1) % 2 == 0:
        return 2 * D * math.sqrt(d * D) / (d + D) + D * (d - 1) / 2
    return (2 * (D - 1) * math.sqrt(d * D) / (d + D)
            + 2 * math.sqrt((d + 1) * D) / (d + 1 + D)
            + 2 * d * math.sqrt(d * (d + 1)) / (2 * d + 1)
            + ((D - 2) * (d - 1) - 1) / 2)


def ga1_closed_form_kdd(delta: int, Delta: int) -> float:
    _check_profile(delta, Delta)
    return 2 * delta * Delta * math.sqrt(delta * Delta) / (delta + Delta)


def ga1_closed_form_hdelta(Delta: int) -> float:
    if Delta < 3 or Delta % 2 == 0:
        raise BadParams(f"H needs an odd Delta >= 3, got {Delta}")
    return 2 * (Delta - 1) * 2 * math.sqrt(2 * Delta) / (2 + Delta) + 1


def minimal_graph_ranges(delta: int, Delta: int) -> tuple[int, int, int, int]:
    """(m_lo, m_hi, n_lo, n_hi) bracketing any GA1-minimal graph with this profile."""
    _check_profile(delta, Delta)
    return min_edges(delta, Delta), delta * Delta, Delta + 1, Delta * (2 * delta - 1) // delta + 1


def ratio_exceeds_threshold(delta: int, Delta: int) -> bool | None:
    """Exact test of Delta/delta against (2 + sqrt 3)^2 = 7 + 4 sqrt 3.

    Returns True above, False below; the threshold is irrational so a tie
    is impossible for integer inputs.
    """
    gap = Delta - 7 * delta
    if gap <= 0:
        return False
    return gap * gap > 48 * delta * delta


def compare_families(delta: int, Delta: int) -> Verdict:
    if delta <= 1 or Delta < delta:
        raise BadParams(f"family comparison needs 1 < delta <= Delta, got ({delta}, {Delta})")
    if ratio_exceeds_threshold(delta, Delta):
        return Verdict.GDD_GREATER
    if Delta * (delta + 1) % 2 == 0:
        return Verdict.K_GREATER
    return Verdict.UNDECIDED


# -- isomorphism -------------------------------------------------------------

CANON_MAX_N = 9


@lru_cache(maxsize=None)
def permutation_rank_table(n: int) -> np.ndarray:
    """Row p maps edge rank r to the rank of its image under the p-th permutation."""
    pairs = rank_pairs(n)
    perms = np.array(list(permutations(range(n))), dtype=np.int8)
    table = np.empty((len(perms), len(pairs)), dtype=np.int8)
    for r, (i, j) in enumerate(pairs):
        a, b = perms[:, i], perms[:, j]
        lo, hi = np.minimum(a, b).astype(np.int64), np.maximum(a, b).astype(np.int64)
        table[:, r] = lo * n - lo * (lo + 1) // 2 + (hi - lo - 1)
    return table


def orbit_masks(n: int, mask: int) -> np.ndarray:
    """Bitmasks of every relabelling of the graph with upper-triangle bitmask ``mask``."""
    table = permutation_rank_table(n)
    out = np.zeros(len(table), dtype=np.uint64)
    one = np.uint64(1)
    r = 0
    while mask >> r:
        if mask >> r & 1:
            out |= one << table[:, r].astype(np.uint64)
        r += 1
    return out


def canonical_mask(g: Graph) -> int:
    """Minimum bitmask over all relabellings; exhaustive, so only for n <= 9."""
    if g.n > CANON_MAX_N:
        raise BadParams(f"exhaustive canonical form limited to n <= {CANON_MAX_N}")
    if g.n == 1:
        return 0
    return int(orbit_masks(g.n, g.mask).min())


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return False
    if g.n <= 8:
        return canonical_mask(g) == canonical_mask(h)
    return nx.is_isomorphic(_to_nx(g), _to_nx(h))


def _to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out

