"""Counterexample and minimality searches, and the large-Delta spot checks."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from ..bounds import bound_thm_2_20
from ..errors import BadParams, BadSpec, NoGraphs
from ..families import (
    _adjacent_hubs,
    canonical_mask,
    construct_complete_bipartite,
    construct_gdd,
    construct_two_hub,
    ga1_closed_form_gdd,
    ga1_closed_form_kdd,
    minimal_graph_ranges,
)
from ..formats import parse_graph6, write_graph6
from ..graph import Graph, degree_summary, from_edge_list
from ..index import TOL, ga1
from .enumerate import MAX_N, EnumSpec, iter_batches
from .verify import MinimaState, VerificationReport, mask_stats

SPOTCHECK_RANGE = (28, 64)


def check_2_2_candidate(g: Graph, tol: float = TOL) -> tuple[float, float, bool]:
    """(GA1, smaller of the two family closed forms, whether GA1 falls below it)."""
    s = degree_summary(g)
    if s.m < 1 or s.delta < 2:
        raise BadParams(f"both closed forms need minimum degree >= 2, got {s.delta}")
    lhs = ga1(g)
    rhs = min(ga1_closed_form_gdd(s.delta, s.Delta), ga1_closed_form_kdd(s.delta, s.Delta))
    return lhs, rhs, lhs < rhs - tol


@dataclass(frozen=True)
class Witness:
    graph6: str
    delta: int
    Delta: int
    lhs: float
    rhs: float
    source: str

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs

    def to_dict(self) -> dict:
        return {"graph6": self.graph6, "delta": self.delta, "Delta": self.Delta, "ga1": self.lhs,
                "min_closed_form": self.rhs, "margin": self.margin, "source": self.source}


def _rhs_table(size: int, deltas: set[int], Deltas: set[int]) -> np.ndarray:
    table = np.full((size, size), np.nan)
    for Delta in Deltas:
        for delta in deltas:
            if 2 <= delta <= Delta < size:
                table[delta, Delta] = min(ga1_closed_form_gdd(delta, Delta), ga1_closed_form_kdd(delta, Delta))
    return table


def _exhaustive_2_2(deltas: set[int], Deltas: set[int], n_max: int, tol: float) -> list[Witness]:
    found: dict[tuple[int, int], Witness] = {}
    lo, hi = min(deltas), max(Deltas)
    for n in range(max(3, lo + 1), n_max + 1):
        if lo > n - 1:
            break
        table = _rhs_table(n, deltas, Deltas)
        spec = EnumSpec(n, min_degree=lo, max_degree=min(hi, n - 1))
        for batch in iter_batches(spec):
            st = mask_stats(batch, connected=True)
            rhs = table[st.dmin, st.dmax]
            for k in np.flatnonzero(st.ga < rhs - tol):
                g = st.graph_at(int(k))
                key = (n, canonical_mask(g))
                if key not in found:
                    found[key] = Witness(write_graph6(Graph.from_mask(n, key[1])).decode("ascii"),
                                         int(st.dmin[k]), int(st.dmax[k]), float(st.ga[k]), float(rhs[k]),
                                         f"exhaustive n={n}")
    return list(found.values())


def search_counterexample_2_2(delta_range: Iterable[int], Delta_range: Iterable[int], n_max: int = 8,
                              tol: float = TOL) -> list[Witness]:
    """Graphs whose GA1 falls below both family closed forms.

    Two-hub graphs are tried for every feasible pair; small graphs are
    enumerated exhaustively up to ``n_max`` vertices (isomorphic witnesses
    reported once).  Sorted by margin, largest first.
    """
    deltas = {d for d in delta_range if d >= 2}
    Deltas = set(Delta_range)
    if not 0 <= n_max <= MAX_N:
        raise BadParams(f"n_max must be in 0..{MAX_N}, got {n_max}")
    out = []
    for delta in sorted(deltas):
        for Delta in sorted(Deltas):
            try:
                g = construct_two_hub(delta, Delta)
            except BadParams:
                continue
            lhs, rhs, bad = check_2_2_candidate(g, tol)
            if bad:
                out.append(Witness(write_graph6(g).decode("ascii"), delta, Delta, lhs, rhs, "two-hub"))
    if deltas and Deltas and n_max >= 3:
        out += _exhaustive_2_2(deltas, Deltas, n_max, tol)
    return sorted(out, key=lambda w: (-w.margin, w.delta, w.Delta, len(w.graph6), w.graph6))


@dataclass(frozen=True)
class MinimalResult:
    delta: int
    Delta: int
    n_max: int
    min_value: float
    witnesses: tuple[str, ...]
    ranges: tuple[int, int, int, int]
    witnesses_in_ranges: bool
    exhaustive: bool

    def to_dict(self) -> dict:
        m_lo, m_hi, n_lo, n_hi = self.ranges
        return {"delta": self.delta, "Delta": self.Delta, "n_max": self.n_max, "min_value": self.min_value,
                "witnesses": list(self.witnesses),
                "ranges": {"m_lo": m_lo, "m_hi": m_hi, "n_lo": n_lo, "n_hi": n_hi},
                "witnesses_in_ranges": self.witnesses_in_ranges, "exhaustive": self.exhaustive}


def search_minimal(delta: int, Delta: int, n_max: int, tol: float = TOL) -> MinimalResult:
    """Smallest GA1 over connected graphs with exact profile (delta, Delta) and at most ``n_max`` vertices.

    ``exhaustive`` says whether ``n_max`` reaches the vertex range every
    minimal graph must lie in, i.e. whether the minimum is the true one.
    """
    if not 1 <= delta <= Delta:
        raise BadParams(f"need 1 <= delta <= Delta, got ({delta}, {Delta})")
    if not Delta + 1 <= n_max <= MAX_N:
        raise BadParams(f"need Delta + 1 <= n_max <= {MAX_N}, got n_max={n_max} for Delta={Delta}")
    state = MinimaState(tol)
    for n in range(Delta + 1, n_max + 1):
        for batch in iter_batches(EnumSpec(n, delta=delta, Delta=Delta)):
            state.update(mask_stats(batch, connected=True))
    items = state.best.get((delta, Delta))
    if not items:
        raise NoGraphs(f"no connected graph with profile ({delta}, {Delta}) on at most {n_max} vertices")
    seen: dict[tuple[int, int], str] = {}
    for _, s, _ in items:
        g = parse_graph6(s)
        key = (g.n, canonical_mask(g))
        seen.setdefault(key, write_graph6(Graph.from_mask(g.n, key[1])).decode("ascii"))
    ranges = minimal_graph_ranges(delta, Delta)
    m_lo, m_hi, n_lo, n_hi = ranges
    inside = all(m_lo <= m <= m_hi and n_lo <= parse_graph6(s).n <= n_hi for _, s, m in items)
    return MinimalResult(delta, Delta, n_max, items[0][0], tuple(sorted(seen.values(), key=lambda s: (len(s), s))),
                         ranges, inside, n_max >= n_hi)


# -- large maximum degree ----------------------------------------------------

def _private_pair(Delta: int) -> Graph:
    """Adjacent hubs with Delta - 2 shared neighbours and one private neighbour each; the privates are joined."""
    shared = range(2, Delta)
    a, b = Delta, Delta + 1
    edges = [(0, 1), (0, a), (1, b), (a, b)] + [(h, v) for v in shared for h in (0, 1)]
    return from_edge_list(Delta + 2, edges)


def spotcheck_battery(Delta: int) -> list[tuple[str, Graph]]:
    """Graphs with minimum degree 2 and maximum degree Delta that are not K(2, Delta)."""
    kdd = construct_complete_bipartite(2, Delta)
    leaves = [v for v in range(kdd.n) if kdd.degree(v) == 2]
    battery = [
        ("hubs adjacent, shared neighbours", _adjacent_hubs(Delta)),
        ("K(2,Delta) plus a chord", kdd.with_edges([(leaves[0], leaves[1])])),
        ("edge-minimal family", construct_gdd(2, Delta)),
        ("hubs adjacent, private pair", _private_pair(Delta)),
    ]
    return battery


def theorem_2_20_spotchecks(Delta_lo: int, Delta_hi: int, tol: float = TOL) -> VerificationReport:
    """Equality at K(2, Delta) and strict excess on the perturbation battery for each Delta in range.

    This is a property battery, not a proof: the universal claim concerns
    graphs with at least 29 vertices and is out of reach of enumeration.
    """
    lo, hi = SPOTCHECK_RANGE
    if not lo <= Delta_lo <= Delta_hi <= hi:
        raise BadSpec(f"spot-check range must lie within {lo}..{hi}, got {Delta_lo}..{Delta_hi}")
    rep = VerificationReport("T2_20", notes=["property battery; exhaustive verification is not claimed"])
    for Delta in range(Delta_lo, Delta_hi + 1):
        bound = bound_thm_2_20(Delta).value
        kdd = construct_complete_bipartite(2, Delta)
        s6 = write_graph6(kdd).decode("ascii")
        value = ga1(kdd)
        rep.graphs_checked += 1
        if abs(value - bound) <= tol:
            rep.equality_witnesses.append(s6)
        else:
            rep.equality_family_mismatches.append(s6)
        for _, g in spotcheck_battery(Delta):
            s = degree_summary(g)
            if (s.delta, s.Delta) != (2, Delta):
                raise AssertionError(f"battery graph has profile ({s.delta}, {s.Delta}), expected (2, {Delta})")
            rep.graphs_checked += 1
            value = ga1(g)
            if not value > bound + tol:
                rep.violations.append((write_graph6(g).decode("ascii"), value, bound))
    return rep
