"""Exhaustive certification of the inequalities and their equality cases.

Each enumerated batch is reduced to per-graph statistics (degrees, GA1,
structural predicates) once; every theorem then reads the statistics and the
per-profile bound table.  Graphs supplied as an external graph6 stream take a
scalar route through the library functions instead, so the two routes can be
cross-checked on the same graphs.

Partial results are merged associatively and all witness lists are sorted,
so reports do not depend on the number of workers or their finishing order.
"""

from __future__ import annotations

import math
import os
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import lru_cache

import numpy as np

from ..bounds import bound_cor_2_13, bound_cor_2_17, bound_thm_2_7, bound_thm_2_11
from ..errors import BadParams, BadSpec, NotApplicable
from ..families import (
    FamilyKind,
    construct_complete_bipartite,
    gdd_case,
    gdd_membership,
    is_isomorphic,
    min_edges,
    minimal_graph_ranges,
)
from ..formats import parse_graph6, write_graph6
from ..graph import Graph, degree_summary, is_connected, is_degree_bipartition, is_regular, rank_pairs
from ..index import TOL, edge_weight, ga1
from .enumerate import EnumSpec, MaskBatch, connected_rows, iter_batches, partition_prefixes

THEOREMS = ("CLASSIC_2_1", "T2_7", "P2_5_edges", "T2_11", "C2_13", "C2_17", "P2_8_minimal")
SPOTCHECK_ONLY = ("T2_20",)


def _g6(g: Graph) -> str:
    return write_graph6(g).decode("ascii")


def _g6_key(s: str) -> tuple[int, str]:
    return len(s), s


# -- per-graph statistics ----------------------------------------------------

@dataclass
class BatchStats:
    """Column-wise facts about a block of graphs.

    ``dmin`` is 0 for graphs with an isolated vertex; such graphs fall outside
    every theorem's hypotheses.  ``ga`` is NaN for edgeless graphs.
    """

    n: np.ndarray
    m: np.ndarray
    dmin: np.ndarray
    dmax: np.ndarray
    ga: np.ndarray
    connected: np.ndarray
    regular: np.ndarray
    bipartition: np.ndarray
    star: np.ndarray
    complete: np.ndarray
    gdd: np.ndarray
    graph_at: Callable[[int], Graph]

    def __len__(self) -> int:
        return len(self.m)

    def g6(self, k: int) -> str:
        return _g6(self.graph_at(int(k)))


@lru_cache(maxsize=None)
def _weight_table(size: int) -> np.ndarray:
    w = np.zeros((size, size))
    for a in range(1, size):
        for b in range(1, size):
            w[a, b] = edge_weight(a, b)
    return w


def _gdd_rows(n: int, degs_t: np.ndarray, dmin: np.ndarray, dmax: np.ndarray, complete: np.ndarray) -> np.ndarray:
    """Membership in the edge-minimal family for each row's own (dmin, dmax)."""
    out = np.zeros(len(dmin), dtype=bool)
    c_lo = (degs_t == dmin).sum(axis=0)
    c_hi = (degs_t == dmax).sum(axis=0)
    c_mid = (degs_t == dmin + 1).sum(axis=0)
    base = (dmin >= 1) & (dmax == n - 1)
    for Delta in range(1, n):
        for delta in range(1, Delta + 1):
            rows = base & (dmin == delta) & (dmax == Delta)
            if not rows.any():
                continue
            kind = gdd_case(delta, Delta)
            if kind is FamilyKind.GDD_case1:
                ok = complete
            elif kind is FamilyKind.GDD_case2:
                ok = (c_hi == 1) & (c_lo == Delta)
            elif kind is FamilyKind.GDD_case3:
                ok = (c_lo == Delta - 1) & (c_mid == 1) & (c_hi == 1)
            else:
                ok = (c_lo == Delta - 1) & (c_hi == 2)
            out |= rows & ok
    return out


def mask_stats(batch: MaskBatch, connected: bool | None = None) -> BatchStats:
    """Statistics for an enumerated batch; GA1 is summed in edge-rank order like ``ga1``.

    ``connected`` may be passed when the enumeration already guarantees it.
    """
    n, masks = batch.n, batch.masks
    degs_t = np.ascontiguousarray(batch.degrees.T).astype(np.intp)
    k = len(masks)
    m = degs_t.sum(axis=0) // 2
    dmin = degs_t.min(axis=0)
    dmax = degs_t.max(axis=0)
    w = _weight_table(n)
    ga = np.zeros(k)
    off_bip = np.zeros(k, dtype=bool)
    for r, (i, j) in enumerate(rank_pairs(n)):
        bit = ((masks >> r) & 1).astype(bool)
        di, dj = degs_t[i], degs_t[j]
        ga += np.where(bit, w[di, dj], 0.0)
        extreme = ((di == dmin) & (dj == dmax)) | ((di == dmax) & (dj == dmin))
        off_bip |= bit & ~extreme
    ga[m == 0] = np.nan
    if connected is None:
        conn = connected_rows(n, masks)
    else:
        conn = np.full(k, connected)
    complete = m == n * (n - 1) // 2
    star = (dmin == 1) & (dmax == n - 1) & (m == n - 1)
    return BatchStats(
        n=np.full(k, n), m=m, dmin=dmin, dmax=dmax, ga=ga, connected=conn,
        regular=(dmin == dmax) & (m > 0),
        bipartition=(dmin < dmax) & (dmin >= 1) & ~off_bip,
        star=star, complete=complete,
        gdd=_gdd_rows(n, degs_t, dmin, dmax, complete),
        graph_at=lambda t, _m=masks, _n=n: Graph.from_mask(_n, int(_m[t])),
    )


def graph_stats(graphs: Sequence[Graph]) -> BatchStats:
    """Statistics through the scalar library functions, one graph at a time."""
    rows = []
    for g in graphs:
        s = degree_summary(g)
        ok = s.m > 0 and s.delta >= 1
        rows.append((
            g.n, s.m, s.delta, s.Delta,
            ga1(g) if s.m > 0 else math.nan,
            is_connected(g),
            ok and is_regular(g),
            ok and is_degree_bipartition(g, s.delta, s.Delta),
            ok and s.delta == 1 and s.Delta == g.n - 1 and s.m == g.n - 1,
            s.m == g.n * (g.n - 1) // 2,
            ok and gdd_membership(g, s.delta, s.Delta) is not None,
        ))
    cols = list(zip(*rows)) if rows else [()] * 11
    ints = [np.array(c, dtype=np.intp) for c in cols[:4]]
    bools = [np.array(c, dtype=bool) for c in cols[5:]]
    graphs = list(graphs)
    return BatchStats(*ints, np.array(cols[4], dtype=float), *bools, graph_at=graphs.__getitem__)


# -- report ------------------------------------------------------------------

@dataclass
class VerificationReport:
    theorem_id: str
    graphs_checked: int = 0
    graphs_gated: int = 0
    violations: list[tuple[str, float, float]] = field(default_factory=list)
    equality_witnesses: list[str] = field(default_factory=list)
    equality_family_mismatches: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations and not self.equality_family_mismatches

    def merge(self, other: VerificationReport) -> VerificationReport:
        if other.theorem_id != self.theorem_id:
            raise BadSpec(f"cannot merge {self.theorem_id} with {other.theorem_id}")
        return VerificationReport(
            self.theorem_id,
            self.graphs_checked + other.graphs_checked,
            self.graphs_gated + other.graphs_gated,
            sorted(self.violations + other.violations, key=lambda v: _g6_key(v[0])),
            sorted(self.equality_witnesses + other.equality_witnesses, key=_g6_key),
            sorted(self.equality_family_mismatches + other.equality_family_mismatches, key=_g6_key),
            sorted(set(self.notes) | set(other.notes)),
        )

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "graphs_checked": self.graphs_checked,
            "graphs_gated": self.graphs_gated,
            "violations": [{"graph6": g, "ga1": v, "bound": b} for g, v, b in self.violations],
            "equality_witnesses": list(self.equality_witnesses),
            "equality_family_mismatches": list(self.equality_family_mismatches),
            "passed": self.passed,
            "notes": list(self.notes),
        }


# -- bound tables ------------------------------------------------------------

def _value_or_none(fn: Callable[[], object]) -> tuple[float, bool] | None:
    try:
        r = fn()
    except (NotApplicable, BadParams):
        return None
    if not r.applicable:
        return None
    return r.value, r.equality_family is not None


def _profile_bound(theorem_id: str, delta: int, Delta: int) -> tuple[float, bool] | None:
    """(value, equality characterized) for a profile, or None when the theorem is gated off."""
    if theorem_id == "T2_7":
        return _value_or_none(lambda: bound_thm_2_7(delta, Delta))
    if theorem_id == "T2_11":
        if Delta < 2:
            return None
        return _value_or_none(lambda: bound_thm_2_11(delta, Delta))
    if theorem_id == "C2_13":
        return _value_or_none(lambda: bound_cor_2_13(delta, Delta))
    if theorem_id == "C2_17":
        return _value_or_none(lambda: bound_cor_2_17(delta, Delta))
    if theorem_id == "P2_5_edges":
        return float(min_edges(delta, Delta)), True
    raise BadSpec(f"no bound table for {theorem_id}")


@lru_cache(maxsize=None)
def _bound_table(theorem_id: str, size: int) -> tuple[np.ndarray, np.ndarray]:
    """NaN-padded (value, characterized) tables indexed by [delta, Delta]."""
    vals = np.full((size, size), np.nan)
    char = np.zeros((size, size), dtype=bool)
    for Delta in range(1, size):
        for delta in range(1, Delta + 1):
            got = _profile_bound(theorem_id, delta, Delta)
            if got is not None:
                vals[delta, Delta], char[delta, Delta] = got
    return vals, char


# -- checkers ----------------------------------------------------------------

def _collect(st: BatchStats, rows: np.ndarray) -> list[str]:
    return [st.g6(k) for k in np.flatnonzero(rows)]


def _check_rows(rep: VerificationReport, st: BatchStats, gate: np.ndarray, value: np.ndarray,
                bound: np.ndarray, predicate: np.ndarray | None, tol: float,
                upper: np.ndarray | None = None) -> None:
    rep.graphs_checked += len(st)
    rep.graphs_gated += int((~gate).sum())
    low = gate & (value < bound - tol)
    if upper is not None:
        low |= gate & (value > upper + tol)
    for k in np.flatnonzero(low):
        rep.violations.append((st.g6(k), float(value[k]), float(bound[k])))
    eq = gate & (np.abs(value - bound) <= tol)
    rep.equality_witnesses.extend(_collect(st, eq))
    if predicate is not None:
        rep.equality_family_mismatches.extend(_collect(st, gate & (eq != predicate)))


def check_batch(theorem_id: str, st: BatchStats, tol: float = TOL) -> VerificationReport:
    """Check one batch of statistics against a theorem (minimality excluded)."""
    rep = VerificationReport(theorem_id)
    usable = st.dmin >= 1
    size = int(max(st.n.max(initial=2), 2))
    d0 = np.where(usable, st.dmin, 0)
    d1 = np.where(usable, st.dmax, 0)
    if theorem_id == "CLASSIC_2_1":
        w = _weight_table(size)
        lower = st.m * w[d0, d1]
        # the characterization is only claimed for connected graphs
        pred = np.where(st.connected, st.regular | st.bipartition, np.abs(st.ga - lower) <= tol)
        _check_rows(rep, st, usable, st.ga, lower, pred, tol, upper=st.m.astype(float))
        return rep
    vals, char = _bound_table(theorem_id, size)
    bound = vals[d0, d1]
    gate = usable & ~np.isnan(bound)
    if theorem_id == "C2_13":
        gate &= st.connected
    if theorem_id == "P2_5_edges":
        _check_rows(rep, st, gate, st.m.astype(float), bound, st.gdd, tol=0.0)
        return rep
    if theorem_id == "T2_7":
        pred = st.star | st.complete
    else:
        characterized = char[d0, d1]
        eq = np.abs(st.ga - bound) <= tol
        # with no characterization, equality is recorded but never a mismatch
        pred = np.where(characterized, st.gdd, eq)
    _check_rows(rep, st, gate, st.ga, bound, pred, tol)
    return rep


@dataclass
class MinimaState:
    """Per-profile running minimum of GA1 with every graph within ``tol`` of it."""

    tol: float
    graphs_checked: int = 0
    best: dict[tuple[int, int], list[tuple[float, str, int]]] = field(default_factory=dict)

    def update(self, st: BatchStats) -> None:
        self.graphs_checked += len(st)
        usable = st.dmin >= 1
        keys = st.dmin * 64 + st.dmax
        for key in np.unique(keys[usable]).tolist():
            rows = usable & (keys == key)
            lo = float(st.ga[rows].min())
            prof = (key // 64, key % 64)
            cur = self.best.get(prof)
            if cur is not None and lo > cur[0][0] + self.tol:
                continue
            near = np.flatnonzero(rows & (st.ga <= lo + self.tol))
            self._absorb(prof, [(float(st.ga[k]), st.g6(k), int(st.m[k])) for k in near])

    def _absorb(self, prof: tuple[int, int], items: list[tuple[float, str, int]]) -> None:
        pool = self.best.get(prof, []) + items
        lo = min(v for v, _, _ in pool)
        self.best[prof] = sorted((it for it in pool if it[0] <= lo + self.tol), key=lambda it: (it[0], _g6_key(it[1])))

    def merge(self, other: MinimaState) -> MinimaState:
        out = MinimaState(self.tol, self.graphs_checked + other.graphs_checked, dict(self.best))
        for prof, items in other.best.items():
            out._absorb(prof, items)
        return out


def _minimal_report(state: MinimaState, certified: Callable[[int, int], bool]) -> VerificationReport:
    rep = VerificationReport("P2_8_minimal", graphs_checked=state.graphs_checked)
    for (delta, Delta), items in sorted(state.best.items()):
        if not certified(delta, Delta):
            rep.notes.append(f"profile ({delta},{Delta}) not covered up to its vertex range; skipped")
            continue
        m_lo, m_hi, n_lo, n_hi = minimal_graph_ranges(delta, Delta)
        kdd = construct_complete_bipartite(delta, Delta)
        for value, s, m in items:
            g = parse_graph6(s)
            rep.equality_witnesses.append(s)
            if not (m_lo <= m <= m_hi and n_lo <= g.n <= n_hi):
                rep.violations.append((s, value, items[0][0]))
            at_lo = gdd_membership(g, delta, Delta) is not None
            at_hi = g.n == delta + Delta and is_isomorphic(g, kdd)
            if (m == m_lo) != at_lo or (m == m_hi) != at_hi:
                rep.equality_family_mismatches.append(s)
    rep.violations.sort(key=lambda v: _g6_key(v[0]))
    rep.equality_witnesses.sort(key=_g6_key)
    rep.equality_family_mismatches.sort(key=_g6_key)
    return rep


# -- drivers -----------------------------------------------------------------

def _check_supported(theorem_id: str) -> None:
    if theorem_id in SPOTCHECK_ONLY:
        raise BadSpec(f"{theorem_id} cannot be certified by enumeration; use the spot-check battery")
    if theorem_id not in THEOREMS:
        raise BadSpec(f"unsupported theorem id {theorem_id!r}; expected one of {', '.join(THEOREMS)}")


def _run_part(theorem_id: str, spec: EnumSpec, part: tuple[int, int] | None, tol: float):
    conn = True if spec.require_connected else None
    acc = MinimaState(tol) if theorem_id == "P2_8_minimal" else VerificationReport(theorem_id)
    for batch in iter_batches(spec, part):
        st = mask_stats(batch, connected=conn)
        if isinstance(acc, MinimaState):
            acc.update(st)
        else:
            acc = acc.merge(check_batch(theorem_id, st, tol))
    return acc


def _run_specs(theorem_id: str, specs: Sequence[EnumSpec], tol: float, jobs: int) -> list:
    tasks = []
    for spec in specs:
        parts = partition_prefixes(spec, jobs * 4) if jobs > 1 else [None]
        tasks.extend((theorem_id, spec, p, tol) for p in parts)
    if jobs <= 1 or len(tasks) == 1:
        return [_run_part(*t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_part, *zip(*tasks)))


def _covers(spec: EnumSpec, delta: int, Delta: int) -> bool:
    lo, hi = spec.degree_window
    return (spec.max_edges is None and lo <= delta and Delta <= hi
            and spec.delta in (None, delta) and spec.Delta in (None, Delta))


def _finish(theorem_id: str, partials: list, specs: Sequence[EnumSpec]) -> VerificationReport:
    acc = partials[0]
    for p in partials[1:]:
        acc = acc.merge(p)
    if theorem_id != "P2_8_minimal":
        return acc
    by_n = {s.n: s for s in specs}

    def certified(delta: int, Delta: int) -> bool:
        _, _, n_lo, n_hi = minimal_graph_ranges(delta, Delta)
        return all(n in by_n and _covers(by_n[n], delta, Delta) for n in range(n_lo, n_hi + 1))

    return _minimal_report(acc, certified)


def default_jobs() -> int:
    return os.cpu_count() or 1


def verify_theorem(theorem_id: str, spec: EnumSpec, tol: float = TOL, jobs: int = 1) -> VerificationReport:
    """Check a theorem on every graph ``spec`` enumerates."""
    _check_supported(theorem_id)
    return _finish(theorem_id, _run_specs(theorem_id, [spec], tol, jobs), [spec])


def verify_range(theorem_id: str, n_max: int, n_min: int = 2, tol: float = TOL, jobs: int = 1,
                 **spec_fields) -> VerificationReport:
    """``verify_theorem`` over every vertex count in ``n_min..n_max`` with one merged report."""
    _check_supported(theorem_id)
    if n_min > n_max:
        raise BadSpec(f"empty vertex range {n_min}..{n_max}")
    specs = [EnumSpec(n, **spec_fields) for n in range(n_min, n_max + 1)]
    return _finish(theorem_id, _run_specs(theorem_id, specs, tol, jobs), specs)


def verify_graphs(theorem_id: str, graphs: Iterable[Graph], tol: float = TOL) -> VerificationReport:
    """Check an external graph stream (for instance graph6 from another generator).

    Minimality cannot be certified from an arbitrary stream; the report lists
    the per-profile minima without range checks.
    """
    _check_supported(theorem_id)
    graphs = list(graphs)
    st = graph_stats(graphs)
    if theorem_id == "P2_8_minimal":
        state = MinimaState(tol)
        if graphs:
            state.update(st)
        rep = _minimal_report(state, lambda d, D: False)
        return replace(rep, notes=rep.notes + ["external stream: minima reported, not certified"])
    empty = VerificationReport(theorem_id)
    if not graphs:
        return empty
    return empty.merge(check_batch(theorem_id, st, tol))  # merge sorts the witness lists
