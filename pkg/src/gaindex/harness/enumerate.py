"""Exhaustive enumeration of labeled simple graphs on up to nine vertices.

A graph is identified with its upper-triangle bitmask: bit ``edge_rank(i, j)``
is set when ``ij`` is an edge.  Masks are produced in ascending order.  The
high bits are chosen by a depth-first search that prunes on degree; the low
``LOW_BITS`` bits are expanded as one numpy block per surviving prefix.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..errors import BadSpec
from ..families import canonical_mask, orbit_masks
from ..graph import Graph, degree_summary, is_connected, rank_pairs

MAX_N = 9
LOW_BITS = 16
BATCH_ROWS = 1 << 18


@dataclass(frozen=True)
class EnumSpec:
    """What to enumerate.

    ``delta``/``Delta`` pin the exact minimum/maximum degree;
    ``min_degree``/``max_degree`` are inclusive caps used for suites such as
    "all graphs with maximum degree at most four".
    """

    n: int
    require_connected: bool = True
    delta: int | None = None
    Delta: int | None = None
    max_edges: int | None = None
    dedup_isomorphic: bool = False
    min_degree: int | None = None
    max_degree: int | None = None

    def __post_init__(self) -> None:
        if not 2 <= self.n <= MAX_N:
            raise BadSpec(f"n must be in 2..{MAX_N}, got {self.n}")
        if self.delta is not None and self.Delta is not None and self.delta > self.Delta:
            raise BadSpec(f"delta={self.delta} exceeds Delta={self.Delta}")
        for name in ("delta", "Delta", "min_degree", "max_degree", "max_edges"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise BadSpec(f"{name} must be non-negative, got {v}")

    @property
    def degree_window(self) -> tuple[int, int]:
        lo = 1 if self.require_connected else 0
        hi = self.n - 1
        if self.min_degree is not None:
            lo = max(lo, self.min_degree)
        if self.max_degree is not None:
            hi = min(hi, self.max_degree)
        if self.delta is not None:
            lo = max(lo, self.delta)
        if self.Delta is not None:
            hi = min(hi, self.Delta)
        return lo, hi

    @property
    def n_bits(self) -> int:
        return self.n * (self.n - 1) // 2

    @property
    def low_bits(self) -> int:
        return min(self.n_bits, LOW_BITS)

    @property
    def prefix_count(self) -> int:
        return 1 << (self.n_bits - self.low_bits)


@dataclass
class MaskBatch:
    """Consecutive enumerated graphs: ascending masks and their degree rows."""

    n: int
    masks: np.ndarray
    degrees: np.ndarray

    def __len__(self) -> int:
        return len(self.masks)


@lru_cache(maxsize=None)
def _edge_endpoints(n: int) -> tuple[np.ndarray, np.ndarray]:
    pairs = np.array(rank_pairs(n), dtype=np.intp).reshape(-1, 2)
    return pairs[:, 0], pairs[:, 1]


@dataclass(frozen=True)
class _LowTable:
    """Everything about the low ranks that does not depend on the prefix.

    ``degs_t[v]`` holds vertex v's low degree for every low assignment.
    ``part_id`` maps each assignment to its vertex partition (connected
    components of the low edges); ``part_comp[p, v]`` is the component
    bitmask containing v in partition p.
    """

    degs_t: np.ndarray
    m: np.ndarray
    part_id: np.ndarray
    part_comp: np.ndarray


@lru_cache(maxsize=8)
def _low_table(n: int, low: int) -> _LowTable:
    vals = np.arange(1 << low, dtype=np.int64)
    degs_t = np.zeros((n, 1 << low), dtype=np.uint8)
    for r, (i, j) in enumerate(rank_pairs(n)[:low]):
        bit = ((vals >> r) & 1).astype(np.uint8)
        degs_t[i] += bit
        degs_t[j] += bit
    m = degs_t.sum(axis=0, dtype=np.int64) // 2
    comp = np.stack([_closure(n, vals, 1 << v) for v in range(n)], axis=1)
    part_comp, part_id = np.unique(comp, axis=0, return_inverse=True)
    for arr in (degs_t, m, part_id, part_comp):
        arr.setflags(write=False)
    return _LowTable(degs_t, m, part_id.reshape(-1).astype(np.intp), part_comp)


def _adjacency_rows(n: int, masks: np.ndarray) -> np.ndarray:
    ii, jj = _edge_endpoints(n)
    rows = np.zeros((n, len(masks)), dtype=np.int64)
    for r in range(len(ii)):
        bit = (masks >> r) & 1
        rows[ii[r]] |= bit << jj[r]
        rows[jj[r]] |= bit << ii[r]
    return rows


def _closure(n: int, masks: np.ndarray, start: int) -> np.ndarray:
    """Vertex set reachable from the vertex set ``start`` in each masked graph."""
    rows = _adjacency_rows(n, masks)
    reach = np.full(len(masks), start, dtype=np.int64)
    for _ in range(n):
        grown = reach.copy()
        for v in range(n):
            grown |= rows[v] * ((reach >> v) & 1)
        if np.array_equal(grown, reach):
            break
        reach = grown
    return reach


def degrees_of(n: int, masks: np.ndarray) -> np.ndarray:
    ii, jj = _edge_endpoints(n)
    degs = np.zeros((len(masks), n), dtype=np.uint8)
    for r in range(len(ii)):
        bit = ((masks >> r) & 1).astype(np.uint8)
        degs[:, ii[r]] += bit
        degs[:, jj[r]] += bit
    return degs


def connected_rows(n: int, masks: np.ndarray) -> np.ndarray:
    """Boolean array: which masks describe a connected graph on all n vertices."""
    return _closure(n, masks, 1) == (1 << n) - 1


def _parts_connected(n: int, part_comp: np.ndarray, prefix_rows: list[int]) -> np.ndarray:
    """For each low partition, is its union with the prefix edges connected?"""
    reach = np.ones(len(part_comp), dtype=np.int64)
    for _ in range(n):
        grown = reach.copy()
        for v in range(n):
            hit = (reach >> v) & 1
            grown |= (part_comp[:, v] | prefix_rows[v]) * hit
        if np.array_equal(grown, reach):
            break
        reach = grown
    return reach == (1 << n) - 1


_Prefix = tuple[int, tuple[int, ...], tuple[int, ...], int]


def _prefixes(spec: EnumSpec, lo: int, hi: int) -> Iterator[_Prefix]:
    """Ascending prefixes in [lo, hi) with partial degrees, adjacency rows and edge counts.

    Ranks are decided from the top down, 0 before 1, so prefixes come out in
    increasing order.  A branch is cut when some vertex exceeds the maximum
    degree or can no longer reach the minimum with its undecided slots.
    """
    n, low = spec.n, spec.low_bits
    pairs = rank_pairs(n)
    dmin, dmax = spec.degree_window
    emax = spec.max_edges if spec.max_edges is not None else len(pairs)
    deg = [0] * n
    rows = [0] * n
    slack = [n - 1] * n  # undecided incident ranks, low ranks included

    def walk(r: int, prefix: int, m: int) -> Iterator[_Prefix]:
        width = 1 << (r - low + 1)
        if prefix >= hi or prefix + width <= lo:
            return
        if r < low:
            yield prefix, tuple(deg), tuple(rows), m
            return
        i, j = pairs[r]
        slack[i] -= 1
        slack[j] -= 1
        if deg[i] + slack[i] >= dmin and deg[j] + slack[j] >= dmin:
            yield from walk(r - 1, prefix, m)
        if deg[i] < dmax and deg[j] < dmax and m < emax:
            deg[i] += 1
            deg[j] += 1
            rows[i] ^= 1 << j
            rows[j] ^= 1 << i
            yield from walk(r - 1, prefix | 1 << (r - low), m + 1)
            deg[i] -= 1
            deg[j] -= 1
            rows[i] ^= 1 << j
            rows[j] ^= 1 << i
        slack[i] += 1
        slack[j] += 1

    yield from walk(len(pairs) - 1, 0, 0)


def iter_batches(spec: EnumSpec, prefix_range: tuple[int, int] | None = None) -> Iterator[MaskBatch]:
    """Yield the enumeration as ascending ``MaskBatch`` blocks.

    ``prefix_range`` restricts to a contiguous slice of the high-bit prefixes;
    concatenating the slices of a partition in order reproduces the full
    stream exactly.
    """
    n, low = spec.n, spec.low_bits
    lo, hi = prefix_range if prefix_range is not None else (0, spec.prefix_count)
    dmin, dmax = spec.degree_window
    table = _low_table(n, low)
    seen: set[int] = set()
    pend_masks: list[np.ndarray] = []
    pend_degs: list[np.ndarray] = []
    pending = 0

    def flush() -> MaskBatch | None:
        nonlocal pending
        if not pend_masks:
            return None
        masks = np.concatenate(pend_masks)
        degs = np.concatenate(pend_degs)
        pend_masks.clear()
        pend_degs.clear()
        pending = 0
        if spec.dedup_isomorphic:
            keep = np.zeros(len(masks), dtype=bool)
            for k, mask in enumerate(masks.tolist()):
                if mask in seen:
                    continue
                orbit = orbit_masks(n, mask)
                seen.update(orbit.tolist())
                keep[k] = int(orbit.min()) == mask
            masks, degs = masks[keep], degs[keep]
        return MaskBatch(n, masks, degs) if len(masks) else None

    for prefix, pdeg, prows, pm in _prefixes(spec, lo, hi):
        ok = None
        for v in range(n):
            col = table.degs_t[v]
            cond = (col >= dmin - pdeg[v]) & (col <= dmax - pdeg[v])
            ok = cond if ok is None else ok & cond
        if spec.Delta is not None:
            ok &= _reaches(table.degs_t, pdeg, spec.Delta)
        if spec.delta is not None:
            ok &= _reaches(table.degs_t, pdeg, spec.delta)
        if spec.max_edges is not None:
            ok &= table.m + pm <= spec.max_edges
        idx = np.flatnonzero(ok)
        if spec.require_connected and len(idx):
            idx = idx[_parts_connected(n, table.part_comp, prows)[table.part_id[idx]]]
        if not len(idx):
            continue
        pend_masks.append((np.int64(prefix) << low) | idx.astype(np.int64))
        pend_degs.append((table.degs_t[:, idx] + np.array(pdeg, dtype=np.uint8)[:, None]).T)
        pending += len(idx)
        if pending >= BATCH_ROWS:
            batch = flush()
            if batch is not None:
                yield batch
    batch = flush()
    if batch is not None:
        yield batch


def _reaches(degs_t: np.ndarray, pdeg: tuple[int, ...], target: int) -> np.ndarray:
    """Rows where at least one vertex has total degree exactly ``target``."""
    hit = np.zeros(degs_t.shape[1], dtype=bool)
    for v, p in enumerate(pdeg):
        if 0 <= target - p:
            hit |= degs_t[v] == target - p
    return hit


def enumerate_masks(spec: EnumSpec) -> Iterator[int]:
    for batch in iter_batches(spec):
        yield from batch.masks.tolist()


def enumerate_graphs(spec: EnumSpec) -> Iterator[Graph]:
    """Every labeled graph meeting ``spec``, in ascending bitmask order."""
    for mask in enumerate_masks(spec):
        yield Graph.from_mask(spec.n, mask)


def naive_masks(spec: EnumSpec) -> list[int]:
    """Reference filter over all 2^C(n,2) masks, no pruning and no numpy.

    Only usable for small n; it exists to certify ``enumerate_masks``.
    """
    dmin, dmax = spec.degree_window
    out = []
    for mask in range(1 << spec.n_bits):
        g = Graph.from_mask(spec.n, mask)
        s = degree_summary(g)
        if s.delta < dmin or s.Delta > dmax:
            continue
        if spec.delta is not None and s.delta != spec.delta:
            continue
        if spec.Delta is not None and s.Delta != spec.Delta:
            continue
        if spec.max_edges is not None and s.m > spec.max_edges:
            continue
        if spec.require_connected and not is_connected(g):
            continue
        if spec.dedup_isomorphic and canonical_mask(g) != mask:
            continue
        out.append(mask)
    return out


def partition_prefixes(spec: EnumSpec, parts: int) -> list[tuple[int, int]]:
    total = spec.prefix_count
    parts = max(1, min(parts, total))
    bounds = [total * k // parts for k in range(parts + 1)]
    return [(bounds[k], bounds[k + 1]) for k in range(parts)]
