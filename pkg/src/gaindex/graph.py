"""Simple undirected graphs on vertices 0..n-1 with bitset adjacency."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import lru_cache

from .errors import BadParams, BadVertex, DuplicateEdge, LoopEdge


@lru_cache(maxsize=None)
def rank_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Vertex pairs (i, j), i < j, in lexicographic order; index = edge rank."""
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


def edge_rank(i: int, j: int, n: int) -> int:
    if i > j:
        i, j = j, i
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def _iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``adj[u]`` is an integer bitset whose bit ``v`` is set when ``uv`` is an
    edge. Python integers are unbounded, so the same representation covers
    the enumerator's n <= 9 regime and the 57-vertex constructions alike.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1 or len(self.adj) != self.n:
            raise BadParams(f"graph needs n >= 1 adjacency rows, got n={self.n}")

    @classmethod
    def from_mask(cls, n: int, mask: int) -> Graph:
        adj = [0] * n
        for r, (i, j) in enumerate(rank_pairs(n)):
            if mask >> r & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        return cls(n, tuple(adj))

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def mask(self) -> int:
        """Upper-triangle bitmask; bit ``edge_rank(i, j)`` set for each edge."""
        out = 0
        n = self.n
        for i, j in self.edges():
            out |= 1 << edge_rank(i, j, n)
        return out

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def neighbors(self, u: int) -> Iterator[int]:
        return _iter_bits(self.adj[u])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges (u, v) with u < v, in ascending rank order."""
        for u, row in enumerate(self.adj):
            yield from ((u, v) for v in _iter_bits(row >> (u + 1) << (u + 1)))

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> Graph:
        return from_edge_list(self.n, [*self.edges(), *extra])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeSummary:
    n: int
    m: int
    delta: int
    Delta: int
    degree_multiset: tuple[int, ...]


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 1:
        raise BadParams(f"vertex count must be positive, got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise BadVertex(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        if adj[u] >> v & 1:
            raise DuplicateEdge(f"edge ({u}, {v}) listed twice")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def degree_summary(g: Graph) -> DegreeSummary:
    degs = sorted(g.degrees)
    return DegreeSummary(g.n, sum(degs) // 2, degs[0], degs[-1], tuple(degs))


def is_connected(g: Graph) -> bool:
    full = (1 << g.n) - 1
    reach, frontier = 1, 1
    while frontier:
        nxt = 0
        for u in _iter_bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & ~reach
        reach |= nxt
    return reach == full


def is_regular(g: Graph) -> bool:
    degs = g.degrees
    return min(degs) == max(degs)


def is_degree_bipartition(g: Graph, delta: int, Delta: int) -> bool:
    """True iff every vertex has degree delta or Delta and every edge joins the two classes.

    Returns False when ``delta >= Delta``; the predicate only describes
    non-regular profiles.
    """
    if delta >= Delta:
        return False
    degs = g.degrees
    if any(d != delta and d != Delta for d in degs):
        return False
    return all(degs[u] != degs[v] for u, v in g.edges())


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << u) for u in range(n)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    if leaves < 1:
        raise BadParams("a star needs at least one leaf")
    return from_edge_list(leaves + 1, [(0, v) for v in range(1, leaves + 1)])
