"""Simple undirected graphs on dense vertex ids, and their metric.

Adjacency is held as one int bitmask per vertex: bit ``w`` of ``adj[u]`` is
set iff ``uw`` is an edge.  All functions here are pure; graphs and distance
matrices are immutable and hashable.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import DisconnectedGraph, InvalidVertex, UnreachablePair

VertexSet = tuple  # strictly increasing tuple of vertex ids


class _Unreachable(enum.Enum):
    UNREACHABLE = "unreachable"

    def __repr__(self) -> str:
        return "UNREACHABLE"


UNREACHABLE = _Unreachable.UNREACHABLE


def bits(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple
    labels: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise InvalidVertex(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise InvalidVertex(f"vertex {u} has a neighbour outside 0..{self.n - 1}")
            if row >> u & 1:
                raise InvalidVertex(f"self-loop at {u}")
            for w in bits(row):
                if not self.adj[w] >> u & 1:
                    raise InvalidVertex(f"asymmetric adjacency {u}-{w}")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise InvalidVertex("labels must have length n")
            object.__setattr__(self, "labels", tuple(self.labels))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels=None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertex(f"edge {u}-{v} outside 0..{n - 1}")
            if u == v:
                raise InvalidVertex(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), labels)

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list:
        return [(u, w) for u in range(self.n) for w in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def neighbors(self, u: int) -> list:
        return list(bits(self.adj[u]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def closed(self, u: int) -> int:
        """Closed neighbourhood N[u] as a bitmask."""
        return self.adj[u] | 1 << u

    def label(self, u: int) -> str:
        return self.labels[u] if self.labels is not None else str(u)

    def relabel(self, labels) -> "Graph":
        return Graph(self.n, self.adj, tuple(labels))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def vertex_set(g: Graph, vertices: Iterable[int]) -> VertexSet:
    """Canonical VertexSet: sorted, deduplicated, validated against ``g``."""
    vs = tuple(sorted(set(vertices)))
    for v in vs:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise InvalidVertex(f"vertex {v!r} not in 0..{g.n - 1}")
    return vs


@dataclass(frozen=True)
class DistMatrix:
    """All-pairs distances; cross-component entries are ``UNREACHABLE``."""

    n: int
    d: tuple

    def __getitem__(self, u):
        return self.d[u]

    def reachable(self, u: int, v: int) -> bool:
        return self.d[u][v] is not UNREACHABLE


@lru_cache(maxsize=4096)
def bfs_all_pairs(g: Graph) -> DistMatrix:
    rows = []
    adj = g.adj
    for s in range(g.n):
        row = [UNREACHABLE] * g.n
        row[s] = 0
        seen = frontier = 1 << s
        level = 0
        while frontier:
            level += 1
            nxt = 0
            for u in bits(frontier):
                nxt |= adj[u]
            frontier = nxt & ~seen
            seen |= frontier
            for w in bits(frontier):
                row[w] = level
        rows.append(tuple(row))
    return DistMatrix(g.n, tuple(rows))


def _dist(g: Graph, d: Optional[DistMatrix]) -> DistMatrix:
    return bfs_all_pairs(g) if d is None else d


def component_masks(g: Graph) -> list:
    remaining = (1 << g.n) - 1
    comps = []
    while remaining:
        start = remaining & -remaining
        seen = frontier = start
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(seen)
        remaining &= ~seen
    return comps


def is_connected(g: Graph) -> bool:
    return len(component_masks(g)) <= 1


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraph(f"graph with n={g.n} is disconnected")


def diameter(g: Graph, d: Optional[DistMatrix] = None) -> int:
    require_connected(g)
    d = _dist(g, d)
    return max((max(row) for row in d.d), default=0)


def eccentricity(g: Graph, u: int, d: Optional[DistMatrix] = None) -> int:
    require_connected(g)
    return max(_dist(g, d)[u])


def interval(g: Graph, u: int, v: int, d: Optional[DistMatrix] = None) -> VertexSet:
    """Vertices lying on some u,v-geodesic, endpoints included."""
    d = _dist(g, d)
    duv = d[u][v]
    if duv is UNREACHABLE:
        raise UnreachablePair(f"{u} and {v} lie in different components")
    du, dv = d[u], d[v]
    return tuple(w for w in range(g.n) if du[w] is not UNREACHABLE and du[w] + dv[w] == duv)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~(row | 1 << u) for u, row in enumerate(g.adj)), g.labels)


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced by ``s``, relabelled to 0..|s|-1; labels carry the original ids."""
    s = vertex_set(g, s)
    pos = {v: i for i, v in enumerate(s)}
    adj = []
    for v in s:
        row = 0
        for w in bits(g.adj[v]):
            if w in pos:
                row |= 1 << pos[w]
        adj.append(row)
    return Graph(len(s), tuple(adj), tuple(g.label(v) for v in s))


def is_isometric_subgraph(g: Graph, s: Iterable[int], d: Optional[DistMatrix] = None) -> bool:
    s = vertex_set(g, s)
    d = _dist(g, d)
    h = induced_subgraph(g, s)
    dh = bfs_all_pairs(h)
    for i, u in enumerate(s):
        for j in range(i + 1, len(s)):
            if dh[i][j] is UNREACHABLE or dh[i][j] != d[u][s[j]]:
                return False
    return True


def are_true_twins(g: Graph, u: int, v: int) -> bool:
    return g.closed(u) == g.closed(v)


def has_true_twins(g: Graph) -> bool:
    closed = [g.closed(u) for u in range(g.n)]
    return len(set(closed)) < g.n


def disjoint_union(*graphs: Graph) -> Graph:
    adj, labels, offset = [], [], 0
    for k, h in enumerate(graphs):
        adj.extend(row << offset for row in h.adj)
        labels.extend(f"{k}:{h.label(u)}" for u in range(h.n))
        offset += h.n
    return Graph(offset, tuple(adj), tuple(labels))
