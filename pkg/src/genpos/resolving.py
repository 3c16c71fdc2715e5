"""Maximal distance, MMD pairs and the strong resolving graph."""
from __future__ import annotations

from typing import Optional

from .errors import InvalidVertex
from .graph import DistMatrix, Graph, VertexSet, bfs_all_pairs, bits, require_connected


def _balls(g: Graph, d: DistMatrix, v: int) -> list:
    """balls[k] = bitmask of vertices within distance k of v."""
    row = d[v]
    ecc = max(row)
    balls = [0] * (ecc + 1)
    for w, dw in enumerate(row):
        balls[dw] |= 1 << w
    for k in range(1, ecc + 1):
        balls[k] |= balls[k - 1]
    return balls


def is_maximally_distant(g: Graph, u: int, v: int, d: Optional[DistMatrix] = None) -> bool:
    """True iff no neighbour of ``u`` is strictly farther from ``v`` than ``u`` is."""
    require_connected(g)
    d = bfs_all_pairs(g) if d is None else d
    duv = d[u][v]
    return all(d[v][w] <= duv for w in bits(g.adj[u]))


def is_mmd(g: Graph, u: int, v: int, d: Optional[DistMatrix] = None) -> bool:
    if u == v:
        raise InvalidVertex("MMD is defined for distinct vertices")
    d = bfs_all_pairs(g) if d is None else d
    return is_maximally_distant(g, u, v, d) and is_maximally_distant(g, v, u, d)


def maximally_distant_matrix(g: Graph, d: Optional[DistMatrix] = None) -> list:
    """md[v] = bitmask of vertices u that are maximally distant from v."""
    require_connected(g)
    d = bfs_all_pairs(g) if d is None else d
    md = []
    for v in range(g.n):
        balls = _balls(g, d, v)
        row = 0
        for u in range(g.n):
            if u != v and not g.adj[u] & ~balls[d[v][u]]:
                row |= 1 << u
        md.append(row)
    return md


def strong_resolving_graph(g: Graph, d: Optional[DistMatrix] = None) -> Graph:
    md = maximally_distant_matrix(g, d)
    adj = []
    for u in range(g.n):
        row = 0
        for v in bits(md[u]):
            if md[v] >> u & 1:
                row |= 1 << v
        adj.append(row)
    return Graph(g.n, tuple(adj), g.labels)


def simplicial_vertices(g: Graph) -> VertexSet:
    out = []
    for u in range(g.n):
        nu = g.adj[u]
        if all(nu & ~g.closed(w) == 0 for w in bits(nu)):
            out.append(u)
    return tuple(out)
