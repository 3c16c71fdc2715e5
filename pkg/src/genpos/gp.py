"""General position sets, gp(G), and the companion invariants omega, alpha, eta."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from ._search import SetSearch
from .errors import NotACover, NotIsometric, WrongDiameter
from .graph import (
    DistMatrix,
    Graph,
    VertexSet,
    bfs_all_pairs,
    bits,
    component_masks,
    diameter,
    induced_subgraph,
    is_connected,
    is_isometric_subgraph,
    require_connected,
    vertex_set,
)
from .resolving import strong_resolving_graph


@dataclass(frozen=True)
class GpResult:
    value: int
    witness: VertexSet
    nodes_explored: int = 0


@dataclass(frozen=True)
class CliqueResult:
    value: int
    witness: VertexSet


@dataclass(frozen=True)
class PartitionCheck:
    parts: tuple
    distance_table: Optional[dict]
    complete: bool
    distance_constant: bool
    in_transitive: bool

    @property
    def verdict(self) -> bool:
        return self.complete and self.distance_constant and self.in_transitive


def is_general_position_set(g: Graph, s: Iterable[int], d: Optional[DistMatrix] = None) -> bool:
    """No member of ``s`` lies on a geodesic between two other members."""
    require_connected(g)
    s = vertex_set(g, s)
    d = bfs_all_pairs(g) if d is None else d
    for u, v, w in itertools.permutations(s, 3):
        if d[u][w] == d[u][v] + d[v][w]:
            return False
    return True


@lru_cache(maxsize=512)
def _gp_pairmask(g: Graph) -> tuple:
    """pairmask[v][u]: vertices w such that {u, v, w} contains a betweenness."""
    d = bfs_all_pairs(g)
    n = g.n
    # beyond[u][v]: w with d(u,v) + d(v,w) = d(u,w), i.e. v lies on a u,w-geodesic
    beyond = []
    for u in range(n):
        du = d[u]
        row = []
        for v in range(n):
            duv, dv = du[v], d[v]
            m = 0
            for w in range(n):
                if duv + dv[w] == du[w]:
                    m |= 1 << w
            row.append(m)
        beyond.append(row)
    pm = [[0] * n for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            # w between u and v  <=>  v lies beyond w as seen from u
            between = 0
            for w in range(n):
                if beyond[u][w] >> v & 1:
                    between |= 1 << w
            m = (between | beyond[v][u] | beyond[u][v]) & ~(1 << u | 1 << v)
            pm[u][v] = pm[v][u] = m
    return tuple(tuple(r) for r in pm)


def conflict_triples(g: Graph, d: Optional[DistMatrix] = None) -> frozenset:
    require_connected(g)
    pm = _gp_pairmask(g)
    out = set()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            for w in bits(pm[u][v] >> (v + 1) << (v + 1)):
                out.add((u, v, w))
    return frozenset(out)


@lru_cache(maxsize=1024)
def gp_number(g: Graph) -> GpResult:
    """Exact gp(G) with the lexicographically least maximum general position set."""
    require_connected(g)
    search = SetSearch(g.n, pairmask=_gp_pairmask(g))
    value, witness = search.maximum()
    return GpResult(value, witness, search.nodes)


def enumerate_gp_sets(g: Graph) -> list:
    """All maximum general position sets, in lexicographic order."""
    require_connected(g)
    k = gp_number(g).value
    return SetSearch(g.n, pairmask=_gp_pairmask(g)).all_of_size(k)


def gp_brute_force(g: Graph) -> GpResult:
    """Reference solver: scan subsets by increasing size, test each directly."""
    require_connected(g)
    d = bfs_all_pairs(g)
    best: tuple = ()
    tested = 0
    for k in range(1, g.n + 1):
        found = None
        for s in itertools.combinations(range(g.n), k):
            tested += 1
            if is_general_position_set(g, s, d):
                found = s
                break
        if found is None:
            break
        best = found
    return GpResult(len(best), best, tested)


@lru_cache(maxsize=1024)
def clique_number(g: Graph) -> CliqueResult:
    value, witness = SetSearch(g.n, keep=g.adj).maximum()
    return CliqueResult(value, witness)


@lru_cache(maxsize=1024)
def independence_number(g: Graph) -> CliqueResult:
    full = (1 << g.n) - 1
    keep = tuple(full & ~g.closed(u) for u in range(g.n))
    value, witness = SetSearch(g.n, keep=keep).maximum()
    return CliqueResult(value, witness)


def _cluster_pairmask(g: Graph) -> tuple:
    """pairmask[v][u]: vertices w making {u, v, w} an induced P3."""
    n = g.n
    pm = [[0] * n for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            if g.adj[u] >> v & 1:
                m = g.adj[u] ^ g.adj[v]
            else:
                m = g.adj[u] & g.adj[v]
            m &= ~(1 << u | 1 << v)
            pm[u][v] = pm[v][u] = m
    return tuple(tuple(r) for r in pm)


@lru_cache(maxsize=1024)
def eta(g: Graph) -> CliqueResult:
    """Largest S whose complement-induced subgraph is complete multipartite with >= 2 parts.

    Equivalently ``<S>`` in ``g`` is a disjoint union of at least two cliques.
    The value is 0 when no such S exists (e.g. complete graphs).
    """
    full = (1 << g.n) - 1
    need = [full & ~g.closed(u) for u in range(g.n)]
    value, witness = SetSearch(g.n, pairmask=_cluster_pairmask(g)).maximum_with(need)
    return CliqueResult(value, witness)


def gp_diameter2(g: Graph) -> GpResult:
    if diameter(g) != 2:
        raise WrongDiameter("formula max{omega, eta} needs diameter 2")
    om, et = clique_number(g), eta(g)
    best = max((om.value, _neg(om.witness)), (et.value, _neg(et.witness)))
    winner = om if (om.value, _neg(om.witness)) == best else et
    return GpResult(winner.value, winner.witness, 0)


def _neg(witness):
    # larger key = lexicographically smaller witness
    return tuple(-v for v in witness)


def check_characterization(g: Graph, s: Iterable[int], d: Optional[DistMatrix] = None) -> PartitionCheck:
    """Test the component/partition description of general position sets on ``s``."""
    require_connected(g)
    s = vertex_set(g, s)
    d = bfs_all_pairs(g) if d is None else d
    h = induced_subgraph(g, s)
    parts = sorted(tuple(sorted(s[i] for i in bits(c))) for c in component_masks(h))
    complete = all(g.adj[u] >> v & 1 for p in parts for u, v in itertools.combinations(p, 2))
    table = {}
    constant = True
    for i, j in itertools.combinations(range(len(parts)), 2):
        values = {d[u][v] for u in parts[i] for v in parts[j]}
        if len(values) != 1:
            constant = False
            break
        table[i, j] = table[j, i] = values.pop()
    transitive_free = constant and all(
        table[i, k] != table[i, j] + table[j, k]
        for i, j, k in itertools.permutations(range(len(parts)), 3)
    )
    return PartitionCheck(tuple(parts), table if constant else None, complete, constant, transitive_free)


def gp_set_inducing_sr_clique(g: Graph) -> Optional[VertexSet]:
    """A maximum general position set whose members are pairwise MMD, if one exists."""
    require_connected(g)
    k = gp_number(g).value
    sr = strong_resolving_graph(g)
    value, witness = SetSearch(g.n, keep=sr.adj, pairmask=_gp_pairmask(g)).maximum()
    return witness if value == k else None


def isometric_cover_bound(g: Graph, cover: Iterable[Iterable[int]]) -> int:
    """Sum of gp over the parts of an isometric cover; an upper bound on gp(g)."""
    require_connected(g)
    d = bfs_all_pairs(g)
    parts = [vertex_set(g, p) for p in cover]
    covered = set().union(*parts) if parts else set()
    if len(covered) != g.n:
        raise NotACover(f"cover misses {sorted(set(range(g.n)) - covered)}")
    total = 0
    for p in parts:
        h = induced_subgraph(g, p)
        if not is_connected(h) or not is_isometric_subgraph(g, p, d):
            raise NotIsometric(f"part {p} is not an isometric subgraph")
        total += gp_number(h).value
    return total
