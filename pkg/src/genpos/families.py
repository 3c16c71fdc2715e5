"""Named graphs and constructions, plus small-graph enumeration and canonical forms."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

from .errors import InvalidParameter, InvalidSpec, TooLarge
from .graph import Graph, bits, disjoint_union, is_connected


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParameter(msg)


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def empty(n: int) -> Graph:
    _need(n >= 0, "order must be non-negative")
    return Graph(n, (0,) * n)


def complete_multipartite(*parts: int) -> Graph:
    _need(len(parts) >= 1 and all(p >= 1 for p in parts), "parts must be positive")
    owner = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(owner)
    return Graph.from_edges(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if owner[u] != owner[v]])


def complete_bipartite(r: int, t: int) -> Graph:
    return complete_multipartite(r, t)


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return complete_bipartite(1, leaves)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G box H; only used as a comparison fixture."""
    n = g.n * h.n
    edges = []
    for a in range(g.n):
        for b in range(h.n):
            u = a * h.n + b
            edges += [(u, a * h.n + b2) for b2 in bits(h.adj[b]) if b2 > b]
            edges += [(u, a2 * h.n + b) for a2 in bits(g.adj[a]) if a2 > a]
    return Graph.from_edges(n, edges)


# --- the tree family built from paths ---------------------------------------


@dataclass(frozen=True)
class TreeTSpec:
    """Paths P_{path_orders[0]}, P_{path_orders[1]}, ... glued one at a time.

    ``attachments[i-1] = (k, target)`` joins vertex ``k`` of the i-th added
    path (0-based along the path) to vertex ``target`` of the tree built so
    far.  Vertex ids are assigned path by path.
    """

    path_orders: tuple
    attachments: tuple = field(default=())

    @classmethod
    def simple(cls, *path_orders: int) -> "TreeTSpec":
        """Each new path hangs by its second vertex from the centre of the first path."""
        hub = path_orders[0] // 2 if path_orders else 0
        return cls(tuple(path_orders), tuple((1, hub) for _ in path_orders[1:]))


def tree_T(spec: TreeTSpec) -> Graph:
    orders = spec.path_orders
    if not orders or any(o < 3 for o in orders):
        raise InvalidSpec("every path must have order >= 3")
    if len(spec.attachments) != len(orders) - 1:
        raise InvalidSpec("need one attachment per added path")
    n = orders[0]
    edges = [(i, i + 1) for i in range(n - 1)]
    deg = [0] * sum(orders)
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    for step, (order, (k, target)) in enumerate(zip(orders[1:], spec.attachments), start=2):
        if not 0 < k < order - 1:
            raise InvalidSpec(f"step {step}: path vertex {k} is a leaf of P_{order}")
        if not 0 <= target < n:
            raise InvalidSpec(f"step {step}: target {target} not in current tree")
        if step == 2 and deg[target] < 2:
            raise InvalidSpec("step 2: target is a leaf of the first path")
        if step >= 3 and deg[target] <= 2:
            raise InvalidSpec(f"step {step}: target {target} has degree <= 2")
        new = [(n + i, n + i + 1) for i in range(order - 1)] + [(n + k, target)]
        for u, v in new:
            deg[u] += 1
            deg[v] += 1
        edges += new
        n += order
    return Graph.from_edges(n, edges)


def leaves(g: Graph) -> tuple:
    return tuple(u for u in range(g.n) if g.degree(u) == 1)


# --- gadgets ----------------------------------------------------------------


def realization_gadget(r: int, t: int) -> Graph:
    """Graph with gp = r whose strong resolving graph has clique number t.

    A hub z (vertex 0) is tethered to t branches; ``q = r - t`` of them are
    4-cycles and the rest single edges.  For ``r > 2t`` there are too few
    branches for 4-cycles alone, so the last branch becomes a theta graph:
    ``m`` internally disjoint paths of length 3 between its tether vertex
    and a far vertex, contributing m to gp without enlarging the clique.
    """
    _need(r >= t >= 2, "need r >= t >= 2")
    q = r - t
    branches = []  # gp contribution of each branch: 1 = edge, 2 = C4, m>=3 = theta
    if q <= t:
        branches = [2] * q + [1] * (t - q)
    else:
        branches = [2] * (t - 1) + [r - 2 * (t - 1)]
    edges = []
    n = 1
    for kind in branches:
        a = n
        edges.append((0, a))
        if kind == 1:
            edges.append((a, a + 1))
            n += 2
        elif kind == 2:
            b, c, d = a + 1, a + 2, a + 3
            edges += [(a, b), (b, c), (c, d), (d, a)]
            n += 4
        else:
            far = a + 1 + 2 * kind
            for i in range(kind):
                x, y = a + 1 + 2 * i, a + 2 + 2 * i
                edges += [(a, x), (x, y), (y, far)]
            n = far + 1
    return Graph.from_edges(n, edges)


def rooted_clique_gadget(r: int, t: int):
    """K_r (vertices 0..r-1) plus a root r adjacent to vertices 0..t-1; returns (graph, root)."""
    _need(2 <= t <= r - 2, "need 2 <= t <= r - 2")
    edges = list(itertools.combinations(range(r), 2)) + [(i, r) for i in range(t)]
    return Graph.from_edges(r + 1, edges), r


# --- canonical forms and enumeration ----------------------------------------


@dataclass(frozen=True)
class CanonicalForm:
    certificate: bytes


def _refine(g: Graph, cells: list) -> list:
    while True:
        color = {}
        for idx, cell in enumerate(cells):
            for v in cell:
                color[v] = idx
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple((g.adj[v] & m).bit_count() for m in masks) for v in cell}
            for key in sorted(set(sig.values())):
                out.append([v for v in cell if sig[v] == key])
        if len(out) == len(cells):
            return out
        cells = out


def _certificate(g: Graph, order: list) -> bytes:
    pos = {v: i for i, v in enumerate(order)}
    value = 0
    for i in range(g.n):
        row = 0
        for w in bits(g.adj[order[i]]):
            row |= 1 << pos[w]
        value = value << g.n | row
    return bytes([g.n]) + value.to_bytes((g.n * g.n + 7) // 8, "big")


def canonical_form(g: Graph) -> CanonicalForm:
    """Isomorphism-invariant certificate via individualisation and refinement."""
    if g.n > 16:
        raise TooLarge("canonical_form supports n <= 16")
    best = [None]

    def search(cells):
        cells = _refine(g, cells)
        if all(len(c) == 1 for c in cells):
            cert = _certificate(g, [c[0] for c in cells])
            if best[0] is None or cert < best[0]:
                best[0] = cert
            return
        k = next(i for i, c in enumerate(cells) if len(c) > 1)
        for v in cells[k]:
            rest = [w for w in cells[k] if w != v]
            search(cells[:k] + [[v], rest] + cells[k + 1:])

    search([list(range(g.n))])
    return CanonicalForm(best[0] if best[0] is not None else bytes([0]))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)


@lru_cache(maxsize=None)
def _connected_reps(n: int) -> tuple:
    pairs = list(itertools.combinations(range(n), 2))
    seen = {}
    for code in range(1 << len(pairs)):
        if n > 1 and code.bit_count() < n - 1:
            continue
        g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if code >> i & 1])
        if not is_connected(g):
            continue
        cert = canonical_form(g).certificate
        if cert not in seen:
            seen[cert] = g
    return tuple(seen[c] for c in sorted(seen))


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs of order n (1 <= n <= 6)."""
    _need(1 <= n <= 6, "enumeration supports 1 <= n <= 6")
    yield from _connected_reps(n)


def connected_graphs_up_to(n_max: int) -> list:
    return [g for n in range(1, n_max + 1) for g in enumerate_connected_graphs(n)]


def random_tree(n: int, seed: int) -> Graph:
    _need(n >= 1, "need n >= 1")
    if n <= 2:
        return path(n)
    rng = random.Random(seed)
    prufer = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in prufer:
        degree[v] += 1
    edges = []
    for v in prufer:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    _need(n >= 1, "need n >= 1")
    rng = random.Random(seed)
    while True:
        edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            return g


# --- textual family specs, shared by the CLI and check registry -------------

_FAMILIES = {
    "path": lambda a: path(*a),
    "cycle": lambda a: cycle(*a),
    "complete": lambda a: complete(*a),
    "empty": lambda a: empty(*a),
    "star": lambda a: star(*a),
    "kbip": lambda a: complete_bipartite(*a),
    "multipartite": lambda a: complete_multipartite(*a),
    "petersen": lambda a: petersen(),
    "gq": lambda a: realization_gadget(*a),
    "clique-gadget": lambda a: rooted_clique_gadget(*a)[0],
    "tree-T": lambda a: tree_T(TreeTSpec.simple(*a)),
    "random-tree": lambda a: random_tree(*a),
}


def family_names() -> list:
    return sorted(_FAMILIES)


def from_spec(text: str, n: Optional[int] = None) -> Graph:
    """Build a graph from ``name[:a,b,...]``, e.g. ``cycle:5`` or ``kbip:2,3``."""
    name, _, args = text.partition(":")
    if name not in _FAMILIES:
        raise InvalidParameter(f"unknown family {name!r}; choose from {', '.join(family_names())}")
    try:
        values = [int(x) for x in args.split(",") if x.strip()]
    except ValueError as exc:
        raise InvalidParameter(f"bad parameters in {text!r}") from exc
    if n is not None and not values:
        values = [n]
    try:
        return _FAMILIES[name](values)
    except TypeError as exc:
        raise InvalidParameter(f"wrong number of parameters for {name!r}") from exc
