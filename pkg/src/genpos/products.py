"""Graph products and the constructions built on them.

Every constructor returns ``(graph, vertex_map)``.  Product vertex ids
enumerate the second coordinate fastest, so ``(g, h)`` has id
``g * n(H) + h`` for the binary products.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ArityMismatch, DisconnectedGadget, InvalidCoordinate, InvalidVertex
from .graph import Graph, VertexSet, bits, is_connected


@dataclass(frozen=True)
class ProductVertexMap:
    backward: tuple  # product id -> coordinate tuple

    @property
    def forward(self) -> dict:
        return {c: i for i, c in enumerate(self.backward)}

    def __getitem__(self, coord) -> int:
        try:
            return self.forward[tuple(coord)]
        except KeyError:
            raise InvalidCoordinate(f"no product vertex at {coord!r}") from None

    def coords(self, v: int) -> tuple:
        return self.backward[v]


@dataclass(frozen=True)
class RootedSpec:
    base: Graph
    gadget: Graph
    root: int


def _grid(g: Graph, h: Graph, adjacent) -> tuple:
    nh = h.n
    coords = tuple((a, b) for a in range(g.n) for b in range(nh))
    adj = []
    for a, b in coords:
        row = 0
        for a2, b2 in coords:
            if (a, b) != (a2, b2) and adjacent(a, b, a2, b2):
                row |= 1 << (a2 * nh + b2)
        adj.append(row)
    labels = tuple(f"({g.label(a)},{h.label(b)})" for a, b in coords)
    return Graph(len(coords), tuple(adj), labels), ProductVertexMap(coords)


def direct_product(g: Graph, h: Graph):
    return _grid(g, h, lambda a, b, a2, b2: g.has_edge(a, a2) and h.has_edge(b, b2))


def strong_product(g: Graph, h: Graph):
    def adjacent(a, b, a2, b2):
        ga, hb = g.has_edge(a, a2), h.has_edge(b, b2)
        return (ga and b == b2) or (a == a2 and hb) or (ga and hb)

    return _grid(g, h, adjacent)


def lexicographic_product(g: Graph, h: Graph):
    return _grid(g, h, lambda a, b, a2, b2: g.has_edge(a, a2) or (a == a2 and h.has_edge(b, b2)))


def generalized_lexicographic(g: Graph, parts: Sequence[Graph]):
    """Replace vertex i of ``g`` by ``parts[i]``; g-edges become complete joins."""
    if len(parts) != g.n:
        raise ArityMismatch(f"{len(parts)} parts for a base of order {g.n}")
    coords = tuple((i, x) for i, p in enumerate(parts) for x in range(p.n))
    index = {c: k for k, c in enumerate(coords)}
    block = []
    for i, p in enumerate(parts):
        m = 0
        for x in range(p.n):
            m |= 1 << index[i, x]
        block.append(m)
    adj = []
    for i, x in coords:
        row = 0
        for y in bits(parts[i].adj[x]):
            row |= 1 << index[i, y]
        for j in bits(g.adj[i]):
            row |= block[j]
        adj.append(row)
    labels = tuple(f"({g.label(i)},{parts[i].label(x)})" for i, x in coords)
    return Graph(len(coords), tuple(adj), labels), ProductVertexMap(coords)


def corona(g: Graph, h: Graph):
    return corona_multi(g, [h] * g.n)


def corona_multi(g: Graph, gadgets: Sequence[Graph]):
    """Corona with a possibly different graph hung below each base vertex.

    Base vertex i has coordinate ``(i,)``; vertex x of its copy has ``(i, x)``.
    """
    if len(gadgets) != g.n:
        raise ArityMismatch(f"{len(gadgets)} gadgets for a base of order {g.n}")
    coords = []
    for i, h in enumerate(gadgets):
        coords.append((i,))
        coords += [(i, x) for x in range(h.n)]
    index = {c: k for k, c in enumerate(coords)}
    edges = [(index[(i,)], index[(j,)]) for i, j in g.edges()]
    for i, h in enumerate(gadgets):
        base = index[(i,)]
        edges += [(base, index[i, x]) for x in range(h.n)]
        edges += [(index[i, x], index[i, y]) for x, y in h.edges()]
    labels = [f"({g.label(c[0])})" if len(c) == 1 else f"({g.label(c[0])},{gadgets[c[0]].label(c[1])})" for c in coords]
    return Graph.from_edges(len(coords), edges, labels), ProductVertexMap(tuple(coords))


def rooted_product(spec: RootedSpec):
    """G o_v H: a copy of the gadget per base vertex, its root identified with that vertex.

    Vertex ``(i, root)`` is base vertex i; there are n(G) * n(H) vertices.
    """
    g, h, root = spec.base, spec.gadget, spec.root
    if not 0 <= root < h.n:
        raise InvalidVertex(f"root {root} not in gadget")
    if not is_connected(h):
        raise DisconnectedGadget("rooted product needs a connected gadget")
    nh = h.n
    coords = tuple((i, x) for i in range(g.n) for x in range(nh))
    edges = [(i * nh + x, i * nh + y) for i in range(g.n) for x, y in h.edges()]
    edges += [(i * nh + root, j * nh + root) for i, j in g.edges()]
    labels = [f"({g.label(i)},{h.label(x)})" for i, x in coords]
    return Graph.from_edges(len(coords), edges, labels), ProductVertexMap(coords)


def layer(pmap: ProductVertexMap, which: str, fixed: int) -> VertexSet:
    """The G-layer at H-coordinate ``fixed`` (which="G") or the H-layer at ``fixed`` (which="H")."""
    if which not in ("G", "H"):
        raise InvalidCoordinate("which must be 'G' or 'H'")
    slot = 1 if which == "G" else 0
    out = tuple(v for v, c in enumerate(pmap.backward) if len(c) == 2 and c[slot] == fixed)
    if not out:
        raise InvalidCoordinate(f"no {which}-layer at coordinate {fixed}")
    return out
