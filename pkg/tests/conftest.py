import itertools

import networkx as nx
from hypothesis import strategies as st

from genpos.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=True):
    """Random simple graphs; connected ones get a random spanning tree first."""
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = {p for p, keep in zip(pairs, chosen) if keep}
    if connected:
        for v in range(1, n):
            edges.add((draw(st.integers(0, v - 1)), v))
    return Graph.from_edges(n, sorted(edges))


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    idx = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(idx[u], idx[v]) for u, v in h.edges()])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import GATE_LINES
    except ImportError:
        return
    if GATE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(GATE_LINES, key=lambda s: int(s.split()[2])):
            terminalreporter.write_line(line)
