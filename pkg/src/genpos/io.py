"""graph6 and plain edge-list formats."""
from __future__ import annotations

from typing import Iterable, Iterator

from .errors import BadToken, MalformedHeader, SelfLoop, TrailingBits, VertexOutOfRange
from .graph import Graph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    raise MalformedHeader(f"order {n} too large for graph6")


def emit_graph6(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise MalformedHeader("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(not 0 <= x <= 63 for x in data):
        raise MalformedHeader("graph6 bytes must lie in 63..126")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise MalformedHeader("unsupported or truncated graph6 size field")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    total = n * (n - 1) // 2
    if len(body) != (total + 5) // 6:
        raise TrailingBits(f"expected {(total + 5) // 6} data bytes for n={n}, got {len(body)}")
    if total % 6 and body[-1] & ((1 << (6 - total % 6)) - 1):
        raise TrailingBits("non-zero padding bits")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        if line.strip():
            yield parse_graph6(line)


def parse_edgelist(text: str) -> Graph:
    """``n <count>`` on the first line, then one ``u v`` pair per line (0-based)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise BadToken("missing 'n <count>' header")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n" or not head[1].isdigit():
        raise BadToken(f"bad header {lines[0]!r}")
    n = int(head[1])
    edges = set()
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != 2 or not all(t.lstrip("-").isdigit() for t in toks):
            raise BadToken(f"bad edge line {ln!r}")
        u, v = int(toks[0]), int(toks[1])
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge {u} {v} outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges))


def emit_edgelist(g: Graph) -> str:
    return "\n".join([f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise MalformedHeader(f"expected one graph6 line, got {len(lines)}")
        return parse_graph6(lines[0])
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise BadToken(f"unknown format {fmt!r}")


def emit_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return emit_graph6(g) + "\n"
    if fmt == "edgelist":
        return emit_edgelist(g)
    raise BadToken(f"unknown format {fmt!r}")
