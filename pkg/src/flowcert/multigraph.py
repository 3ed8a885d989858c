"""Undirected multigraph with stable edge indices, cuts, and graph I/O.

Vertices are 0..n-1.  Edges are an indexed tuple of unordered pairs; parallel
edges are distinct indices sharing endpoints, loops are rejected.  The stored
pair order (u, v) doubles as the reference orientation for flows.  All
operations are pure and iterate in index order, so downstream constructions
are reproducible.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from flowcert._flownet import INF, FlowNet
from flowcert.errors import ParseError

EdgeSet = frozenset
VertexSet = frozenset

INFINITY = float("inf")


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[tuple[int, int], ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for idx, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {idx} endpoint out of range: ({u}, {v})")
            if u == v:
                raise ValueError(f"edge {idx} is a loop at vertex {u}")

    @cached_property
    def incidence(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex: tuple of (edge index, other endpoint), in edge order."""
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for idx, (u, v) in enumerate(self.edges):
            inc[u].append((idx, v))
            inc[v].append((idx, u))
        return tuple(tuple(entries) for entries in inc)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(entries) for entries in self.incidence)

    def is_cubic(self) -> bool:
        return all(len(entries) == 3 for entries in self.incidence)

    def other_end(self, edge: int, v: int) -> int:
        u, w = self.edges[edge]
        if v == u:
            return w
        if v == w:
            return u
        raise ValueError(f"vertex {v} not an endpoint of edge {edge}")

    def is_simple(self) -> bool:
        seen = set()
        for u, v in self.edges:
            key = (u, v) if u < v else (v, u)
            if key in seen:
                return False
            seen.add(key)
        return True

    def adjacency_matrix(self) -> list[list[int]]:
        """Multiplicity matrix; entry [u][v] counts parallel edges."""
        mat = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            mat[u][v] += 1
            mat[v][u] += 1
        return mat

    def relabeled(self, perm: Sequence[int]) -> "Multigraph":
        """Image under the vertex permutation perm (perm[v] is the new label)."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of the vertices")
        return Multigraph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges), name=self.name)

    def graph_id(self) -> str:
        """Stable identifier: the name if present, else a digest of the labeled edge list."""
        if self.name:
            return self.name
        blob = f"{self.n}|" + ";".join(f"{u},{v}" for u, v in self.edges)
        return "sha256:" + hashlib.sha256(blob.encode()).hexdigest()[:16]


# ---------------------------------------------------------------------------
# parsing and encoding


def parse_graph(text: bytes, format: str) -> Multigraph:
    if isinstance(text, str):
        text = text.encode("ascii")
    if format == "edge_list":
        return parse_edge_list(text)
    if format == "graph6":
        return parse_graph6(text)
    raise ValueError(f"unknown format {format!r}")


def parse_edge_list(text: bytes) -> Multigraph:
    """One "u v" pair per line, whitespace separated, '#' comments, 0-based."""
    edges: list[tuple[int, int]] = []
    offset = 0
    max_vertex = -1
    for raw_line in text.split(b"\n"):
        line = raw_line.split(b"#", 1)[0].strip()
        if line:
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(f"expected 'u v', got {raw_line.strip()!r}", offset)
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"non-integer vertex in {raw_line.strip()!r}", offset) from None
            if u < 0 or v < 0:
                raise ParseError(f"negative vertex index in {raw_line.strip()!r}", offset)
            if u == v:
                raise ParseError(f"loop edge {u} {v}", offset)
            edges.append((u, v))
            max_vertex = max(max_vertex, u, v)
        offset += len(raw_line) + 1
    return Multigraph(max_vertex + 1, tuple(edges))


def encode_edge_list(g: Multigraph) -> bytes:
    return b"".join(f"{u} {v}\n".encode() for u, v in g.edges)


_G6_HEADER = b">>graph6<<"


def parse_graph6(text: bytes) -> Multigraph:
    """Decode the standard graph6 byte format (simple graphs only)."""
    data = text.strip()
    base = 0
    if data.startswith(_G6_HEADER):
        base = len(_G6_HEADER)
        data = data[base:]
    if not data:
        raise ParseError("empty graph6 input", base)
    if b"\n" in data:
        raise ParseError("trailing data after graph6 line", base + data.index(b"\n"))
    for i, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise ParseError(f"byte {byte} outside graph6 range 63..126", base + i)
    n, pos = _g6_read_order(data, base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise ParseError(
            f"graph6 length mismatch: order {n} needs {nbytes} data bytes, got {len(data) - pos}",
            base + pos,
        )
    bits = []
    for i in range(nbytes):
        bits.extend((data[pos + i] - 63) >> shift & 1 for shift in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise ParseError("nonzero padding bits in graph6 data", base + len(data) - 1)
    edges = []
    k = 0
    for col in range(1, n):
        for row in range(col):
            if bits[k]:
                edges.append((row, col))
            k += 1
    return Multigraph(n, tuple(edges))


def _g6_read_order(data: bytes, base: int) -> tuple[int, int]:
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise ParseError("truncated graph6 order field", base)
        n = 0
        for byte in data[1:4]:
            n = (n << 6) | (byte - 63)
        return n, 4
    if len(data) < 8:
        raise ParseError("truncated graph6 order field", base)
    n = 0
    for byte in data[2:8]:
        n = (n << 6) | (byte - 63)
    return n, 8


def encode_graph6(g: Multigraph) -> bytes:
    """Encode a simple graph in graph6.  Refuses parallel edges."""
    if not g.is_simple():
        raise ValueError("graph6 cannot represent parallel edges")
    n = g.n
    if n <= 62:
        header = bytes([n + 63])
    elif n <= 258047:
        header = bytes([126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    else:
        raise ValueError("graph too large for this encoder")
    adj = [[False] * n for _ in range(n)]
    for u, v in g.edges:
        adj[u][v] = adj[v][u] = True
    bits = [adj[row][col] for col in range(1, n) for row in range(col)]
    out = bytearray(header)
    for i in range(0, len(bits), 6):
        group = 0
        for j in range(6):
            group = group << 1 | (1 if i + j < len(bits) and bits[i + j] else 0)
        out.append(group + 63)
    return bytes(out)


# ---------------------------------------------------------------------------
# cuts, connectivity, girth


def boundary(g: Multigraph, X: Iterable[int]) -> frozenset:
    """Edges with exactly one endpoint in X."""
    inside = set(X)
    return frozenset(idx for idx, (u, v) in enumerate(g.edges) if (u in inside) != (v in inside))


def connected_components(g: Multigraph) -> list[frozenset]:
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for _, w in g.incidence[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Multigraph) -> bool:
    return len(connected_components(g)) <= 1


def find_bridges(g: Multigraph) -> frozenset:
    """All bridges, by iterative DFS lowpoints.  Parallel edges are never
    bridges because only the tree edge's index is excluded from lowpoint
    updates."""
    disc = [-1] * g.n
    low = [0] * g.n
    bridges = []
    counter = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        stack: list[tuple[int, int, int]] = [(root, -1, 0)]  # (vertex, parent edge idx, child pos)
        disc[root] = low[root] = counter
        counter += 1
        while stack:
            u, parent_edge, i = stack.pop()
            if i < len(g.incidence[u]):
                stack.append((u, parent_edge, i + 1))
                edge, w = g.incidence[u][i]
                if edge == parent_edge:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, edge, 0))
                else:
                    low[u] = min(low[u], disc[w])
            elif parent_edge >= 0:
                p = g.other_end(parent_edge, u)
                low[p] = min(low[p], low[u])
                if low[u] > disc[p]:
                    bridges.append(parent_edge)
    return frozenset(bridges)


def is_bridgeless(g: Multigraph) -> bool:
    return not find_bridges(g)


def girth(g: Multigraph) -> int | float:
    """Length of a shortest cycle; 2 with parallel edges, INFINITY for forests.

    BFS from every vertex; a non-tree edge scanned from u to a visited w gives
    a closed walk of length dist[u] + dist[w] + 1, which is at least the girth
    and attains it for some root on a shortest cycle.
    """
    seen_pairs = set()
    for u, v in g.edges:
        key = (u, v) if u < v else (v, u)
        if key in seen_pairs:
            return 2
        seen_pairs.add(key)
    best = INFINITY
    for root in range(g.n):
        dist = {root: 0}
        via_edge = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if dist[u] * 2 >= best:
                continue
            for edge, w in g.incidence[u]:
                if edge == via_edge[u]:
                    continue
                if w not in dist:
                    dist[w] = dist[u] + 1
                    via_edge[w] = edge
                    queue.append(w)
                else:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


@dataclass(frozen=True)
class CutResult:
    value: int
    cut_edges: frozenset
    side: frozenset  # source-side vertex set; cut_edges == boundary(side)


def max_flow_min_cut(
    g: Multigraph,
    sources: Iterable[int],
    sinks: Iterable[int],
    limit: int = INF,
) -> CutResult:
    """Minimum number of edges separating all sources from all sinks, with
    unit capacity per edge (parallel edges each contribute 1).

    With `limit` set, the search stops once that many augmenting paths exist;
    the returned value is then a lower bound and the cut fields are not
    meaningful (used to discard candidate pairs above a known bound).
    """
    src = sorted(set(sources))
    snk = sorted(set(sinks))
    if not src or not snk:
        raise ValueError("sources and sinks must be nonempty")
    if set(src) & set(snk):
        raise ValueError("sources and sinks must be disjoint")
    net = FlowNet(g.n + 2)
    s_node, t_node = g.n, g.n + 1
    for u, v in g.edges:
        net.add_arc(u, v, 1, rev_cap=1)
    for v in src:
        net.add_arc(s_node, v, INF)
    for v in snk:
        net.add_arc(v, t_node, INF)
    value = net.max_flow(s_node, t_node, limit=limit)
    if value >= limit:
        return CutResult(value, frozenset(), frozenset())
    side = frozenset(net.residual_reachable(s_node) - {s_node})
    cut = boundary(g, side)
    assert len(cut) == value, "max-flow/min-cut mismatch"
    return CutResult(value, cut, side)


# ---------------------------------------------------------------------------
# connected vertex set enumeration (canonical order)


def connected_vertex_sets(g: Multigraph, max_size: int | None = None) -> Iterator[tuple[int, ...]]:
    """Every nonempty vertex set inducing a connected subgraph, exactly once.

    Canonical order: sets rooted at their minimum vertex; the extension search
    adds allowed neighbours in increasing index order.  Deterministic, so
    "first violator" semantics downstream are well defined.
    """
    cap = g.n if max_size is None else min(max_size, g.n)
    neighbours = [sorted({w for _, w in g.incidence[v]}) for v in range(g.n)]

    def extend(members: list[int], frontier: list[int], banned: set[int]):
        yield tuple(members)
        if len(members) >= cap:
            return
        for i, u in enumerate(frontier):
            new_banned = banned | set(frontier[:i])
            members.append(u)
            extra = [w for w in neighbours[u] if w > members[0] and w not in banned and w not in set(members) and w not in set(frontier)]
            yield from extend(members, frontier[i + 1:] + extra, new_banned)
            members.pop()

    for root in range(g.n):
        start = [w for w in neighbours[root] if w > root]
        yield from extend([root], start, set())
