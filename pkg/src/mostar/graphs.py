"""Immutable simple-graph representation on vertex set {0..n-1}.

Adjacency is stored as one bitmask per vertex, which keeps edge tests,
BFS frontiers and neighbourhood scans cheap at the sizes this library
works with.  Graphs are value objects: every mutator returns a new
instance, so instances can be shared freely across worker processes.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Optional


class GraphError(ValueError):
    """Invalid graph construction or operation."""


class Edge(NamedTuple):
    """Undirected edge, normalized so that u < v."""

    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        if a == b:
            raise GraphError(f"self-loop at vertex {a}")
        return cls(a, b) if a < b else cls(b, a)


def _bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Undirected simple graph with contiguous integer vertex labels."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: tuple[int, ...]):
        self.n = n
        self.adj = adj

    # -- construction ---------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "Graph":
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"edge ({a},{b}) out of range for n={n}")
            if a == b:
                raise GraphError(f"self-loop at vertex {a}")
            if adj[a] >> b & 1:
                raise GraphError(f"parallel edge ({a},{b})")
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return cls(n, tuple(adj))

    # -- basic queries ---------------------------------------------------

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adj[a] >> b & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        return _bits(self.adj[v])

    def edges(self) -> list[Edge]:
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            base = u + 1
            while row:
                low = row & -row
                out.append(Edge(u, base + low.bit_length() - 1))
                row ^= low
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- mutators (return new graphs) -------------------------------------

    def add_edge(self, a: int, b: int) -> "Graph":
        e = Edge.of(a, b)
        if not (0 <= e.u < self.n and 0 <= e.v < self.n):
            raise GraphError(f"edge {e} out of range")
        if self.has_edge(e.u, e.v):
            raise GraphError(f"edge {e} already present")
        adj = list(self.adj)
        adj[e.u] |= 1 << e.v
        adj[e.v] |= 1 << e.u
        return Graph(self.n, tuple(adj))

    def remove_edge(self, a: int, b: int) -> "Graph":
        e = Edge.of(a, b)
        if not self.has_edge(e.u, e.v):
            raise GraphError(f"edge {e} not present")
        adj = list(self.adj)
        adj[e.u] &= ~(1 << e.v)
        adj[e.v] &= ~(1 << e.u)
        return Graph(self.n, tuple(adj))

    def add_pendant(self, at: int) -> "Graph":
        """Attach one new degree-1 vertex to `at` (new vertex gets label n)."""
        if not 0 <= at < self.n:
            raise GraphError(f"vertex {at} out of range")
        adj = list(self.adj) + [1 << at]
        adj[at] |= 1 << self.n
        return Graph(self.n + 1, tuple(adj))

    def relabel(self, perm: list[int]) -> "Graph":
        """Return the graph with vertex v renamed to perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation")
        adj = [0] * self.n
        for v, row in enumerate(self.adj):
            new = 0
            for w in _bits(row):
                new |= 1 << perm[w]
            adj[perm[v]] = new
        return Graph(self.n, tuple(adj))

    def induced(self, keep: list[int]) -> "Graph":
        """Induced subgraph on `keep`, relabeled to 0..len(keep)-1 in order."""
        pos = {v: i for i, v in enumerate(keep)}
        edges = []
        for i, v in enumerate(keep):
            for w in _bits(self.adj[v]):
                if w in pos and v < w:
                    edges.append((i, pos[w]))
        return Graph.from_edges(len(keep), edges)


# -- named constructors ----------------------------------------------------


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least 1 vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """Star on n vertices with center 0."""
    if n < 1:
        raise GraphError("star needs at least 1 vertex")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


# -- distances and connectivity --------------------------------------------


def bfs_distances(g: Graph, source: int) -> list[Optional[int]]:
    """Hop distances from source; None marks unreachable vertices.

    None is deliberate as the unreachable sentinel: arithmetic on it fails
    loudly instead of silently producing a huge bogus distance.
    """
    if not 0 <= source < g.n:
        raise GraphError(f"source {source} out of range")
    dist: list[Optional[int]] = [None] * g.n
    dist[source] = 0
    adj = g.adj
    seen = frontier = 1 << source
    d = 0
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= ~seen
        d += 1
        for v in _bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def all_pairs_distances(g: Graph) -> list[list[Optional[int]]]:
    """One BFS per vertex; row i is bfs_distances(g, i)."""
    return [bfs_distances(g, s) for s in range(g.n)]


def reachable_mask(adj: tuple[int, ...], start: int) -> int:
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: Graph) -> bool:
    """True when one BFS from vertex 0 reaches everything (n=0: True)."""
    if g.n == 0:
        return True
    return reachable_mask(g.adj, 0) == (1 << g.n) - 1


def cyclomatic_number(g: Graph) -> int:
    """m - n + 1 for a connected graph (3 = tricyclic, 0 = tree)."""
    if not is_connected(g):
        raise GraphError("cyclomatic number requires a connected graph")
    return g.m - g.n + 1


def dot_product(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """Disjoint union of g1 and g2 with v1 and v2 identified.

    g1 keeps its labels and the merged vertex keeps label v1; g2's other
    vertices follow in their original order starting at label g1.n.
    """
    if not 0 <= v1 < g1.n:
        raise GraphError(f"vertex {v1} out of range in first factor")
    if not 0 <= v2 < g2.n:
        raise GraphError(f"vertex {v2} out of range in second factor")
    remap = {}
    nxt = g1.n
    for w in range(g2.n):
        if w == v2:
            remap[w] = v1
        else:
            remap[w] = nxt
            nxt += 1
    edges = [(u, v) for u, v in g1.edges()]
    edges += [(remap[u], remap[v]) for u, v in g2.edges()]
    return Graph.from_edges(g1.n + g2.n - 1, edges)


# -- graph6 format ----------------------------------------------------------


class Graph6Error(ValueError):
    """Malformed graph6 input; `offset` is the failing byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def write_graph6(g: Graph) -> str:
    """Standard graph6 line (no trailing newline, no >>graph6<< header)."""
    n = g.n
    if n > 258047:
        raise GraphError("graph6 supports at most 258047 vertices here")
    if n <= 62:
        head = [n + 63]
    else:
        head = [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    bits = []
    for j in range(n):
        col = g.adj[j]
        for i in range(j):
            bits.append(col >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        b = 0
        for bit in bits[k : k + 6]:
            b = b << 1 | bit
        body.append(b + 63)
    return bytes(head + body).decode("ascii")


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 line (optional >>graph6<< header tolerated)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    data = s.encode("ascii", errors="replace")
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    for off, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte} outside graph6 range 63..126", off)
    pos = 0
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("graphs of order > 258047 unsupported", 0)
        if len(data) < 4:
            raise Graph6Error("truncated extended order field", len(data))
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    else:
        n = data[0] - 63
        pos = 1
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise Graph6Error(
            f"truncated adjacency data: need {nbytes} bytes, have {len(data) - pos}",
            len(data),
        )
    if len(data) - pos > nbytes:
        raise Graph6Error("trailing data after adjacency bits", pos + nbytes)
    adj = [0] * n
    k = 0
    for j in range(n):
        for i in range(j):
            byte = data[pos + k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))
