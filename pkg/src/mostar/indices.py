"""Edge Mostar index and friends.

For an edge e = uv, every other edge f is classified by comparing its
distance to u against its distance to v (edge-to-vertex distance is the
minimum over the edge's endpoints).  Ties count toward neither side; e
itself is excluded since it sits at distance 0 from both endpoints.  The
per-edge contribution is the absolute difference of the two counts, and
the edge Mostar index is the sum of contributions over all edges.

All arithmetic is exact integer arithmetic; Python integers make the
family-polynomial checks at large sizes safe without any width concerns.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Edge, Graph, GraphError, all_pairs_distances, is_connected


@dataclass(frozen=True)
class EdgeReport:
    """Orientation counts for a single edge e = (u, v)."""

    edge: Edge
    m_u: int          # edges strictly closer to u
    m_v: int          # edges strictly closer to v
    equidistant: int  # remaining edges (e itself excluded)

    @property
    def psi(self) -> int:
        return abs(self.m_u - self.m_v)

    def to_dict(self) -> dict:
        return {
            "u": self.edge.u,
            "v": self.edge.v,
            "mu": self.m_u,
            "mv": self.m_v,
            "eq": self.equidistant,
            "psi": self.psi,
        }


@dataclass(frozen=True)
class MostarSummary:
    graph6: str
    edge_mostar: int
    per_edge: tuple[EdgeReport, ...] = field(repr=False)

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "edge_mostar": self.edge_mostar,
            "edges": [r.to_dict() for r in self.per_edge],
        }


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise GraphError("operation requires a connected graph")


def edge_vertex_distance(dm: list[list], f: Edge, x: int) -> int:
    """min(d(x, f.u), d(x, f.v)) from a precomputed distance table."""
    du = dm[x][f.u]
    dv = dm[x][f.v]
    return du if du < dv else dv


def edge_report(g: Graph, e: Edge, dm: list[list] | None = None) -> EdgeReport:
    """Classify all edges f != e by which endpoint of e they sit closer to."""
    e = Edge.of(e[0], e[1])
    if not g.has_edge(e.u, e.v):
        raise GraphError(f"edge {e} not in graph")
    _require_connected(g)
    if dm is None:
        dm = all_pairs_distances(g)
    du = dm[e.u]
    dv = dm[e.v]
    m_u = m_v = eq = 0
    for f in g.edges():
        if f == e:
            continue
        fu = du[f.u] if du[f.u] < du[f.v] else du[f.v]
        fv = dv[f.u] if dv[f.u] < dv[f.v] else dv[f.v]
        if fu < fv:
            m_u += 1
        elif fv < fu:
            m_v += 1
        else:
            eq += 1
    return EdgeReport(e, m_u, m_v, eq)


def edge_mostar(g: Graph) -> int:
    """Sum of |m_u - m_v| over all edges; one BFS per vertex, then a linear
    pass per edge."""
    _require_connected(g)
    dm = all_pairs_distances(g)
    edges = g.edges()
    total = 0
    for u, v in edges:
        du = dm[u]
        dv = dm[v]
        m_u = m_v = 0
        for x, y in edges:
            if x == u and y == v:
                continue
            fu = du[x] if du[x] < du[y] else du[y]
            fv = dv[x] if dv[x] < dv[y] else dv[y]
            if fu < fv:
                m_u += 1
            elif fv < fu:
                m_v += 1
        total += m_u - m_v if m_u >= m_v else m_v - m_u
    return total


def vertex_mostar(g: Graph) -> int:
    """Vertex analogue: count vertices strictly closer to each endpoint."""
    _require_connected(g)
    dm = all_pairs_distances(g)
    total = 0
    for u, v in g.edges():
        du = dm[u]
        dv = dm[v]
        n_u = n_v = 0
        for x in range(g.n):
            if du[x] < dv[x]:
                n_u += 1
            elif dv[x] < du[x]:
                n_v += 1
        total += n_u - n_v if n_u >= n_v else n_v - n_u
    return total


def mostar_summary(g: Graph) -> MostarSummary:
    """Full per-edge breakdown; distances computed once and shared."""
    from .graphs import write_graph6

    _require_connected(g)
    dm = all_pairs_distances(g)
    reports = tuple(edge_report(g, e, dm) for e in g.edges())
    return MostarSummary(write_graph6(g), sum(r.psi for r in reports), reports)
