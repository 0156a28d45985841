import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from mostar import (
    Edge,
    Graph,
    GraphError,
    all_pairs_distances,
    cycle,
    dot_product,
    edge_mostar,
    edge_report,
    edge_vertex_distance,
    mostar_summary,
    path,
    star,
    vertex_mostar,
)
from _helpers import naive_edge_mostar, random_connected, random_tree


def pend(g, at, k):
    for _ in range(k):
        g = g.add_pendant(at)
    return g


def test_edge_vertex_distance_path():
    g = path(4)
    dm = all_pairs_distances(g)
    assert edge_vertex_distance(dm, Edge(2, 3), 0) == 2


def test_edge_vertex_distance_incident_zero():
    g = cycle(5)
    dm = all_pairs_distances(g)
    assert edge_vertex_distance(dm, Edge(0, 1), 0) == 0
    assert edge_vertex_distance(dm, Edge(2, 3), 0) == 2


def test_edge_report_triangle():
    r = edge_report(cycle(3), Edge(0, 1))
    assert (r.m_u, r.m_v, r.psi) == (1, 1, 0)


def test_edge_report_path():
    r = edge_report(path(4), Edge(0, 1))
    assert (r.m_u, r.m_v, r.psi) == (0, 2, 2)


def test_edge_report_star():
    r = edge_report(star(5), Edge(0, 1))
    assert (r.m_u, r.m_v, r.psi) == (3, 0, 3)


def test_edge_report_errors():
    with pytest.raises(GraphError):
        edge_report(cycle(4), Edge(0, 2))
    with pytest.raises(GraphError):
        edge_report(Graph.from_edges(4, [(0, 1), (2, 3)]), Edge(0, 1))


def test_cycles_are_balanced():
    for n in range(3, 10):
        assert edge_mostar(cycle(n)) == 0


def test_three_squares_value():
    g = Graph.from_edges(
        10,
        [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0),
         (0, 7), (7, 8), (8, 9), (9, 0)],
    )
    assert edge_mostar(g) == 96  # 12^2 - 12 - 36


def test_cycle_with_pendants_value():
    assert edge_mostar(pend(cycle(3), 0, 2)) == 12  # (m-3)(m+1) at m=5


def test_vertex_mostar_examples():
    assert vertex_mostar(cycle(6)) == 0
    assert vertex_mostar(path(3)) == 2
    for n in range(3, 8):
        assert vertex_mostar(star(n)) == (n - 1) * (n - 2)


def test_summary_partition_and_json():
    g = pend(cycle(4), 0, 3)
    s = mostar_summary(g)
    assert s.edge_mostar == sum(r.psi for r in s.per_edge)
    d = json.loads(json.dumps(s.to_dict()))
    assert set(d) == {"graph6", "edge_mostar", "edges"}
    assert set(d["edges"][0]) == {"u", "v", "mu", "mv", "eq", "psi"}
    for row in d["edges"]:
        assert row["mu"] + row["mv"] + row["eq"] == g.m - 1


@given(st.integers(0, 10**6))
@settings(max_examples=120, deadline=None)
def test_partition_identity_and_incident_bound(seed):
    rng = random.Random(seed)
    g = random_connected(rng, 2, 10)
    dm = all_pairs_distances(g)
    for e in g.edges():
        r = edge_report(g, e, dm)
        assert r.m_u + r.m_v + r.equidistant == g.m - 1
        assert r.m_u >= g.degree(e.u) - 1
        assert r.m_v >= g.degree(e.v) - 1


@given(st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_oracle_equivalence(seed):
    rng = random.Random(seed)
    g = random_connected(rng, 2, 7)
    assert edge_mostar(g) == naive_edge_mostar(g)


@given(st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_pendant_tree_contribution_invariance(seed):
    """Swapping one pendant tree for another of equal size cannot change the
    host graph's own edge contributions."""
    rng = random.Random(seed)
    g1 = random_connected(rng, 3, 7)
    u = rng.randrange(g1.n)
    size = rng.randint(2, 5)
    t1 = random_tree(rng, size)
    t2 = random_tree(rng, size)

    def host_contribution(t):
        fused = dot_product(g1, u, t, rng_root)
        dm = all_pairs_distances(fused)
        return sum(edge_report(fused, e, dm).psi for e in g1.edges())

    rng_root = rng.randrange(size)
    assert host_contribution(t1) == host_contribution(t2)


def test_disconnected_rejected():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)])
    with pytest.raises(GraphError):
        edge_mostar(g)
    with pytest.raises(GraphError):
        vertex_mostar(g)
