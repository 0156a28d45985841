import itertools
import random
from collections import defaultdict

import pytest
from hypothesis import given, settings, strategies as st

from mostar import (
    CanonCapacityError,
    Graph,
    canon,
    canonical_form,
    complete,
    cycle,
    isomorphic,
    path,
    star,
)
from mostar.canon import pair_orbit_reps
from mostar.graphs import _bits
from _helpers import random_connected


def brute_canon_key(g):
    best = None
    for perm in itertools.permutations(range(g.n)):
        adj = [0] * g.n
        for v in range(g.n):
            acc = 0
            for w in _bits(g.adj[v]):
                acc |= 1 << perm[w]
            adj[perm[v]] = acc
        t = tuple(adj)
        if best is None or t > best:
            best = t
    return (g.n, best)


def brute_orbits(g):
    parent = list(range(g.n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for perm in itertools.permutations(range(g.n)):
        ok = True
        for v in range(g.n):
            img = 0
            for w in _bits(g.adj[v]):
                img |= 1 << perm[w]
            if img != g.adj[perm[v]]:
                ok = False
                break
        if ok:
            for v in range(g.n):
                a, b = find(v), find(perm[v])
                if a != b:
                    parent[max(a, b)] = min(a, b)
    return tuple(find(v) for v in range(g.n))


def test_relabeled_c4_same_form():
    g = cycle(4)
    assert canonical_form(g) == canonical_form(g.relabel([2, 0, 3, 1]))


def test_c4_p4_distinct():
    assert canonical_form(cycle(4)) != canonical_form(path(4))


def test_same_graph_two_descriptions():
    assert isomorphic(complete(4).remove_edge(0, 1), cycle(4).add_edge(0, 2))


def test_capacity_error():
    with pytest.raises(CanonCapacityError):
        canon(Graph.empty(17))


def test_partition_agrees_with_brute_force():
    rng = random.Random(11)
    for n in range(1, 6):
        by_brute = defaultdict(set)
        by_canon = defaultdict(set)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for _ in range(150):
            chosen = tuple(sorted(e for e in pairs if rng.random() < rng.choice((0.3, 0.6))))
            g = Graph.from_edges(n, chosen)
            by_brute[brute_canon_key(g)].add(chosen)
            by_canon[canon(g).key].add(chosen)
        assert sorted(map(sorted, by_brute.values())) == sorted(
            map(sorted, by_canon.values())
        )


def test_orbits_are_full_automorphism_orbits():
    rng = random.Random(13)
    for _ in range(150):
        n = rng.randint(1, 6)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        g = Graph.from_edges(n, [e for e in pairs if rng.random() < 0.5])
        assert canon(g).orbit_of == brute_orbits(g)


def test_structured_orbits():
    res = canon(star(6))
    assert len(set(res.orbit_of)) == 2  # center and the leaves
    res = canon(cycle(6))
    assert len(set(res.orbit_of)) == 1


def test_pair_orbit_reps_on_star_edges():
    g = star(5)
    res = canon(g)
    reps = pair_orbit_reps(g.n, res.generators, [(e.u, e.v) for e in g.edges()])
    assert len(set(reps.values())) == 1  # all spokes equivalent


@given(st.integers(0, 10**6))
@settings(max_examples=100, deadline=None)
def test_relabeling_invariance(seed):
    rng = random.Random(seed)
    g = random_connected(rng, 2, 10)
    perm = list(range(g.n))
    rng.shuffle(perm)
    assert canonical_form(g) == canonical_form(g.relabel(perm))
