"""Acceptance suite: one test per criterion, exact tolerances throughout.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
PASS lines and timing report.
"""

import json
import random
import time

from mostar import (
    all_pairs_distances,
    canonical_form,
    dot_product,
    edge_mostar,
    edge_report,
    isomorphic,
    parse_graph6,
)
from mostar.braces import FOUR_THETA, THREE_HUB, classify
from mostar.enumeration import (
    EnumerationTask,
    enumerate_connected,
    maximize_tricyclic,
)
from mostar.families import ANALYTIC, discover_families, verify_family
from mostar.shifts import run_shift_suite
from _helpers import brute_connected_class_count, random_connected, random_tree

EXPECTED_TRICYCLIC = {7: 12, 8: 23, 9: 36, 10: 53, 11: 72, 12: 96}
EXPECTED_BICYCLIC = {5: 4, 6: 12, 7: 22, 8: 34, 9: 48, 10: 66}


def _ok(line: str) -> None:
    print(f"\nACCEPTANCE {line}")


def test_criterion_1_tricyclic_maxima(tri_surveys, tri_timings):
    for m, expected in EXPECTED_TRICYCLIC.items():
        got = tri_surveys[m].result.max_value
        assert got == expected, f"m={m}: enumerated max {got}, table says {expected}"
    small = sum(tri_timings[m] for m in range(7, 12))
    assert small < 60, f"sizes 7..11 took {small:.1f}s, budget 60s"
    assert tri_timings[12] < 900, f"size 12 took {tri_timings[12]:.1f}s, budget 900s"
    _ok(
        "1: PASS - tricyclic maxima 12/23/36/53/72/96 exact "
        f"(7..11 in {small:.1f}s, 12 in {tri_timings[12]:.1f}s)"
    )


def test_criterion_2_maximizer_structure(tri_surveys, registry):
    # size 12: unique maximizer, the three-squares construction
    max12 = tri_surveys[12].result.maximizers
    assert len(max12) == 1
    assert canonical_form(registry["A0"].build(12)) == max12[0]

    # size 10: unique maximizer, pinned as A2 by discovery
    max10 = tri_surveys[10].result.maximizers
    assert len(max10) == 1
    assert canonical_form(registry["A2"].build(10)) == max10[0]

    # size 7: exactly two, one on the four-path brace, one on the three-hub
    max7 = tri_surveys[7].result.maximizers
    assert len(max7) == 2
    kinds = {}
    for g6 in max7:
        cls = classify(parse_graph6(g6))
        kinds[cls.kind] = cls.path_parameters
    assert set(kinds) == {FOUR_THETA, THREE_HUB}
    assert kinds[FOUR_THETA] == (1, 2, 2, 2)
    assert canonical_form(registry["H1"].build(7)) in max7

    # size 8: the pinned composite construction is among the maximizers
    max8 = tri_surveys[8].result.maximizers
    assert canonical_form(registry["A3"].build(8)) in max8

    # counts vs the published list cardinalities: report, never fail
    published = {8: 3, 9: 7, 11: 2}
    observed = {m: len(tri_surveys[m].result.maximizers) for m in published}
    notes = []
    for m, want in published.items():
        tag = "matches" if observed[m] == want else "DIFFERS from"
        notes.append(f"m={m}: {observed[m]} {tag} published {want}")
    _ok("2: PASS - structure checks exact; counts: " + "; ".join(notes))


def test_criterion_3_bicyclic_maxima(bi_surveys, registry):
    t0 = time.perf_counter()
    for m, expected in EXPECTED_BICYCLIC.items():
        assert bi_surveys[m].result.max_value == expected, m
    max9 = bi_surveys[9].result.maximizers
    assert len(max9) == 5
    max10 = bi_surveys[10].result.maximizers
    assert len(max10) == 1
    assert canonical_form(registry["B0"].build(10)) == max10[0]
    dt = time.perf_counter() - t0
    _ok(f"3: PASS - bicyclic maxima 4/12/22/34/48/66 exact, 5 maximizers at "
        f"m=9, unique two-squares at m=10 ({dt:.1f}s)")


def test_criterion_4_family_pinning(registry):
    checked = 0
    for fid in registry.ids():
        spec = registry[fid]
        if spec.poly is None:
            continue
        span = 30 if spec.provenance == ANALYTIC else 15
        rows = verify_family(fid, range(spec.m_min, spec.m_min + span + 1), registry)
        bad = [r for r in rows if not r.ok]
        assert not bad, f"{fid}: polynomial fails at {[r.m for r in bad]}"
        checked += len(rows)
    analytic = [f for f in registry.ids() if registry[f].provenance == ANALYTIC]
    assert {"A0", "B0", "A3", "H1", "S_M3", "S_M4"} <= set(analytic)
    _ok(f"4: PASS - {checked} exact polynomial evaluations across "
        f"{len(registry.ids())} registry families")


def test_criterion_5_shift_deltas():
    t0 = time.perf_counter()
    report = run_shift_suite(count=20, seed=0)
    dt = time.perf_counter() - t0
    loaded = report.loaded_statuses()
    exact, discrepant = [], []
    for rule, status in sorted(loaded.items()):
        if status == "MATCH":
            exact.append(rule)
        else:
            assert rule in report.interpolations, (
                f"{rule} discrepant but no interpolated delta reported"
            )
            discrepant.append(rule)
    for row in report.rows:
        if row.status == "MATCH":
            assert row.measured == row.expected > 0
    nonpos = {
        r: c["nonpositive"] for r, c in report.counts().items() if c["nonpositive"]
    }
    assert dt < 120, f"suite took {dt:.1f}s"
    _ok(
        f"5: PASS - {len(exact)} rules exact in the chain regime "
        f"({', '.join(exact)}); {len(discrepant)} DISCREPANT, each reported "
        f"with an interpolated measured delta; zero-delta rearrangements "
        f"observed for {sorted(nonpos) if nonpos else 'none'} ({dt:.1f}s)"
    )


def test_criterion_6_invariant_suites(tri_surveys):
    rng = random.Random(20260810)

    # partition identity + incident bound on 10^4 random connected graphs
    t0 = time.perf_counter()
    for _ in range(10_000):
        g = random_connected(rng, 2, 12)
        dm = all_pairs_distances(g)
        m = g.m
        for e in g.edges():
            r = edge_report(g, e, dm)
            assert r.m_u + r.m_v + r.equidistant == m - 1
            assert r.m_u >= g.degree(e.u) - 1
            assert r.m_v >= g.degree(e.v) - 1
    t_part = time.perf_counter() - t0

    # isomorphism invariance under random relabelings
    for _ in range(300):
        g = random_connected(rng, 2, 10)
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert edge_mostar(g) == edge_mostar(g.relabel(perm))

    # pendant-tree contribution invariance on 100 random triples
    for _ in range(100):
        host = random_connected(rng, 3, 7)
        u = rng.randrange(host.n)
        size = rng.randint(2, 5)
        t1, t2 = random_tree(rng, size), random_tree(rng, size)
        root = rng.randrange(size)

        def host_sum(t):
            fused = dot_product(host, u, t, root)
            dm = all_pairs_distances(fused)
            return sum(edge_report(fused, e, dm).psi for e in host.edges())

        assert host_sum(t1) == host_sum(t2)

    # enumeration completeness against the labeled brute-force oracle
    t0 = time.perf_counter()
    for n in range(2, 7):
        for m in range(n - 1, n * (n - 1) // 2 + 1):
            mine = sum(1 for _ in enumerate_connected(EnumerationTask(n, m)))
            assert mine == brute_connected_class_count(n, m), (n, m)
    mine79 = sum(1 for _ in enumerate_connected(EnumerationTask(7, 9)))
    assert mine79 == brute_connected_class_count(7, 9) == 107
    t_brute = time.perf_counter() - t0

    # worker-count determinism, byte for byte
    blobs = [
        json.dumps(
            maximize_tricyclic(9, workers=w, histogram=True).to_dict(),
            sort_keys=True,
        ).encode()
        for w in (1, 2, 8)
    ]
    assert blobs[0] == blobs[1] == blobs[2]

    _ok(
        "6: PASS - partition identity on 10^4 graphs "
        f"({t_part:.1f}s), relabeling invariance, pendant-tree invariance, "
        f"completeness vs brute force at n<=7 ({t_brute:.1f}s), "
        "byte-identical results across 1/2/8 workers"
    )


def test_registry_reproducible_from_enumeration(tri_surveys, bi_surveys, registry,
                                                atlas_report):
    """The committed registry is exactly what discovery produces from the
    session's own enumeration passes."""
    reg, report = discover_families(tri_surveys, bi_surveys)
    assert reg.to_json() == registry.to_json()
    assert report.unresolved == ["H4"]
    assert report.composite_18_family_count == atlas_report["composite_18_family_count"] == 3
    assert report.to_dict() == atlas_report
    _ok("registry: PASS - committed families.json reproduced bit-exactly by "
        "a fresh discovery run")
