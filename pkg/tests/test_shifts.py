import random

import pytest
from hypothesis import given, settings, strategies as st

from mostar import Graph, GraphError, cycle, cyclomatic_number, is_connected, isomorphic
from mostar.shifts import (
    DISCREPANT,
    MATCH,
    SKIPPED,
    RULES,
    ShiftSpec,
    calibrate,
    lemma_delta,
    measured_delta,
    rule_ids,
    run_shift_suite,
    shift_pendants,
    verify_lemma_shift,
    _theta,
)


def pend(g, at, k):
    for _ in range(k):
        g = g.add_pendant(at)
    return g


def test_shift_zero_is_identity():
    g = pend(cycle(3), 0, 2)
    assert shift_pendants(g, ShiftSpec(0, 1, 0)) == g


def test_shift_across_triangle_symmetry():
    # moving every pendant to an adjacent cycle vertex mirrors the graph
    g = pend(cycle(3), 0, 3)
    h = shift_pendants(g, ShiftSpec(0, 1, 3))
    assert isomorphic(g, h)


def test_shift_preserves_shape():
    g = pend(pend(cycle(4), 0, 3), 2, 1)
    h = shift_pendants(g, ShiftSpec(0, 2, 2))
    assert (h.n, h.m) == (g.n, g.m)
    assert is_connected(h)
    assert cyclomatic_number(h) == cyclomatic_number(g)
    assert h.degree(2) == g.degree(2) + 2


def test_shift_errors():
    g = pend(cycle(3), 0, 1)
    with pytest.raises(GraphError):
        shift_pendants(g, ShiftSpec(0, 0, 1))
    with pytest.raises(GraphError):
        shift_pendants(g, ShiftSpec(0, 1, 2))  # only one pendant available
    with pytest.raises(GraphError):
        shift_pendants(g, ShiftSpec(1, 0, 1))  # vertex 1 has no pendants


def test_lemma_delta_values():
    assert lemma_delta("L3.7a", {"a3": 1, "a4": 1, "a5": 1, "a6": 1}) == 8
    assert lemma_delta("L3.4a", {"a6": 0}) == 0
    assert lemma_delta("L3.3a", {"a1": 0, "a2": 4, "a3": 1, "a5": 1}) == 10
    with pytest.raises(GraphError):
        lemma_delta("L9.9z", {})


def test_rule_table_complete():
    ids = rule_ids()
    assert len(ids) == 20
    by_group = {}
    for r in ids:
        by_group.setdefault(RULES[r].group, []).append(r)
    assert {g: len(v) for g, v in sorted(by_group.items())} == {
        "L3.2": 3, "L3.3": 4, "L3.4": 3, "L3.5": 3,
        "L3.6": 3, "L3.7": 2, "L3.8": 2,
    }


def test_verify_l37a_exact():
    row = verify_lemma_shift("L3.7a", {"a3": 2, "a4": 2, "a5": 2, "a6": 2})
    assert row.status == MATCH
    assert row.measured == row.expected == 24


def test_verify_boundary_skipped():
    # delta formula lands at zero on the side-condition boundary
    row = verify_lemma_shift("L3.2a", {"a1": 1, "a2": 1})
    assert row.status == SKIPPED and row.expected == 0
    # empty shift
    row = verify_lemma_shift("L3.8b", {"a3": 2})
    assert row.status == SKIPPED


def test_verify_rejects_condition_violations():
    with pytest.raises(GraphError):
        verify_lemma_shift("L3.2a", {"a2": 5, "a4": 5})  # a1+a3 < a2+a4
    with pytest.raises(GraphError):
        verify_lemma_shift("L3.7a", {"a3": 1, "a4": 2, "a5": 1, "a6": 1})
    with pytest.raises(GraphError):
        verify_lemma_shift("L3.2c", {"a1": 1, "a6": 1})  # a6 not live here


def test_hub_swap_with_empty_far_hub_is_isomorphic():
    """The printed hub-to-hub delta cannot hold when the receiving hub is
    bare: that shift is an automorphism flip, so the index cannot change."""
    brace = _theta((1, 2, 2, 2))
    g = pend(brace, 1, 3)  # three pendants at one hub, none at the other
    h = shift_pendants(g, ShiftSpec(1, 0, 3))
    assert isomorphic(g, h)
    row = verify_lemma_shift("L3.6b", {"a2": 3})
    assert row.measured == 0 and row.expected == 2
    assert row.status == DISCREPANT


def test_calibration_deterministic_and_sane():
    for gid in ("L3.2", "L3.6", "L3.7"):
        cal = calibrate(gid)
        assert cal == calibrate(gid)
        brace = cal.brace()
        assert len(set(cal.roles)) == len(cal.roles)
        assert all(0 <= v < brace.n for v in cal.roles)
    # stated degree constraints hold for the four-path braces
    cal = calibrate("L3.7")
    brace = cal.brace()
    assert brace.degree(cal.roles[0]) == brace.degree(cal.roles[1]) == 4
    assert all(brace.degree(v) == 2 for v in cal.roles[2:])


def test_suite_small_run_structure():
    report = run_shift_suite(count=4, seed=1)
    statuses = report.statuses()
    assert set(statuses) == set(rule_ids())
    for rid, status in statuses.items():
        if status == DISCREPANT:
            assert rid in report.interpolations
    for row in report.rows:
        if row.status == MATCH:
            assert row.measured == row.expected > 0


@given(st.integers(0, 10**6))
@settings(max_examples=30, deadline=None)
def test_shift_random_roundtrip(seed):
    """Shifting pendants there and back restores the original graph."""
    rng = random.Random(seed)
    g = pend(pend(cycle(4), 0, rng.randint(1, 4)), 2, rng.randint(0, 3))
    k = rng.randint(1, g.degree(0) - 2)
    h = shift_pendants(g, ShiftSpec(0, 2, k))
    back = shift_pendants(h, ShiftSpec(2, 0, k))
    assert isomorphic(back, g)
