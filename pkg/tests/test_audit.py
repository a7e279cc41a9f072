from __future__ import annotations

import math

import pytest

from dsomatrix import audit
from dsomatrix.graphs import edgeless, enumerate_up_to, from_edge_list, generate_family

R2 = math.sqrt(2.0)


def by_id(g, **kw):
    return {r.check_id: r for r in audit.run_audit(g, **kw)}


def test_one_result_per_registered_check():
    results = audit.run_audit(generate_family("path", 4))
    assert [r.check_id for r in results] == [c.check_id for c in audit.REGISTRY]
    assert len({c.check_id for c in audit.REGISTRY}) == len(audit.REGISTRY)


def test_result_invariants_on_small_graphs():
    for g in enumerate_up_to(4):
        for r in audit.run_audit(g):
            if not r.applicable:
                assert r.lhs is None and r.rhs is None and r.slack is None and r.holds is None
                continue
            assert r.holds == (r.slack >= -audit.DEFAULT_AUDIT_TOL)
            if r.equality_observed:
                assert r.holds


def test_k4_published_examples():
    r = by_id(generate_family("complete", 4))
    hc = r["L1-HI-CORRECTED"]
    assert hc.lhs == pytest.approx(3 * R2 / 2) and hc.rhs == pytest.approx(math.sqrt(4.5))
    assert hc.equality_observed and hc.equality_expected
    for cid in ("DSO-TR-A-LO", "DSO-TR-A-HI"):
        assert r[cid].equality_observed and r[cid].equality_expected
        assert 3 * R2 in (pytest.approx(r[cid].lhs), pytest.approx(r[cid].rhs))
    lo = r["L1-RHO-LO"]
    assert lo.lhs == pytest.approx(3 * R2) and lo.rhs == pytest.approx(3 * R2 / 2) and not lo.holds
    assert r["L1-RHO-LO-CORRECTED"].equality_observed


def test_gating_marks_inapplicable_checks():
    r = by_id(edgeless(3))
    assert not r["L1-LO"].applicable  # disconnected
    assert not r["E-ALPHA"].applicable  # isolated vertices
    assert r["TR0"].applicable and r["MODULI"].applicable
    kpq = by_id(generate_family("complete_bipartite", p=2, q=3))
    assert kpq["E-KPQ-LO"].applicable and kpq["E-KPQ-HI"].applicable
    assert not by_id(generate_family("path", 5))["E-KPQ-LO"].applicable
    k5 = by_id(generate_family("complete", 5))
    assert not k5["NG-HI"].applicable  # Delta = n - 1


def test_selected_checks_and_unknown_ids():
    results = audit.run_audit(generate_family("cycle", 5), checks=["TR0", "DIAM"])
    assert [r.check_id for r in results] == ["TR0", "DIAM"]
    with pytest.raises(KeyError):
        audit.run_audit(generate_family("cycle", 5), checks=["NOPE"])


def test_documented_fail_checks_carry_findings():
    for check in audit.REGISTRY:
        assert check.expectation in (audit.HOLDS, audit.DOCUMENTED_FAIL)
        if check.expectation == audit.DOCUMENTED_FAIL or check.equality_status in (
            audit.SUFFICIENT, audit.REFUTED
        ):
            assert check.finding, check.check_id


def test_trace_identity_check_catches_as_published_form():
    # the corrected identity makes L1-HI-CORRECTED tight on K_n; the published one never is
    for n in range(2, 8):
        r = by_id(generate_family("complete", n))
        assert r["L1-HI-CORRECTED"].equality_observed
        assert not r["L1-HI-STATED"].equality_observed and r["L1-HI-STATED"].holds


def test_stars_are_tight_in_energy_lower_bound():
    # one positive eigenvalue makes E = 2 lambda_1, outside the published equality class
    r = by_id(generate_family("star", 5))["E-L1-LO"]
    assert r.equality_observed and not r.equality_expected


def test_regular_graphs_never_tight_in_linear_trace_upper_bound():
    r = by_id(generate_family("cycle", 6))["DSO-TR-B-HI"]
    assert r.holds and r.equality_expected and not r.equality_observed
    assert r.rhs == pytest.approx(2 * r.lhs)


def test_corpus_aggregate_counts_and_witnesses():
    report = audit.run_corpus_audit(enumerate_up_to(4), jobs=1)
    assert report.graphs == 1 + 2 + 8 + 64
    for agg in report.checks:
        assert agg.holds + agg.fails == agg.applicable
        if agg.fails:
            assert agg.witness is not None
            assert agg.worst_slack < -report.tol
    assert not report.unexpected_failures
    assert report["L1-GA"].fails > 0


def test_corpus_audit_is_independent_of_jobs():
    graphs = list(enumerate_up_to(5))
    one = audit.run_corpus_audit(graphs, jobs=1)
    two = audit.run_corpus_audit(graphs, jobs=2)
    assert [a.to_dict() for a in one.checks] == [a.to_dict() for a in two.checks]


def test_unexpected_failure_surfaces():
    report = audit.AuditReport(1, 1e-9, [audit.CheckAggregate("X", audit.HOLDS, 1, 0, 1)])
    assert [a.check_id for a in report.unexpected_failures] == ["X"]
    report = audit.AuditReport(1, 1e-9, [audit.CheckAggregate("Y", audit.DOCUMENTED_FAIL, 1, 0, 1)])
    assert report.unexpected_failures == []


def test_matching_moduli_and_two_distinct():
    r = by_id(generate_family("matching", 6))
    assert r["MODULI"].holds
    r = by_id(from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
    assert r["TWO-DIST"].holds and r["DIAM"].holds
