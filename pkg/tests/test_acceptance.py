"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s``.  The campaign and oracle
criteria are the heavy ones; the whole module targets a few minutes.
"""

import time

import pytest

from conftest import sample_graphs
from corecorona.fixtures import fixture, fixture_mismatches
from corecorona.graphs import Graph, VertexSet, cycle_graph, path_graph, star
from corecorona.harness import CampaignSpec, run_campaign
from corecorona.independence import (
    KIND_ARBITRARY,
    KIND_MAX_INDEPENDENT,
    MisFamily,
    core_corona,
    enumerate_maximal_independent,
    enumerate_omega,
    independence_number,
)
from corecorona.lemmas import (
    PreconditionError,
    check_berge,
    check_matching_lemma,
    check_set_collection,
)
from corecorona.matching import is_koenig_egervary, maximum_matching_size
from corecorona.reports import report_bytes
from corecorona.search import largest_equality_collection
from oracles import brute_alpha, brute_maximal, brute_mu, brute_omega, independent_masks


def _labels(g, vs):
    return [g.label(v) for v in vs]


def test_criterion_01_fig1_replay():
    started = time.perf_counter()
    fig1 = fixture("fig1")
    diffs = fixture_mismatches("fig1")
    assert not diffs, f"fixture diff:\n" + "\n".join(diffs)
    assert independence_number(fig1) == 7
    s = fig1.vset_from_labels(["v1", "v4", "v7"])
    lam = MisFamily(
        fig1.n,
        (
            fig1.vset_from_labels(["v1", "v2", "v3", "v6", "v8", "v10", "v12"]),
            fig1.vset_from_labels(["v1", "v2", "v4", "v6", "v7", "v10", "v13"]),
        ),
        KIND_MAX_INDEPENDENT,
    )
    part_i, _, _ = check_matching_lemma(fig1, s, lam)
    assert part_i.passed and part_i.lhs == 2 and part_i.rhs == 7
    assert part_i.witness.size == 2
    scl = check_set_collection(fig1, s, lam)
    assert (scl.lhs, scl.rhs) == (10, 11) and scl.passed
    assert _labels(fig1, core_corona(fig1).core) == ["v1", "v2", "v10"]
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0
    print(f"\nACCEPTANCE 1: PASS (fig1 replay: alpha=7, 10<=11, core, {elapsed:.3f}s)")


def test_criterion_02_invalid_family_necessity():
    fig1 = fixture("fig1")
    s = fig1.vset_from_labels(["v1", "v2", "v4", "v7", "v9", "v12"])
    lam = MisFamily(
        fig1.n,
        (
            fig1.vset_from_labels(["v2", "v3", "v7"]),
            fig1.vset_from_labels(["v1", "v2", "v4", "v6", "v7", "v10", "v12"]),
        ),
        KIND_ARBITRARY,
    )
    with pytest.raises(PreconditionError):
        check_set_collection(fig1, s, lam)
    part_i, _, _ = check_matching_lemma(fig1, s, lam, demonstrate_necessity=True)
    assert part_i.extra["matching_exists"] is False
    raw = check_set_collection(fig1, s, lam, demonstrate_necessity=True)
    assert (raw.lhs, raw.rhs) == (12, 11)
    assert raw.extra["relation_holds"] is False
    print("ACCEPTANCE 2: PASS (no saturating matching; raw 12<=11 is false)")


def test_criterion_03_fig2_core():
    fig2 = fixture("fig2")
    assert not fixture_mismatches("fig2")
    assert _labels(fig2, core_corona(fig2).core) == ["v8", "v10"]
    print("ACCEPTANCE 3: PASS (fig2 core = {v8, v10})")


def test_criterion_04_fig3_values():
    g1, g2 = fixture("g1"), fixture("g2")
    cc1 = core_corona(g1)
    assert cc1.alpha == 4
    assert _labels(g1, cc1.core) == ["v8", "v9"]
    assert len(cc1.corona) == 7
    assert 2 * cc1.alpha == 8 < 9 == len(cc1.core) + len(cc1.corona)
    assert not is_koenig_egervary(g1)
    cc2 = core_corona(g2)
    assert cc2.alpha == 3
    assert _labels(g2, cc2.core) == ["u2", "u4"]
    assert _labels(g2, cc2.corona) == ["u2", "u4", "u6", "u7"]
    assert 2 * cc2.alpha == 6 == len(cc2.core) + len(cc2.corona)
    assert not is_koenig_egervary(g2)
    assert maximum_matching_size(g2) == 3
    print("ACCEPTANCE 4: PASS (g1: 8<9 non-KE; g2: 6=2+4 non-KE)")


def test_criterion_05_star_tightness():
    for n in range(2, 9):
        cc = core_corona(star(n))
        total = len(cc.core) + len(cc.corona)
        assert total == 2 * (n - 1) == cc.alpha + n - 1
    print("ACCEPTANCE 5: PASS (stars n=2..8 attain the upper bound)")


def test_criterion_06_theorem_suite_campaign():
    started = time.perf_counter()
    spec = CampaignSpec(
        n_values=tuple(range(4, 15)),
        p_values=(0.1, 0.3, 0.5, 0.7, 0.9),
        count_per_cell=182,  # 55 cells x 182 = 10,010 graphs
        seed=20260809,
    )
    report, code = run_campaign(spec, reproducible=True)
    elapsed = time.perf_counter() - started
    summary = report["summary"]
    assert summary["graphs"] == 10010
    assert summary["failed"] == 0, summary
    assert summary["errors"] == 0, summary
    assert set(summary["by_statement"]) == {
        "ML_i", "ML_ii", "ML_iii", "SCL", "COR3", "COR2_core_corona", "PROP2",
        "PROP1_KE", "GITVAL", "COR1_core_matching", "HAJNAL", "BERGE",
    }
    for stmt, counts in summary["by_statement"].items():
        assert counts["failed"] == 0, (stmt, counts)
    assert code == 0
    assert elapsed < 300.0
    print(
        f"ACCEPTANCE 6: PASS ({summary['graphs']} graphs, "
        f"{summary['checks_run']} checks, 0 failures, {elapsed:.1f}s)"
    )


def _oracle_sample():
    graphs = sample_graphs(500, max_n=9)
    graphs += [fixture(name) for name in ("fig1", "fig2", "g1", "g2")]
    return graphs


def test_criterion_07_oracle_equivalence():
    started = time.perf_counter()
    for g in _oracle_sample():
        assert independence_number(g) == brute_alpha(g)
        omega = enumerate_omega(g)
        assert sorted(m.bits for m in omega) == sorted(brute_omega(g))
        keys = [m.vertices() for m in omega]
        assert keys == sorted(keys)
        assert sorted(m.bits for m in enumerate_maximal_independent(g)) == sorted(
            brute_maximal(g)
        )
        assert maximum_matching_size(g) == brute_mu(g)
    elapsed = time.perf_counter() - started
    assert elapsed < 120.0
    print(f"ACCEPTANCE 7: PASS (504 graphs vs brute force, {elapsed:.1f}s)")


def test_criterion_08_berge_biconditional():
    started = time.perf_counter()
    checked = 0
    for g in sample_graphs(500, max_n=9):
        alpha = independence_number(g)
        for mask in independent_masks(g):
            x = VertexSet(g.n, mask)
            report = check_berge(g, x)
            assert report.passed, (g, sorted(x))
            assert report.extra["condition"] == (len(x) == alpha)
            checked += 1
    elapsed = time.perf_counter() - started
    print(f"ACCEPTANCE 8: PASS ({checked} independent X checked, {elapsed:.1f}s)")


def test_criterion_09_equality_collection_sanity():
    assert largest_equality_collection(cycle_graph(4)).max_size == 2
    assert largest_equality_collection(path_graph(3)).max_size == 1
    validated = 0
    for g in sample_graphs(500, max_n=9):
        omega = enumerate_omega(g)
        if len(omega) > 20:
            with pytest.raises(ValueError):
                largest_equality_collection(g)
            continue
        result = largest_equality_collection(g)
        assert result.max_size >= 1 and result.exhaustive
        target = 2 * len(omega[0])
        members = {m.bits for m in omega}
        assert {m.bits for m in result.witness} <= members
        assert len(result.witness.union()) + len(result.witness.intersection()) == target
        validated += 1
    print(f"ACCEPTANCE 9: PASS (C4=2, P3=1, {validated} witnesses revalidated)")


def test_criterion_10_campaign_determinism():
    spec = CampaignSpec(
        n_values=(5, 6, 7),
        p_values=(0.25, 0.75),
        count_per_cell=5,
        seed=99,
    )
    a, _ = run_campaign(spec, reproducible=True)
    b, _ = run_campaign(spec, reproducible=True)
    assert report_bytes(a) == report_bytes(b)
    print("ACCEPTANCE 10: PASS (byte-identical reproducible reports)")
