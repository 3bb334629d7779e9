from random import Random

import pytest

from leavitt import Graph, ideals
from leavitt.verify import (
    ALL_ROWS,
    ROW_PERP_VSET,
    VerifyConfig,
    calculus_checks_for_graph,
    exhaustive_acyclic_graphs,
    laurent_checks,
    minimize_counterexample,
    oracle_checks_for_graph,
    random_graph,
    run_verification,
)

SMALL = VerifyConfig(max_vertices=3, max_edges=4, trials=40)


def test_small_run_passes():
    matrix = run_verification(SMALL)
    assert matrix.passed
    assert [r.name for r in matrix.rows] == list(ALL_ROWS)
    assert all(r.trials > 0 for r in matrix.rows)


def test_zero_trials_yield_empty_matrix():
    matrix = run_verification(VerifyConfig(trials=0))
    assert matrix.rows == ()
    assert matrix.passed


def test_matrix_is_deterministic():
    a = run_verification(SMALL)
    b = run_verification(SMALL)
    assert a.to_json_dict() == b.to_json_dict()
    assert a.render_text() == b.render_text()


def test_row_subset_and_unknown_row():
    matrix = run_verification(SMALL, rows=[ROW_PERP_VSET])
    assert [r.name for r in matrix.rows] == [ROW_PERP_VSET]
    with pytest.raises(ValueError):
        run_verification(SMALL, rows=["no-such-row"])


def test_random_graph_stream_is_seeded():
    a = [random_graph(Random(7), 5, 8) for _ in range(10)]
    b = [random_graph(Random(7), 5, 8) for _ in range(10)]
    assert a == b


def test_exhaustive_family_small_count():
    family = exhaustive_acyclic_graphs(2, 2)
    # empty graph, one vertex, two edgeless, single edge, double edge
    assert len(family) == 5
    assert all(g.is_acyclic() for g in family)
    assert Graph((), ()) in family


def test_exhaustive_family_deduplicates_relabelings():
    family = exhaustive_acyclic_graphs(2, 1)
    single_edge = [g for g in family if len(g.edges) == 1]
    assert len(single_edge) == 1  # a->b and b->a are the same class


def test_oracle_checks_report_setup_failure(single_loop):
    counts, failures, algebra = oracle_checks_for_graph(single_loop, 2)
    assert algebra is None
    assert all(n == 1 for n in counts.values())
    assert {f.row for f in failures} == set(counts)


def test_calculus_checks_clean_on_loop_with_exit(loop_with_exit):
    counts, failures = calculus_checks_for_graph(loop_with_exit)
    assert not failures
    assert counts["perp-always-regular"] == 3  # one trial per hereditary saturated set


def test_laurent_checks_pass():
    trials, failures = laurent_checks(Random(1), 5, 100)
    assert trials == 100
    assert not failures


def test_minimize_counterexample_shrinks():
    g = Graph(
        ("a", "b", "c"),
        (("e1", "a", "b"), ("e2", "b", "c"), ("e3", "a", "c"), ("e4", "c", "c")),
    )
    small = minimize_counterexample(g, lambda cand: len(cand.edges) >= 2)
    assert len(small.edges) == 2
    used = {v for e in small.edges for v in (e.src, e.dst)}
    assert set(small.vertices) == used


def test_injected_mutant_fails_perp_row(monkeypatch):
    # break the backward closure: pretend H-bar is H itself
    monkeypatch.setattr(ideals, "bar_closure", lambda ideal: ideal.vertices)
    cfg = VerifyConfig(max_vertices=3, max_edges=3, trials=1)
    matrix = run_verification(cfg, rows=[ROW_PERP_VSET])
    (row,) = matrix.rows
    assert row.failures > 0
    assert row.counterexample is not None
    # the smallest witness needs a vertex outside H that reaches H
    assert len(row.counterexample["vertices"]) == 3
    assert len(row.counterexample["edges"]) == 2
    assert not matrix.passed


def test_mutant_matrix_is_still_deterministic(monkeypatch):
    monkeypatch.setattr(ideals, "bar_closure", lambda ideal: ideal.vertices)
    cfg = VerifyConfig(max_vertices=3, max_edges=3, trials=1)
    a = run_verification(cfg, rows=[ROW_PERP_VSET])
    b = run_verification(cfg, rows=[ROW_PERP_VSET])
    assert a.to_json_dict() == b.to_json_dict()
