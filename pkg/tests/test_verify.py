from __future__ import annotations

import json

import pytest
from hypothesis import given

from classpoly import engine, verify
from classpoly import graphs as gr
from classpoly.poly import XPoly
from conftest import graphs


# join-zeta first order ------------------------------------------------------------------


def test_join_zeta_two_isolated_vertices():
    assert verify.join_zeta_y_coefficient(gr.edgeless(1), gr.edgeless(1)) == XPoly({2: 1, 1: 1, 0: -1})


def test_join_zeta_complete_bipartite():
    got = verify.join_zeta_y_coefficient(gr.edgeless(2), gr.edgeless(3))
    assert got == engine.closed_form("complete_bipartite", 2, 3).f


def test_join_zeta_two_edges_give_k4():
    got = verify.join_zeta_y_coefficient(gr.complete(2), gr.complete(2))
    assert got == XPoly({7: 1, 6: 1, 3: -1})
    assert verify.join_zeta_first_order(gr.complete(2), gr.complete(2))


@given(graphs(max_n=4), graphs(max_n=3))
def test_join_zeta_random_pairs(g1, g2):
    assert verify.join_zeta_first_order(g1, g2)


# suites --------------------------------------------------------------------------------


def test_thm_a_case_count():
    report = verify.run_suite("thm-a", verify.Scope(nmax=4, qs=(2, 3)))
    assert report.ok and report.totals["total"] == 128


def test_domination_case_count():
    report = verify.run_suite("domination", verify.Scope(nmax=5))
    assert report.ok and report.totals["total"] == 1024


@pytest.mark.parametrize("suite", verify.SUITES)
def test_each_suite_passes_on_small_scope(suite):
    report = verify.run_suite(suite, verify.Scope(nmax=3, nmin=1))
    assert report.ok, report.summary()
    assert report.totals["total"] > 0


def test_pair_scope():
    pairs = verify.scope_pairs(verify.Scope(nmax=3), "compose")
    # (1,1): 1 pair, (1,2) and (2,1): 2 + 2 pairs
    assert len(pairs) == 5


def test_tree_scope():
    cases = verify.suite_cases("domination", verify.Scope(nmax=5, trees=True))
    assert len(cases) == 5 ** 3


def test_explicit_graph_scope():
    cases = verify.suite_cases("thm-a", verify.Scope(graphs=("Bw", "Bg"), qs=(2,)))
    assert [c[0] for c in cases] == ["Bw", "Bg"]


def test_thm_a_records_brute_force_skip():
    report = verify.run_suite("thm-a", verify.Scope(graphs=("Bw",), qs=(3,), budget_elems=100))
    (rec,) = report.records
    assert rec.status == "pass" and rec.data["brute_force"].startswith("skipped")


def test_crt_budget_skip_is_recorded():
    report = verify.run_suite("crt", verify.Scope(graphs=("Bw",), budget_elems=100))
    assert report.totals["skip"] == 1 and report.ok


def test_suite_errors():
    with pytest.raises(ValueError):
        verify.suite_cases("nope", verify.Scope())
    with pytest.raises(ValueError):
        verify.suite_cases("crt", verify.Scope(Ns=(2, 4)))


def test_failure_carries_witness(monkeypatch):
    real = engine.join_f

    def broken(*args):
        return real(*args) + 1

    monkeypatch.setattr(engine, "join_f", broken)
    report = verify.run_suite("compose", verify.Scope(nmax=2))
    assert not report.ok
    (rec,) = report.records
    assert rec.status == "fail"
    assert rec.witness["check"] == "join_f"
    assert rec.witness["coefficient"] == "X^0"
    assert rec.witness["left"] == "@" and rec.witness["right"] == "@"


def test_reports_are_deterministic():
    scope = verify.Scope(nmax=4, qs=(2,))
    a = verify.run_suite("thm-a", scope).dumps(timing=False)
    b = verify.run_suite("thm-a", scope, jobs=2).dumps(timing=False)
    assert a == b
    data = json.loads(a)
    assert data["schema"] == 1 and "timestamp" not in data


def test_report_csv_and_summary():
    report = verify.run_suite("degree", verify.Scope(nmax=2))
    lines = report.to_csv().splitlines()
    assert lines[0] == "graph6,params,status,witness" and len(lines) == 3
    assert report.summary().startswith("degree: PASS (2 cases")


def test_first_mismatch():
    assert verify.first_mismatch({1: 2}, {1: 2}) is None
    assert verify.first_mismatch({1: 2}, {1: 2, 4: 1}) == {"coefficient": "4", "expected": 0, "got": 1}


# batch ---------------------------------------------------------------------------------------


def test_batch_three_graphs():
    records = verify.batch_records(["A_", "Bw", "Bg"])
    assert [r.data["f"] for r in records] == ["X^2 + X - 1", "X^4 + X^3 - X", "2*X^3 - X"]
    assert [r.params["line"] for r in records] == [1, 2, 3]


def test_batch_empty_and_blank():
    assert verify.batch_records([]) == []
    assert verify.batch_records(["", "  "]) == []


def test_batch_malformed_line_continues():
    records = verify.batch_records(["A_", "zz!", "Bg"])
    assert [r.status for r in records] == ["pass", "error", "pass"]
    assert records[1].witness["offset"] == 2 and records[1].witness["line"] == 2


def test_batch_with_suite():
    records = verify.batch_records(["Bw"], suite="thm-a", scope=verify.Scope(qs=(2, 3)))
    assert [r.params for r in records] == [{"line": 1, "q": 2}, {"line": 1, "q": 3}]
    with pytest.raises(ValueError):
        verify.batch_records(["Bw"], suite="compose")


def test_batch_csv():
    text = verify.batch_csv(verify.batch_records(["A_"]))
    assert text.splitlines()[1] == "1,A_,pass,2,1,X^2 + X - 1,1,"
