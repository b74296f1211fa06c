from __future__ import annotations

import pytest

from nodekayles import verify
from nodekayles.engine import TranspositionTable
from nodekayles.errors import NodeKaylesError
from nodekayles.graph import GroundGraph, Position

from conftest import fresh, path_graph, reduction_pair


def test_naive_grundy_examples(path3):
    assert verify.naive_grundy(fresh(path3)) == 2
    assert verify.naive_grundy(Position(path3, 0)) == 0


def test_naive_grundy_cap():
    g = GroundGraph.from_edges(15, [])
    with pytest.raises(NodeKaylesError):
        verify.naive_grundy(fresh(g))


def test_all_labeled_graphs_census():
    counts = {}
    for g in verify.all_labeled_graphs(5):
        counts[g.node_count] = counts.get(g.node_count, 0) + 1
    assert counts == {0: 1, 1: 1, 2: 2, 3: 8, 4: 64, 5: 1024}


def test_random_corpus_is_seed_stable():
    a = [g.closed_neighborhoods for g in verify.random_graphs(5)]
    b = [g.closed_neighborhoods for g in verify.random_graphs(5)]
    assert a == b
    assert all(6 <= g.node_count <= 12 for g in verify.random_graphs(20))


def test_small_graph_suite_truncated():
    report = verify.check_small_graphs(max_nodes=4, random_count=25)
    assert report.passed
    assert report.cases == 1 + 1 + 2 + 8 + 64 + 25


def test_strategy_drive_on_k2(k2):
    table = TranspositionTable(k2, node_budget=None)
    # sg(K2) = 1: first-player lists have length 1 with entries up to 3.
    for b in range(4):
        assert verify.drive_as_first([b], fresh(k2), table) == "ok"


def test_strategy_drive_on_two_isolated(two_isolated):
    table = TranspositionTable(two_isolated, node_budget=None)
    for a in range(4):
        outcome = verify.drive_as_second([a], fresh(two_isolated), table)
        assert outcome == "ok"


def test_strategy_suite_single_graph(k2):
    report = verify.check_strategy_theorem(k2)
    assert report.passed
    assert report.cases == 4  # lists of length 1, entries 0..3


def test_strategy_suite_corpus_small():
    report = verify.check_strategy_theorem_corpus(max_nodes=3)
    assert report.passed


def test_report_failure_bookkeeping():
    report = verify.SuiteReport("demo")
    assert report.passed
    report.fail(detail="x")
    assert not report.passed
    assert report.to_dict()["failures"] == [{"detail": "x"}]


def test_legitimacy_suite_scales_to_sampled_rounds():
    pair = reduction_pair("m_yes", "1")
    report = verify.check_legitimacy(pair.accept_graph, [0], pair.accept_table)
    assert report.passed
    alive = pair.accept_graph.graph.node_count
    assert report.cases == alive - 2  # everything except the two scheduled choices


def test_run_suite_dispatch_unknown():
    with pytest.raises(ValueError):
        verify.run_suite("nope")


def test_end_to_end_budget_is_inconclusive_not_pass():
    from nodekayles.reduction import ReductionPair

    machine = __import__("nodekayles").atm.load_fixture("m_yes")
    ctx = ReductionPair.build(machine, "1", time_budget_ms=0.0001)
    report = verify.check_end_to_end(ctx)
    assert report.inconclusive
    assert not report.passed
