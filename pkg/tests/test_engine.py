from __future__ import annotations

import pytest

from nodekayles.engine import (
    TranspositionTable,
    available_backends,
    components,
    first_player_line,
    first_player_wins,
    grundy_of_relation,
    mex,
    second_player_line,
    sentinel,
    sg,
    strategy_move,
)
from nodekayles.errors import BudgetExceededError
from nodekayles.graph import GroundGraph, Position, nodes, option
from nodekayles.verify import all_labeled_graphs, naive_grundy

from conftest import fresh, path_graph


@pytest.mark.parametrize("values,expected", [((), 0), ((0, 1, 2), 3), ((1, 3), 0)])
def test_mex(values, expected):
    assert mex(values) == expected


# --- Grundy values (expectations frozen from the naive oracle) ----------------


def test_sg_empty_position(path3):
    assert sg(Position(path3, 0)) == 0


def test_sg_k2(k2):
    assert sg(fresh(k2)) == 1


def test_sg_path3(path3):
    assert sg(fresh(path3)) == 2


def test_sg_two_isolated(two_isolated):
    assert sg(fresh(two_isolated)) == 0


def test_sg_matches_oracle_on_paths():
    for n, expected in [(1, 1), (2, 1), (3, 2), (4, 0)]:
        p = fresh(path_graph(n))
        assert naive_grundy(p) == expected
        assert sg(p) == expected


def test_raw_relation_sentinel():
    assert grundy_of_relation([(0, 1)], 2) == 2


def test_raw_relation_wellformed_matches_engine(k2):
    pairs = [(0, 0), (1, 1), (0, 1), (1, 0)]
    assert grundy_of_relation(pairs, 2) == sg(fresh(k2))


def test_raw_relation_missing_self_loop_is_sentinel():
    # Symmetric but an incident node lacks its loop: not the undirected coding.
    assert grundy_of_relation([(0, 1), (1, 0)], 2) == 2


# --- boolean evaluation -------------------------------------------------------


def test_win_empty(path3):
    assert not first_player_wins(Position(path3, 0))


def test_win_k2(k2):
    assert first_player_wins(fresh(k2))


def test_win_two_isolated(two_isolated):
    assert not first_player_wins(fresh(two_isolated))


def test_boolean_agrees_with_sg_small_corpus():
    for ground in all_labeled_graphs(4):
        p = fresh(ground)
        assert first_player_wins(p) == (sg(p, TranspositionTable(ground, node_budget=None)) != 0)


# --- strategy functions -------------------------------------------------------


def test_tau_k2(k2):
    assert strategy_move(fresh(k2)) == 0


def test_tau_sentinel_on_losing_position(two_isolated):
    assert strategy_move(fresh(two_isolated)) == 2


def test_tau_sentinel_on_empty(path3):
    p = Position(path3, 0)
    assert sentinel(p) == 0
    assert strategy_move(p) == 0


def test_tau_is_minimum_zero_option():
    for ground in all_labeled_graphs(4):
        p = fresh(ground)
        zeros = [v for v in sorted(nodes(p)) if naive_grundy(option(p, v)) == 0]
        expected = zeros[0] if zeros else sentinel(p)
        assert strategy_move(p) == expected


def test_tau_soundness_small_corpus():
    for ground in all_labeled_graphs(4):
        p = fresh(ground)
        move = strategy_move(p)
        if p.is_empty:
            continue
        if sg(p, TranspositionTable(ground, node_budget=None)) != 0:
            assert move in nodes(p)
            assert sg(option(p, move)) == 0
        else:
            assert move == sentinel(p)


def test_first_player_line_base_case(k2):
    assert first_player_line([], fresh(k2)) == [0]


def test_first_player_line_shape(path3):
    p = fresh(path3)
    line = first_player_line([0], p)
    assert len(line) == 3
    assert line[1] == 0


def test_first_player_line_prefix_monotone(path3):
    p = fresh(path3)
    assert first_player_line([0, 2], p)[:3] == first_player_line([0], p)


def test_second_player_line_base_case(path3):
    assert second_player_line([], fresh(path3)) == []


def test_second_player_line_step(k2):
    # The opponent empties the board; the reply is the empty-set sentinel 0.
    assert second_player_line([1], fresh(k2)) == [1, 0]


# --- components ----------------------------------------------------------------


def test_components_connected_graph(path3):
    assert components(fresh(path3)) == [fresh(path3)]


def test_components_two_isolated(two_isolated):
    comps = components(fresh(two_isolated))
    assert [c.alive for c in comps] == [0b01, 0b10]


def test_k2_plus_k2_value_decomposes():
    g = GroundGraph.from_edges(4, [(0, 1), (2, 3)])
    assert sg(fresh(g)) == 0
    assert len(components(fresh(g))) == 2


def test_decomposition_matches_monolithic_recursion():
    for ground in all_labeled_graphs(4):
        table = TranspositionTable(ground, node_budget=None)
        p = fresh(ground)
        assert table.grundy(p) == table.grundy_monolithic(p)


# --- budgets, determinism, coherence -------------------------------------------


def test_node_budget_enforced(path3):
    with pytest.raises(BudgetExceededError):
        sg(fresh(path3), node_budget=2)


def test_default_node_budget_is_64():
    g = GroundGraph.from_edges(65, [(i, i + 1) for i in range(64)])
    with pytest.raises(BudgetExceededError):
        sg(fresh(g))


def test_time_budget_enforced():
    # A sparse 24-node graph is heavy enough to trip a tiny wall-clock budget.
    g = GroundGraph.from_edges(24, [(i, i + 1) for i in range(23)])
    table = TranspositionTable(g, node_budget=None, time_budget_ms=0.0001)
    with pytest.raises(BudgetExceededError):
        table.grundy(fresh(g))


def test_win_has_no_default_node_budget():
    g = GroundGraph.from_edges(70, [(i, i + 1) for i in range(69)])
    p = Position(g, (1 << 6) - 1)  # only a small path alive
    assert first_player_wins(p)


def test_determinism_across_table_reuse(path3):
    table = TranspositionTable(path3, node_budget=None)
    p = fresh(path3)
    first = (table.grundy(p), table.win(p), strategy_move(p, table))
    second = (table.grundy(p), table.win(p), strategy_move(p, table))
    assert first == second
    fresh_table = TranspositionTable(path3, node_budget=None)
    assert first == (fresh_table.grundy(p), fresh_table.win(p), strategy_move(p, fresh_table))


def test_table_rejects_foreign_positions(path3, k2):
    table = TranspositionTable(path3)
    with pytest.raises(ValueError):
        table.grundy(fresh(k2))


def test_table_coherence_cached_equals_fresh():
    ground = path_graph(5)
    table = TranspositionTable(ground, node_budget=None)
    table.grundy(fresh(ground))
    table.win(fresh(ground))
    for alive, value in table.grundy_cache_items():
        check = TranspositionTable(ground, node_budget=None)
        assert check.grundy(Position(ground, alive)) == value
    for alive, value in table.win_cache_items():
        check = TranspositionTable(ground, node_budget=None)
        assert check.win(Position(ground, alive)) == value


# --- backend parity --------------------------------------------------------------


def test_backends_agree_on_small_corpus():
    backends = available_backends()
    for ground in all_labeled_graphs(4):
        p = fresh(ground)
        results = {
            name: (
                TranspositionTable(ground, node_budget=None, backend=name).grundy(p),
                TranspositionTable(ground, node_budget=None, backend=name).win(p),
            )
            for name in backends
        }
        assert len(set(results.values())) == 1, results


def test_backends_agree_across_word_boundary():
    edges = []
    for c in range(3):
        base = 30 * c
        edges += [(base + i, base + j) for i in range(30) for j in range(i + 1, 30)]
    ground = GroundGraph.from_edges(90, edges)
    p = fresh(ground)
    values = {
        name: TranspositionTable(ground, node_budget=None, backend=name).grundy(p)
        for name in available_backends()
    }
    assert set(values.values()) == {1}  # three cliques: 1 xor 1 xor 1


def test_mex_law_every_smaller_value_is_realized():
    for ground in all_labeled_graphs(4):
        table = TranspositionTable(ground, node_budget=None)
        p = fresh(ground)
        value = table.grundy(p)
        child_values = {table.grundy(option(p, v)) for v in nodes(p)}
        assert value not in child_values
        for k in range(value):
            assert k in child_values


def test_decomposition_matches_monolithic_on_random_mid_size():
    from nodekayles.verify import random_graphs

    for ground in random_graphs(40, min_nodes=6, max_nodes=12):
        table = TranspositionTable(ground, node_budget=None)
        p = fresh(ground)
        assert table.grundy(p) == table.grundy_monolithic(p)
