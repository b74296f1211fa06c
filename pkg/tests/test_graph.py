from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nodekayles.errors import EmptySequenceError, GraphFormatError, MoveNotAvailableError
from nodekayles.graph import (
    ALICE,
    BOB,
    GroundGraph,
    Position,
    dump_graph_json,
    dump_graph_text,
    is_winning_sequence,
    nodes,
    option,
    parse_graph_json,
    parse_graph_text,
    play,
    to_dot,
    validate_graph,
    winner,
)

from conftest import fresh, path_graph


# --- validation -------------------------------------------------------------


def test_validate_empty_relation():
    g = validate_graph([])
    assert g.node_count == 0


def test_validate_symmetric_pair():
    g = validate_graph([(0, 1), (1, 0)], complete_symmetry=False)
    assert g.node_count == 2
    assert g.adjacent(0, 0) and g.adjacent(1, 1)  # implied self-loops


def test_validate_asymmetric_rejected_without_completion():
    with pytest.raises(GraphFormatError, match="asymmetric"):
        validate_graph([(0, 1)], complete_symmetry=False)


def test_validate_completes_symmetry_by_default():
    g = validate_graph([(0, 1)])
    assert g.adjacent(1, 0)


def test_validate_out_of_range():
    with pytest.raises(GraphFormatError, match="out of range"):
        validate_graph([(0, 5)], node_count=2)


# --- position basics --------------------------------------------------------


def test_nodes_empty_position(path3):
    assert nodes(Position(path3, 0)) == set()


def test_nodes_fresh_triangle(triangle):
    assert nodes(fresh(triangle)) == {0, 1, 2}


def test_triangle_option_clears_everything(triangle):
    assert nodes(option(fresh(triangle), 0)) == set()


def test_option_middle_of_path_clears(path3):
    assert option(fresh(path3), 1).is_empty


def test_option_end_of_path_leaves_far_node(path3):
    assert nodes(option(fresh(path3), 0)) == {2}


def test_option_single_node():
    g = GroundGraph.from_edges(1, [])
    assert option(fresh(g), 0).is_empty


def test_option_dead_node_rejected(path3):
    p = option(fresh(path3), 0)
    with pytest.raises(MoveNotAvailableError):
        option(p, 1)


def test_play_empty_sequence_is_identity(path3):
    p = fresh(path3)
    assert play(p, []) == p


def test_play_repeat_is_noop(path3):
    p = fresh(path3)
    assert play(p, [0, 0]) == play(p, [0])


def test_play_two_moves_empty(path3):
    assert play(fresh(path3), [0, 2]).is_empty


def test_play_ignores_out_of_range_ids(path3):
    p = fresh(path3)
    assert play(p, [99, -3]) == p


# --- winning sequences and the winner rule ----------------------------------


def test_winning_sequence_single_node():
    g = GroundGraph.from_edges(1, [])
    assert is_winning_sequence([0], fresh(g))


def test_winning_sequence_path3_middle(path3):
    assert is_winning_sequence([1], fresh(path3))


def test_winning_sequence_path3_end_is_not(path3):
    assert not is_winning_sequence([0], fresh(path3))


def test_winning_sequence_requires_a_move(path3):
    with pytest.raises(EmptySequenceError):
        is_winning_sequence([], fresh(path3))


@pytest.mark.parametrize("length,expected", [(1, ALICE), (2, BOB), (3, ALICE)])
def test_winner_parity(length, expected):
    assert winner(list(range(length))) == expected


# --- serialization ----------------------------------------------------------


def test_json_round_trip(triangle):
    text = dump_graph_json(triangle)
    assert dump_graph_json(parse_graph_json(text)) == text
    parsed = parse_graph_json(text)
    assert parsed.node_count == 3
    assert len(parsed.edges()) == 3


def test_text_round_trip(path3):
    text = dump_graph_text(path3)
    assert dump_graph_text(parse_graph_text(text)) == text


def test_empty_graph_file():
    assert parse_graph_text("").node_count == 0
    assert parse_graph_json('{"nodes": 0}').node_count == 0


def test_json_diagnostics():
    with pytest.raises(GraphFormatError, match="malformed"):
        parse_graph_json("{not json")
    with pytest.raises(GraphFormatError, match="edge #0"):
        parse_graph_json('{"nodes": 2, "edges": [[0]]}')
    with pytest.raises(GraphFormatError, match="line 2"):
        parse_graph_text("2\n0 1 2")


def test_dot_export_suppresses_loops(triangle):
    dot = to_dot(triangle)
    assert "0 -- 0" not in dot
    assert "0 -- 1;" in dot
    colored = to_dot(triangle, fillcolors={0: "red"})
    assert 'fillcolor="red"' in colored


# --- invariants -------------------------------------------------------------

graphs = st.integers(1, 6).flatmap(
    lambda n: st.builds(
        lambda edges: GroundGraph.from_edges(n, edges),
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
            max_size=n * n,
        ),
    )
)


@given(graphs)
def test_adjacency_symmetry(g):
    for u in range(g.node_count):
        for v in range(g.node_count):
            assert g.adjacent(u, v) == g.adjacent(v, u)


@given(graphs, st.data())
def test_option_removes_exactly_closed_neighborhood(g, data):
    p = fresh(g)
    v = data.draw(st.integers(0, g.node_count - 1))
    after = option(p, v)
    assert nodes(after) == nodes(p) - g.neighbors(v)


@given(graphs, st.data())
@settings(max_examples=60)
def test_option_commutation(g, data):
    p = fresh(g)
    u = data.draw(st.integers(0, g.node_count - 1))
    v = data.draw(st.integers(0, g.node_count - 1))
    pu = option(p, u)
    pv = option(p, v)
    if v in nodes(pu) and u in nodes(pv):
        both = nodes(p) - g.neighbors(u) - g.neighbors(v)
        assert option(pu, v) == option(pv, u)
        assert nodes(option(pu, v)) == both


@given(graphs, st.lists(st.integers(0, 7), max_size=8))
def test_play_monotone_and_dead_move_law(g, moves):
    p = fresh(g)
    out = play(p, moves)
    assert nodes(out) <= nodes(p)
    for v in range(g.node_count + 2):
        if v not in nodes(out):
            assert play(p, moves + [v]) == out
