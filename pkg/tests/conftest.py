from __future__ import annotations

import pytest

from nodekayles import atm
from nodekayles.graph import GroundGraph, Position
from nodekayles.reduction import ReductionPair

FIXTURE_INPUTS = (
    ("m_yes", "1"),
    ("m_no", ""),
    ("m_bit0", "1"),
    ("m_bit1", ""),
    ("m_flip", "10"),
)


def path_graph(n: int) -> GroundGraph:
    return GroundGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


@pytest.fixture
def k2() -> GroundGraph:
    return GroundGraph.from_edges(2, [(0, 1)])


@pytest.fixture
def path3() -> GroundGraph:
    return path_graph(3)


@pytest.fixture
def triangle() -> GroundGraph:
    return GroundGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def two_isolated() -> GroundGraph:
    return GroundGraph.from_edges(2, [])


def fresh(ground: GroundGraph) -> Position:
    return Position.fresh(ground)


_PAIR_CACHE: dict[tuple[str, str], ReductionPair] = {}


def reduction_pair(name: str, x: str) -> ReductionPair:
    """Session-wide cache: the graphs are deterministic and the tables only grow."""
    key = (name, x)
    if key not in _PAIR_CACHE:
        _PAIR_CACHE[key] = ReductionPair.build(atm.load_fixture(name), x)
    return _PAIR_CACHE[key]


@pytest.fixture
def yes_pair() -> ReductionPair:
    return reduction_pair("m_yes", "1")
