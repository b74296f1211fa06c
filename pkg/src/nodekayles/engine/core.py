"""Grundy values, win search, and the strategy functions.

The heavy lifting happens in a per-graph kernel (compiled when available,
pure Python otherwise) cached inside a :class:`TranspositionTable`.  The
table is scoped to one ground graph; results are keyed by surviving-node
bitmasks, so identical positions always resolve to identical answers no
matter how the table was warmed.
"""

from __future__ import annotations

import os
from time import monotonic
from typing import Iterable, Sequence

from ..errors import BudgetExceededError, GraphFormatError
from ..graph import GroundGraph, Position, bits, is_symmetric_relation, play
from ._pykernel import PyKernel

try:
    from ._kernel import BitKernel
except ImportError:  # compiled kernel not built
    BitKernel = None

if BitKernel is None or os.environ.get("NK_FORCE_PY_KERNEL"):
    _DEFAULT_KERNEL = PyKernel
else:
    _DEFAULT_KERNEL = BitKernel

KERNEL_BACKEND = _DEFAULT_KERNEL.backend

DEFAULT_SG_NODE_BUDGET = 64


def available_backends() -> dict[str, type]:
    backends = {"python": PyKernel}
    if BitKernel is not None:
        backends["cython"] = BitKernel
    return backends


class TranspositionTable:
    """Memoized win/Grundy evaluations for positions of one ground graph."""

    def __init__(
        self,
        ground: GroundGraph,
        *,
        node_budget: int | None = DEFAULT_SG_NODE_BUDGET,
        time_budget_ms: float | None = None,
        backend: str | None = None,
    ):
        self.ground = ground
        self.node_budget = node_budget
        self.time_budget_ms = time_budget_ms
        kernel_cls = available_backends()[backend] if backend else _DEFAULT_KERNEL
        self.backend = kernel_cls.backend
        self._kernel = kernel_cls(ground.closed_neighborhoods)

    def _check(self, position: Position) -> None:
        if position.ground is not self.ground and position.ground != self.ground:
            raise ValueError("position belongs to a different ground graph")

    def _deadline(self, time_budget_ms: float | None) -> float | None:
        budget = self.time_budget_ms if time_budget_ms is None else time_budget_ms
        return None if budget is None else monotonic() + budget / 1000.0

    def win(
        self,
        position: Position,
        *,
        node_budget: int | None = None,
        time_budget_ms: float | None = None,
    ) -> bool:
        """First-player win, with early cutoff at the first losing option."""
        self._check(position)
        if node_budget is not None and position.alive.bit_count() > node_budget:
            raise BudgetExceededError(
                f"position has {position.alive.bit_count()} nodes, budget is {node_budget}"
            )
        self._kernel.set_deadline(self._deadline(time_budget_ms))
        try:
            return self._kernel.win(position.alive)
        except TimeoutError as exc:
            raise BudgetExceededError(str(exc)) from exc

    def grundy(
        self,
        position: Position,
        *,
        node_budget: int | None = None,
        time_budget_ms: float | None = None,
    ) -> int:
        """Full Grundy value; decomposes into connected components first."""
        self._check(position)
        budget = self.node_budget if node_budget is None else node_budget
        if budget is not None and position.alive.bit_count() > budget:
            raise BudgetExceededError(
                f"position has {position.alive.bit_count()} nodes, budget is {budget}"
            )
        self._kernel.set_deadline(self._deadline(time_budget_ms))
        try:
            value = 0
            for comp in component_masks(position):
                value ^= self._kernel.grundy(comp)
            return value
        except TimeoutError as exc:
            raise BudgetExceededError(str(exc)) from exc

    def grundy_monolithic(self, position: Position) -> int:
        """Grundy value without the component split (cross-check hook)."""
        self._check(position)
        self._kernel.set_deadline(None)
        return self._kernel.grundy(position.alive)

    def win_cache_items(self) -> list[tuple[int, bool]]:
        return self._kernel.win_cache_items()

    def grundy_cache_items(self) -> list[tuple[int, int]]:
        return self._kernel.grundy_cache_items()


def _table_for(position: Position, table: TranspositionTable | None) -> TranspositionTable:
    if table is None:
        return TranspositionTable(position.ground)
    return table


def mex(values: Iterable[int]) -> int:
    """Least natural number not in ``values``."""
    present = set(values)
    out = 0
    while out in present:
        out += 1
    return out


def sg(position: Position, table: TranspositionTable | None = None, **budgets) -> int:
    return _table_for(position, table).grundy(position, **budgets)


def first_player_wins(
    position: Position, table: TranspositionTable | None = None, **budgets
) -> bool:
    return _table_for(position, table).win(position, **budgets)


def sentinel(position: Position) -> int:
    """Non-move marker: one past the largest alive node, 0 on the empty set."""
    if position.alive == 0:
        return 0
    return position.alive.bit_length()


def strategy_move(position: Position, table: TranspositionTable | None = None, **budgets) -> int:
    """Least node whose option is a loss for the opponent, else the sentinel.

    Probes candidates in ascending id order with the boolean evaluator, so
    the first hit is exactly the minimum zero-value option.
    """
    table = _table_for(position, table)
    ground = position.ground
    for v in bits(position.alive):
        child = Position(ground, position.alive & ~ground.closed_neighborhoods[v])
        if not table.win(child, **budgets):
            return v
    return sentinel(position)


def first_player_line(
    opponent_moves: Sequence[int],
    position: Position,
    table: TranspositionTable | None = None,
    **budgets,
) -> list[int]:
    """Strategy-driven game line when the engine moves first.

    The result interleaves engine move, opponent move, engine move, ...,
    starting and ending with the engine.  Dead opponent moves are recorded
    but act as no-ops, matching the play semantics.
    """
    table = _table_for(position, table)
    line = [strategy_move(position, table, **budgets)]
    for b in opponent_moves:
        line.append(b)
        line.append(strategy_move(play(position, line), table, **budgets))
    return line


def second_player_line(
    opponent_moves: Sequence[int],
    position: Position,
    table: TranspositionTable | None = None,
    **budgets,
) -> list[int]:
    """Strategy-driven responses when the engine moves second.

    Starts empty; each opponent move is appended followed by the engine's
    reply on the resulting position.
    """
    table = _table_for(position, table)
    line: list[int] = []
    for a in opponent_moves:
        line.append(a)
        line.append(strategy_move(play(position, line), table, **budgets))
    return line


def component_masks(position: Position) -> list[int]:
    """Alive set split into connected components (self-loops ignored)."""
    ground = position.ground
    remaining = position.alive
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            grown = comp
            for v in bits(frontier):
                grown |= ground.closed_neighborhoods[v] & remaining
            frontier = grown & ~comp
            comp = grown
        comps.append(comp)
        remaining &= ~comp
    return comps


def components(position: Position) -> list[Position]:
    return [Position(position.ground, mask) for mask in component_masks(position)]


def grundy_of_relation(
    pairs: Iterable[tuple[int, int]],
    node_count: int | None = None,
    *,
    table_backend: str | None = None,
) -> int:
    """Grundy value of a raw adjacency relation, taken literally.

    A relation that fails the undirected coding (symmetry plus the self-loop
    closure rule) gets the sentinel value: one past the largest declared
    node.  Well-formed relations are evaluated as positions whose alive set
    is the self-looped nodes.
    """
    pair_list = [(int(u), int(v)) for u, v in pairs]
    mentioned = [x for uv in pair_list for x in uv]
    if node_count is None:
        node_count = max(mentioned) + 1 if mentioned else 0
    if any(not (0 <= u < node_count and 0 <= v < node_count) for u, v in pair_list):
        raise GraphFormatError("node id out of range in raw relation")
    pair_set = set(pair_list)
    incident = {u for u, _ in pair_set} | {v for _, v in pair_set}
    closure_ok = all((u, u) in pair_set for u in incident)
    if not (is_symmetric_relation(pair_set) and closure_ok):
        return node_count
    if node_count == 0:
        return 0
    ground = GroundGraph.from_edges(node_count, pair_list)
    alive = 0
    for u in range(node_count):
        if (u, u) in pair_set:
            alive |= 1 << u
    position = Position(ground, alive)
    table = TranspositionTable(ground, node_budget=None, backend=table_backend)
    return table.grundy(position)
