"""Game evaluation: Grundy search, win search, and strategy lines."""

from .core import (
    DEFAULT_SG_NODE_BUDGET,
    KERNEL_BACKEND,
    TranspositionTable,
    available_backends,
    component_masks,
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

__all__ = [
    "DEFAULT_SG_NODE_BUDGET",
    "KERNEL_BACKEND",
    "TranspositionTable",
    "available_backends",
    "component_masks",
    "components",
    "first_player_line",
    "first_player_wins",
    "grundy_of_relation",
    "mex",
    "second_player_line",
    "sentinel",
    "sg",
    "strategy_move",
]
