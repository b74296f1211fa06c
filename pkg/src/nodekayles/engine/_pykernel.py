"""Pure-Python search kernel over bitmask positions.

Same contract as the compiled kernel in ``_kernel.pyx``: boolean
first-player-win search with early cutoff, and full Grundy values by mex
recursion.  Budget overruns raise :class:`TimeoutError`; the engine facade
translates that into the package error type.
"""

from __future__ import annotations

import sys
from time import monotonic

_TICK_INTERVAL = 4096


class PyKernel:
    backend = "python"

    def __init__(self, closed_neighborhoods: tuple[int, ...]):
        self._masks = tuple(closed_neighborhoods)
        self._n = len(self._masks)
        self._win_cache: dict[int, bool] = {}
        self._sg_cache: dict[int, int] = {}
        self._deadline: float | None = None
        self._ticks = 0
        # Game length is bounded by the node count; leave room for callers.
        limit = 8 * self._n + 2000
        if sys.getrecursionlimit() < limit:
            sys.setrecursionlimit(limit)

    def set_deadline(self, deadline: float | None) -> None:
        """Wall-clock cutoff as a ``monotonic()`` instant, or None."""
        self._deadline = deadline

    def _tick(self) -> None:
        self._ticks += 1
        if self._deadline is not None and self._ticks % _TICK_INTERVAL == 0:
            if monotonic() > self._deadline:
                raise TimeoutError("search budget exceeded")

    def win(self, alive: int) -> bool:
        """True iff the player to move wins the position ``alive``."""
        if alive == 0:
            return False
        cached = self._win_cache.get(alive)
        if cached is not None:
            return cached
        self._tick()
        masks = self._masks
        # A move that clears the board wins outright; checking all of them
        # before recursing keeps refutations of bad moves cheap.
        rest = alive
        while rest:
            v = (rest & -rest).bit_length() - 1
            if alive & ~masks[v] == 0:
                return True
            rest &= rest - 1
        result = False
        rest = alive
        while rest:
            v = (rest & -rest).bit_length() - 1
            if not self.win(alive & ~masks[v]):
                result = True
                break
            rest &= rest - 1
        self._win_cache[alive] = result
        return result

    def grundy(self, alive: int) -> int:
        """Grundy value of the position ``alive``."""
        if alive == 0:
            return 0
        cached = self._sg_cache.get(alive)
        if cached is not None:
            return cached
        self._tick()
        masks = self._masks
        seen = set()
        rest = alive
        while rest:
            v = (rest & -rest).bit_length() - 1
            seen.add(self.grundy(alive & ~masks[v]))
            rest &= rest - 1
        value = 0
        while value in seen:
            value += 1
        self._sg_cache[alive] = value
        return value

    # Introspection used by cache-coherence tests.

    def win_cache_items(self) -> list[tuple[int, bool]]:
        return list(self._win_cache.items())

    def grundy_cache_items(self) -> list[tuple[int, int]]:
        return list(self._sg_cache.items())

    def cache_sizes(self) -> tuple[int, int]:
        return len(self._win_cache), len(self._sg_cache)
