# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernel over word-packed node sets.

Mirrors the contract of ``_pykernel.PyKernel``: boolean first-player-win
search with early cutoff and full Grundy values by mex recursion, both
memoized per surviving-node set.  Budget overruns raise ``TimeoutError``.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdlib cimport calloc, free
from libc.string cimport memcpy

from time import monotonic

cdef extern from *:
    """
    #include <stdint.h>
    static inline int nk_popcount(uint64_t x) { return __builtin_popcountll(x); }
    static inline int nk_ctz(uint64_t x) { return __builtin_ctzll(x); }
    """
    int nk_popcount(unsigned long long x) nogil
    int nk_ctz(unsigned long long x) nogil

DEF TICK_INTERVAL = 4096


cdef class BitKernel:
    backend = "cython"

    cdef int n
    cdef int nwords
    cdef unsigned long long* notmasks   # per node: complement of N[v], masked to n bits
    cdef unsigned long long* buf        # per-depth child scratch
    cdef int maxdepth
    cdef dict win_cache
    cdef dict sg_cache
    cdef double deadline                # monotonic seconds; < 0 means none
    cdef unsigned long long ticks

    def __cinit__(self, closed_neighborhoods):
        cdef int v, w
        cdef object mask, full
        self.n = len(closed_neighborhoods)
        self.nwords = (self.n + 63) >> 6
        if self.nwords == 0:
            self.nwords = 1
        self.notmasks = <unsigned long long*> calloc(self.n * self.nwords or 1, 8)
        self.maxdepth = self.n + 4
        self.buf = <unsigned long long*> calloc((self.maxdepth + 2) * self.nwords, 8)
        if self.notmasks == NULL or self.buf == NULL:
            raise MemoryError()
        full = (1 << int(self.n)) - 1  # Python-int arithmetic: n may exceed 63
        for v in range(self.n):
            mask = (~closed_neighborhoods[v]) & full
            for w in range(self.nwords):
                self.notmasks[v * self.nwords + w] = <unsigned long long> (
                    (mask >> (64 * w)) & 0xFFFFFFFFFFFFFFFF
                )
        self.win_cache = {}
        self.sg_cache = {}
        self.deadline = -1.0
        self.ticks = 0

    def __dealloc__(self):
        if self.notmasks != NULL:
            free(self.notmasks)
        if self.buf != NULL:
            free(self.buf)

    def set_deadline(self, deadline):
        self.deadline = -1.0 if deadline is None else <double> deadline

    cdef inline int _tick(self) except -1:
        self.ticks += 1
        if self.deadline >= 0.0 and self.ticks % TICK_INTERVAL == 0:
            if monotonic() > self.deadline:
                raise TimeoutError("search budget exceeded")
        return 0

    cdef inline bint _is_empty(self, unsigned long long* a) nogil:
        cdef int w
        for w in range(self.nwords):
            if a[w]:
                return False
        return True

    cdef inline bint _clears(self, unsigned long long* alive, int v) nogil:
        # True when a move at v removes every alive node.
        cdef unsigned long long* nm = self.notmasks + v * self.nwords
        cdef int w
        for w in range(self.nwords):
            if alive[w] & nm[w]:
                return False
        return True

    cdef inline void _child(self, unsigned long long* dst, unsigned long long* alive, int v) nogil:
        cdef unsigned long long* nm = self.notmasks + v * self.nwords
        cdef int w
        for w in range(self.nwords):
            dst[w] = alive[w] & nm[w]

    cdef int _win(self, unsigned long long* alive, int depth) except -1:
        cdef int w, b, v
        cdef unsigned long long x
        cdef unsigned long long* child
        cdef bytes key
        cdef object cached
        if self._is_empty(alive):
            return 0
        key = PyBytes_FromStringAndSize(<char*> alive, self.nwords * 8)
        cached = self.win_cache.get(key)
        if cached is not None:
            return 1 if cached else 0
        self._tick()
        # Board-clearing moves win outright; scan them before any recursion.
        for w in range(self.nwords):
            x = alive[w]
            while x:
                b = nk_ctz(x)
                v = (w << 6) + b
                if self._clears(alive, v):
                    return 1
                x &= x - 1
        child = self.buf + depth * self.nwords
        for w in range(self.nwords):
            x = alive[w]
            while x:
                b = nk_ctz(x)
                v = (w << 6) + b
                self._child(child, alive, v)
                if self._win(child, depth + 1) == 0:
                    self.win_cache[key] = True
                    return 1
                x &= x - 1
        self.win_cache[key] = False
        return 0

    cdef int _grundy(self, unsigned long long* alive, int depth) except -1:
        cdef int w, b, v, value
        cdef unsigned long long x
        cdef unsigned long long* child
        cdef bytes key
        cdef object cached
        cdef set seen
        if self._is_empty(alive):
            return 0
        key = PyBytes_FromStringAndSize(<char*> alive, self.nwords * 8)
        cached = self.sg_cache.get(key)
        if cached is not None:
            return <int> cached
        self._tick()
        seen = set()
        child = self.buf + depth * self.nwords
        for w in range(self.nwords):
            x = alive[w]
            while x:
                b = nk_ctz(x)
                v = (w << 6) + b
                self._child(child, alive, v)
                seen.add(self._grundy(child, depth + 1))
                x &= x - 1
        value = 0
        while value in seen:
            value += 1
        self.sg_cache[key] = value
        return value

    cdef int _load(self, unsigned long long* dst, object alive) except -1:
        cdef bytes raw = alive.to_bytes(self.nwords * 8, "little")
        memcpy(dst, <char*> raw, self.nwords * 8)
        return 0

    def win(self, alive):
        """True iff the player to move wins the position ``alive``."""
        cdef unsigned long long* start = self.buf + (self.maxdepth + 1) * self.nwords
        self._load(start, alive)
        return self._win(start, 0) == 1

    def grundy(self, alive):
        """Grundy value of the position ``alive``."""
        cdef unsigned long long* start = self.buf + (self.maxdepth + 1) * self.nwords
        self._load(start, alive)
        return self._grundy(start, 0)

    def debug_notmask(self, int v):
        cdef int w
        out = 0
        for w in range(self.nwords):
            out |= int(self.notmasks[v * self.nwords + w]) << (64 * w)
        return out

    # Introspection used by cache-coherence tests.

    def win_cache_items(self):
        return [(int.from_bytes(k, "little"), v) for k, v in self.win_cache.items()]

    def grundy_cache_items(self):
        return [(int.from_bytes(k, "little"), v) for k, v in self.sg_cache.items()]

    def cache_sizes(self):
        return len(self.win_cache), len(self.sg_cache)
