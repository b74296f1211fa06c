"""Compare the compiled and pure-Python search kernels.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Covers the three workloads that matter: full Grundy values on mid-size random
graphs, boolean win search on a larger random graph, and the whole-game win
search on a machine-simulation graph (the hot path of the end-to-end suite;
skipped for the Python kernel unless --slow is given, it takes minutes).
"""

from __future__ import annotations

import argparse
import random
from time import monotonic

from nodekayles import atm
from nodekayles.engine import available_backends
from nodekayles.graph import GroundGraph, Position
from nodekayles.reduction import build


def random_graph(n: int, p: float, seed: int) -> GroundGraph:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return GroundGraph.from_edges(n, edges)


def time_call(fn) -> tuple[float, object]:
    start = monotonic()
    result = fn()
    return monotonic() - start, result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--slow", action="store_true", help="run the simulation graph on the Python kernel too")
    args = parser.parse_args()

    backends = available_backends()
    print(f"backends available: {', '.join(backends)}")

    workloads = []
    for seed in range(args.repeat):
        workloads.append((f"grundy random n=21 p=0.3 #{seed}", random_graph(21, 0.3, seed), "grundy"))
    workloads.append(("win random n=30 p=0.25", random_graph(30, 0.25, 99), "win"))

    rows = []
    for name, ground, op in workloads:
        row = {"workload": name}
        reference = None
        for backend, kernel_cls in backends.items():
            kernel = kernel_cls(ground.closed_neighborhoods)
            alive = Position.fresh(ground).alive
            wall, value = time_call(lambda: getattr(kernel, op)(alive))
            row[backend] = wall
            if reference is None:
                reference = value
            elif value != reference:
                raise SystemExit(f"backend disagreement on {name}: {value} != {reference}")
        rows.append(row)

    sim = build(atm.load_fixture("m_bit1"), "", "A")
    row = {"workload": f"win simulation graph n={sim.graph.node_count}"}
    for backend, kernel_cls in backends.items():
        if backend == "python" and not args.slow:
            row[backend] = None
            continue
        kernel = kernel_cls(sim.graph.closed_neighborhoods)
        wall, value = time_call(lambda: kernel.win(sim.graph.full_mask))
        row[backend] = wall
    rows.append(row)

    names = list(backends)
    print(f"\n{'workload':<42}" + "".join(f"{n:>12}" for n in names) + f"{'speedup':>10}")
    for row in rows:
        cells = ""
        for n in names:
            wall = row.get(n)
            cells += f"{wall:>11.3f}s" if wall is not None else f"{'skipped':>12}"
        speedup = ""
        if row.get("python") and row.get("cython"):
            speedup = f"{row['python'] / row['cython']:>9.1f}x"
        print(f"{row['workload']:<42}{cells}{speedup}")


if __name__ == "__main__":
    main()
