"""Independent brute-force oracles and executable property suites.

Every expected outcome here flows from an oracle (memo-free Grundy
recursion, exhaustive machine evaluation, or direct two-ply search) — no
hand-written truth values.  Failures carry a minimal reproduction: the graph
bytes plus whatever moves set the scene.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from time import monotonic
from typing import Iterable, Iterator, Sequence

from . import atm, reduction
from .engine import (
    TranspositionTable,
    first_player_wins,
    second_player_line,
    sentinel,
    sg,
    strategy_move,
)
from .errors import BudgetExceededError, NodeKaylesError
from .graph import GroundGraph, Position, bits, dump_graph_json, option, play

RANDOM_CORPUS_SEED = 0x5EED_4B1D
NAIVE_NODE_CAP = 14


def naive_grundy(position: Position) -> int:
    """Memo-free, decomposition-free Grundy recursion (the independence oracle).

    Polynomial space, exponential time; hard-capped at 14 alive nodes.
    """
    if position.alive.bit_count() > NAIVE_NODE_CAP:
        raise NodeKaylesError(f"naive recursion capped at {NAIVE_NODE_CAP} nodes")
    masks = position.ground.closed_neighborhoods

    def rec(alive: int) -> int:
        seen = set()
        rest = alive
        while rest:
            v = (rest & -rest).bit_length() - 1
            seen.add(rec(alive & ~masks[v]))
            rest &= rest - 1
        value = 0
        while value in seen:
            value += 1
        return value

    return rec(position.alive)


@dataclass
class SuiteReport:
    """Outcome of one verification suite."""

    suite: str
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    wall_seconds: float = 0.0
    inconclusive: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and not self.inconclusive

    def fail(self, **repro) -> None:
        self.failures.append(repro)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "passed": self.passed,
            "failures": self.failures,
            "inconclusive": self.inconclusive,
            "wall_seconds": round(self.wall_seconds, 3),
        }


# ---------------------------------------------------------------------------
# Graph corpora


def all_labeled_graphs(max_nodes: int) -> Iterator[GroundGraph]:
    """Every labeled graph with 0..max_nodes nodes."""
    for n in range(max_nodes + 1):
        slots = list(itertools.combinations(range(n), 2))
        for code in range(1 << len(slots)):
            edges = [slots[i] for i in range(len(slots)) if code >> i & 1]
            yield GroundGraph.from_edges(n, edges)


def random_graphs(
    count: int,
    *,
    seed: int = RANDOM_CORPUS_SEED,
    min_nodes: int = 6,
    max_nodes: int = 12,
    edge_probability: float = 0.5,
) -> Iterator[GroundGraph]:
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(min_nodes, max_nodes)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < edge_probability
        ]
        yield GroundGraph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Oracle-equivalence suite


def check_small_graphs(
    *, max_nodes: int = 5, random_count: int = 1000, backend: str | None = None
) -> SuiteReport:
    """Engine Grundy equals the naive oracle; booleans agree with sg != 0."""
    report = SuiteReport("small-graphs")
    start = monotonic()
    corpus = itertools.chain(
        all_labeled_graphs(max_nodes), random_graphs(random_count)
    )
    for ground in corpus:
        position = Position.fresh(ground)
        expected = naive_grundy(position)
        table = TranspositionTable(ground, node_budget=None, backend=backend)
        got = table.grundy(position)
        wins = table.win(position)
        report.cases += 1
        if got != expected or wins != (expected != 0):
            report.fail(
                graph=dump_graph_json(ground),
                naive=expected,
                engine=got,
                first_player_wins=wins,
            )
    report.wall_seconds = monotonic() - start
    return report


# ---------------------------------------------------------------------------
# Strategy-soundness suite


def adversary_lists(length: int, node_count: int) -> Iterator[tuple[int, ...]]:
    """All move lists of the given length with entries in [0, node_count+1]."""
    return itertools.product(range(node_count + 2), repeat=length)


def _alive(position: Position, v: int) -> bool:
    return 0 <= v < position.ground.node_count and bool(position.alive >> v & 1)


def drive_as_first(blist: Sequence[int], position: Position, table: TranspositionTable) -> str:
    """Play the engine first against a scripted list; classify the outcome.

    ``ok``: the engine always had a move and either emptied the board or the
    opponent's next listed move was already dead.  Anything else names the
    defect.
    """
    for b in list(blist) + [None]:
        move = strategy_move(position, table)
        if move == sentinel(position):
            return "engine-stuck"
        position = option(position, move)
        if position.is_empty:
            return "ok"
        if b is None:
            return "list-exhausted"
        if not _alive(position, b):
            return "ok"
        position = option(position, b)
        if position.is_empty:
            return "opponent-emptied"
    return "list-exhausted"


def drive_as_second(alist: Sequence[int], position: Position, table: TranspositionTable) -> str:
    """Mirror of :func:`drive_as_first` with the engine responding."""
    if position.is_empty:
        return "ok"  # the first mover is stuck straight away
    for a in alist:
        if not _alive(position, a):
            return "ok"
        position = option(position, a)
        if position.is_empty:
            return "opponent-emptied"
        move = strategy_move(position, table)
        if move == sentinel(position):
            return "engine-stuck"
        position = option(position, move)
        if position.is_empty:
            return "ok"
    return "list-exhausted"


def check_strategy_theorem(ground: GroundGraph, *, backend: str | None = None) -> SuiteReport:
    """Winning-strategy soundness on one graph, exhaustively over move lists.

    A nonzero start value means the first-player line beats every opponent
    list of length ⌊n/2⌋ with entries up to n+1; a zero value means the
    second-player line does, over lists of length ⌈n/2⌉.
    """
    report = SuiteReport("strategy")
    start = monotonic()
    position = Position.fresh(ground)
    table = TranspositionTable(ground, node_budget=None, backend=backend)
    n = ground.node_count
    value = table.grundy(position)
    if value != 0:
        length = n // 2
        drive, role = drive_as_first, "first"
    else:
        length = (n + 1) // 2
        drive, role = drive_as_second, "second"
    for moves in adversary_lists(length, n):
        report.cases += 1
        outcome = drive(moves, position, table)
        if outcome != "ok":
            report.fail(
                graph=dump_graph_json(ground),
                role=role,
                moves=list(moves),
                outcome=outcome,
            )
    report.wall_seconds = monotonic() - start
    return report


def check_strategy_theorem_corpus(
    *, max_nodes: int = 5, backend: str | None = None
) -> SuiteReport:
    report = SuiteReport("strategy")
    start = monotonic()
    for ground in all_labeled_graphs(max_nodes):
        sub = check_strategy_theorem(ground, backend=backend)
        report.cases += sub.cases
        report.failures.extend(sub.failures)
    report.wall_seconds = monotonic() - start
    return report


# ---------------------------------------------------------------------------
# Reduction suites


def _two_ply_refutation(position: Position, cheat: int) -> bool:
    """After the cheat, some reply leaves nothing — or leaves a position where
    every continuation still lets the replier empty the board next ply."""
    after_cheat = option(position, cheat)
    for reply in bits(after_cheat.alive):
        after_reply = option(after_cheat, reply)
        if after_reply.is_empty:
            return True
        ok = True
        for cont in bits(after_reply.alive):
            after_cont = option(after_reply, cont)
            if after_cont.is_empty:
                ok = False  # the cheater would make the final move
                break
            if not any(
                option(after_cont, final).is_empty for final in bits(after_cont.alive)
            ):
                ok = False
                break
        if ok:
            return True
    return False


def check_legitimacy(
    rg: reduction.ReductionGraph,
    rounds: Iterable[int],
    table: TranspositionTable | None = None,
) -> SuiteReport:
    """Every off-schedule move from an on-schedule position loses immediately.

    For each sampled round the position is produced by legitimate play; every
    alive node outside the scheduled layer must hand the opponent a win, with
    a two-ply board-clearing refutation on display.
    """
    report = SuiteReport("legitimacy")
    start = monotonic()
    if table is None:
        table = TranspositionTable(rg.graph, node_budget=None)
    for k in rounds:
        position, prefix = reduction.legitimate_prefix(rg, k)
        layer = rg.schedule_masks[k]
        for cheat in bits(position.alive & ~layer):
            report.cases += 1
            opponent_wins = table.win(option(position, cheat))
            refuted = _two_ply_refutation(position, cheat)
            if not (opponent_wins and refuted):
                report.fail(
                    variant=rg.variant,
                    round=k,
                    prefix=prefix,
                    cheat=cheat,
                    cheat_label=repr(rg.label_of(cheat)),
                    opponent_wins=opponent_wins,
                    two_ply_refutation=refuted,
                )
    report.wall_seconds = monotonic() - start
    return report


def all_full_paths(s: int) -> list[list[int]]:
    return [list(bits_tuple) for bits_tuple in itertools.product((0, 1), repeat=s)]


def check_complement(ctx: reduction.ReductionPair) -> SuiteReport:
    """After any full path, exactly one variant is a first-player win.

    The printed statement compares the accept variant with itself; this is
    the corrected reading with the reject variant on the right-hand side.
    """
    report = SuiteReport("complement")
    start = monotonic()
    s = ctx.accept_graph.layout.s
    for path in all_full_paths(s):
        report.cases += 1
        win_a = ctx.accept_table.win(reduction.apply_path(ctx.accept_graph, path))
        win_r = ctx.reject_table.win(reduction.apply_path(ctx.reject_graph, path))
        if win_a == win_r:
            report.fail(
                machine=ctx.machine.name,
                input=ctx.input,
                path=path,
                accept_variant_win=win_a,
                reject_variant_win=win_r,
            )
    report.wall_seconds = monotonic() - start
    return report


def check_end_to_end(ctx: reduction.ReductionPair) -> SuiteReport:
    """Whole-game value matches machine acceptance, and witnesses check out.

    (i) the accept variant is a first-player win iff the machine accepts;
    (ii) on a win, every adversary half-path yields an accepting declared
    run; (iii) on a loss, the reject-variant witness yields a rejecting one;
    (iv) the path phase of each witness carries the adversary's bits in the
    expected slots.  Budget overruns are recorded as inconclusive, never as
    a pass.
    """
    report = SuiteReport("end-to-end")
    start = monotonic()
    machine, x = ctx.machine, ctx.input
    s = ctx.accept_graph.layout.s
    try:
        machine_accepts = atm.accepts(machine, x)
        engine_wins = ctx.accept_table.win(ctx.accept_graph.fresh())
        report.cases += 1
        if engine_wins != machine_accepts:
            report.fail(
                machine=machine.name,
                input=x,
                first_player_wins=engine_wins,
                machine_accepts=machine_accepts,
            )
        variant = reduction.VARIANT_ACCEPT if machine_accepts else reduction.VARIANT_REJECT
        mode = "accepting" if machine_accepts else "rejecting"
        for half in itertools.product((0, 1), repeat=s // 2):
            report.cases += 1
            result = reduction.witness(machine, x, list(half), variant, context=ctx)
            rg = ctx.graph_for(variant)
            problems = []
            if len(result.path_phase) != 2 * len(half):
                problems.append("path-phase-length")
            offset = 1 if variant == reduction.VARIANT_ACCEPT else 0
            for k, bit in enumerate(half):
                expect = rg.path_id(2 * k + offset, bit)
                if result.path_phase[2 * k + offset] != expect:
                    problems.append(f"adversary-slot-{k}")
            if not reduction.computation_predicates(
                rg, result.comp_moves, result.path_bits, mode
            ):
                problems.append(f"not-{mode}")
            if problems:
                report.fail(
                    machine=machine.name,
                    input=x,
                    variant=variant,
                    half_path=list(half),
                    problems=problems,
                )
    except BudgetExceededError as exc:
        report.inconclusive.append({"machine": machine.name, "input": x, "error": str(exc)})
    report.wall_seconds = monotonic() - start
    return report


# ---------------------------------------------------------------------------
# Fixture-wide runners used by the CLI


FIXTURE_INPUTS: tuple[tuple[str, str], ...] = (
    ("m_yes", "1"),
    ("m_no", ""),
    ("m_bit0", "1"),
    ("m_bit1", ""),
    ("m_flip", "10"),
)

LEGITIMACY_ROUNDS = (0, 1)  # extended with (s, s+3) once the layout is known


def fixture_pairs(
    only: tuple[atm.Machine, str] | None = None,
    *,
    time_budget_ms: float | None = None,
) -> Iterator[reduction.ReductionPair]:
    if only is not None:
        machine, x = only
        yield reduction.ReductionPair.build(machine, x, time_budget_ms=time_budget_ms)
        return
    for name, x in FIXTURE_INPUTS:
        yield reduction.ReductionPair.build(
            atm.load_fixture(name), x, time_budget_ms=time_budget_ms
        )


def _merge(total: SuiteReport, sub: SuiteReport) -> None:
    total.cases += sub.cases
    total.failures.extend(sub.failures)
    total.inconclusive.extend(sub.inconclusive)


def run_suite(
    name: str,
    *,
    machine: atm.Machine | None = None,
    machine_input: str = "",
    time_budget_ms: float | None = None,
) -> SuiteReport:
    """Entry point behind ``nk verify --suite <name>``."""
    only = (machine, machine_input) if machine is not None else None
    start = monotonic()
    if name == "small-graphs":
        report = check_small_graphs()
    elif name == "strategy":
        report = check_strategy_theorem_corpus()
    elif name == "legitimacy":
        report = SuiteReport("legitimacy")
        for ctx in fixture_pairs(only, time_budget_ms=time_budget_ms):
            s = ctx.accept_graph.layout.s
            rounds = sorted(set(LEGITIMACY_ROUNDS) | {s, s + 3})
            _merge(report, check_legitimacy(ctx.accept_graph, rounds, ctx.accept_table))
            _merge(report, check_legitimacy(ctx.reject_graph, rounds, ctx.reject_table))
    elif name == "complement":
        report = SuiteReport("complement")
        for ctx in fixture_pairs(only, time_budget_ms=time_budget_ms):
            _merge(report, check_complement(ctx))
    elif name == "end-to-end":
        report = SuiteReport("end-to-end")
        for ctx in fixture_pairs(only, time_budget_ms=time_budget_ms):
            _merge(report, check_end_to_end(ctx))
    else:
        raise ValueError(f"unknown suite {name!r}")
    report.wall_seconds = monotonic() - start
    return report
