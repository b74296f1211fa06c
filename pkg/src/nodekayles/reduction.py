"""Layered Node Kayles graphs that simulate a machine run.

The graph for a machine/input pair schedules one layer of nodes per game
round: first one two-node layer per path bit, then, per simulated step, a
block of declaration layers (one per tape cell, one for the head, one for
the state) interleaved with single forced nodes for the second player.

Three gadget families keep play honest:

* every scheduled layer together with its punisher family forms a clique, so
  a round consumes exactly one choice from its layer;
* punishers: ``PunishNode(k, t)`` is adjacent to everything scheduled after
  round ``k`` except index ``t`` (constraint nodes carry the pseudo-index one
  past the last round).  Any off-schedule grab leaves the opponent a punisher
  that clears the board immediately;
* constraint nodes encode the initial configuration and the transition
  rules.  A rule dies when a declaration satisfies its conclusion or
  contradicts its premise, so the survivors at the end are exactly the
  violated rules — plus the accept (variant ``A``) or reject (variant ``R``)
  node when the declared run does not justify removing it.

With both players on schedule, the first mover wins the accept variant
exactly when her declared run is an accepting computation, and the reject
variant exactly when it is rejecting; the one surviving certificate
otherwise hands the final move to the second player.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import atm
from .atm import BLANK, Config, Machine, SYMBOLS
from .engine import TranspositionTable, first_player_line, second_player_line
from .errors import (
    LengthMismatchError,
    MalformedRoundError,
    NodeKaylesError,
    UnknownNodeError,
)
from .graph import GroundGraph, Position, bits, play

VARIANT_ACCEPT = "A"
VARIANT_REJECT = "R"


# ---------------------------------------------------------------------------
# Node labels


@dataclass(frozen=True)
class PathNode:
    round: int
    bit: int


@dataclass(frozen=True)
class TapeNode:
    round: int
    cell: int
    symbol: int


@dataclass(frozen=True)
class HeadNode:
    round: int
    pos: int


@dataclass(frozen=True)
class StateNode:
    round: int
    state: int


@dataclass(frozen=True)
class BobNode:
    round: int
    slot: int


@dataclass(frozen=True)
class PunishNode:
    round: int
    target: int


@dataclass(frozen=True)
class InitRule:
    target: "Label"


@dataclass(frozen=True)
class TransRule:
    bit: int
    state: int
    head: int
    symbol: int
    target: "Label"


@dataclass(frozen=True)
class AcceptNode:
    pass


@dataclass(frozen=True)
class RejectNode:
    pass


Label = (
    PathNode
    | TapeNode
    | HeadNode
    | StateNode
    | BobNode
    | PunishNode
    | InitRule
    | TransRule
    | AcceptNode
    | RejectNode
)

_KIND_RANK = {
    PathNode: 0,
    TapeNode: 1,
    HeadNode: 2,
    StateNode: 3,
    BobNode: 4,
    PunishNode: 5,
    InitRule: 6,
    TransRule: 7,
    AcceptNode: 8,
    RejectNode: 9,
}


def label_sort_key(label: Label) -> tuple:
    rank = _KIND_RANK[type(label)]
    if isinstance(label, InitRule):
        return (rank, label_sort_key(label.target))
    if isinstance(label, TransRule):
        return (rank, label.bit, label.state, label.head, label.symbol, label_sort_key(label.target))
    values = tuple(getattr(label, f) for f in label.__dataclass_fields__)
    return (rank,) + values


def label_record(label: Label) -> dict:
    """JSON-friendly representation used by the sidecar file."""
    record: dict = {"kind": type(label).__name__}
    for name in label.__dataclass_fields__:
        value = getattr(label, name)
        record[name] = label_record(value) if isinstance(value, tuple(_KIND_RANK)) else value
    return record


# ---------------------------------------------------------------------------
# Round schedule


@dataclass(frozen=True)
class Layout:
    """Round schedule plus the size parameters derived from machine and input."""

    s: int
    l0: int
    n0: int
    schedule: tuple[tuple, ...]

    @property
    def round_count(self) -> int:
        return len(self.schedule)

    @property
    def constraint_index(self) -> int:
        """Pseudo-index carried by constraint nodes in punisher wiring."""
        return self.round_count


def layout(machine: Machine, x: str) -> Layout:
    """Pure arithmetic: the full round schedule for this machine and input."""
    s = atm.time_bound(machine, x)
    l0 = s + 2
    n0 = 2 * (s + 1) * l0
    schedule: list[tuple] = [("P", i) for i in range(s)]
    # Declaration layers interleave with forced second-player layers; the
    # final declaration layer has no follower, so there is one fewer B layer.
    for i in range(s + 1):
        for j in range(l0):
            schedule.append(("A", i, j))
            if not (i == s and j == l0 - 1):
                schedule.append(("B", i, j))
    return Layout(s, l0, n0, tuple(schedule))


def _layer_labels(ref: tuple, lay: Layout, machine: Machine) -> list[Label]:
    kind = ref[0]
    if kind == "P":
        return [PathNode(ref[1], c) for c in (0, 1)]
    if kind == "A":
        i, j = ref[1], ref[2]
        if j < lay.s:
            return [TapeNode(i, j, z) for z in SYMBOLS]
        if j == lay.s:
            return [HeadNode(i, k) for k in range(lay.s)]
        return [StateNode(i, r) for r in range(machine.state_count)]
    return [BobNode(ref[1], ref[2])]


def _layer_ref_of(label: Label, lay: Layout) -> tuple:
    if isinstance(label, PathNode):
        return ("P", label.round)
    if isinstance(label, TapeNode):
        return ("A", label.round, label.cell)
    if isinstance(label, HeadNode):
        return ("A", label.round, lay.s)
    if isinstance(label, StateNode):
        return ("A", label.round, lay.s + 1)
    if isinstance(label, BobNode):
        return ("B", label.round, label.slot)
    raise ValueError(f"{label!r} is not a scheduled node")


def _constraint_labels(machine: Machine, x: str, lay: Layout, variant: str) -> list[Label]:
    s = lay.s
    rules: list[Label] = []
    bits_in = atm.parse_input(x)
    rules.append(InitRule(StateNode(0, 0)))
    rules.append(InitRule(HeadNode(0, 0)))
    for j in range(s):
        symbol = bits_in[j] if j < len(bits_in) else BLANK
        rules.append(InitRule(TapeNode(0, j, symbol)))
    for i in range(s):
        for c in (0, 1):
            for q in range(machine.state_count):
                for k in range(s):
                    for z in SYMBOLS:
                        nxt, write, move = machine.delta[(c, q, z)]
                        rules.append(TransRule(c, q, k, z, TapeNode(i + 1, k, write)))
                        if 0 <= k + move < s:
                            rules.append(TransRule(c, q, k, z, HeadNode(i + 1, k + move)))
                        rules.append(TransRule(c, q, k, z, StateNode(i + 1, nxt)))
                    # Frame rules: cells away from the head keep their symbol.
                    for k2 in range(s):
                        if k2 == k:
                            continue
                        for a in SYMBOLS:
                            rules.append(TransRule(c, q, k, a, TapeNode(i + 1, k2, a)))
    rules.sort(key=label_sort_key)
    rules.append(AcceptNode() if variant == VARIANT_ACCEPT else RejectNode())
    if len(set(rules)) != len(rules):
        raise NodeKaylesError("constraint label collision")  # pragma: no cover
    return rules


def rule_antecedent(rule: Label) -> tuple[Label, ...]:
    """Premise literals of a constraint rule (empty for initial rules)."""
    if isinstance(rule, InitRule):
        return ()
    if not isinstance(rule, TransRule):
        return ()
    i = rule.target.round - 1
    cell = rule.head
    if isinstance(rule.target, TapeNode) and rule.target.cell != rule.head:
        cell = rule.target.cell
    return (
        PathNode(i, rule.bit),
        StateNode(i, rule.state),
        HeadNode(i, rule.head),
        TapeNode(i, cell, rule.symbol),
    )


# ---------------------------------------------------------------------------
# The graph


@dataclass
class ReductionGraph:
    """Simulation graph plus the id/label bookkeeping."""

    graph: GroundGraph
    layout: Layout
    labels: tuple[Label, ...]
    variant: str
    machine: Machine
    input: str
    id_of: dict = field(repr=False, default_factory=dict)
    round_index: tuple[int, ...] = field(repr=False, default=())
    schedule_masks: tuple[int, ...] = field(repr=False, default=())

    def node_id(self, label: Label) -> int:
        try:
            return self.id_of[label]
        except KeyError:
            raise UnknownNodeError(f"no node labelled {label!r}") from None

    def label_of(self, node_id: int) -> Label:
        if not 0 <= node_id < len(self.labels):
            raise UnknownNodeError(f"node id {node_id} out of range")
        return self.labels[node_id]

    def path_id(self, round_: int, bit: int) -> int:
        return self.node_id(PathNode(round_, bit))

    def scheduled_ids(self, round_: int) -> tuple[int, ...]:
        return tuple(bits(self.schedule_masks[round_]))

    def bob_ids_in_schedule(self) -> list[int]:
        out = []
        for nid, label in enumerate(self.labels):
            if isinstance(label, BobNode):
                out.append(nid)
        return out

    def fresh(self) -> Position:
        return Position.fresh(self.graph)

    def constraint_ids(self) -> list[int]:
        t = self.layout.constraint_index
        return [nid for nid, k in enumerate(self.round_index) if k == t]


def build(machine: Machine, x: str, variant: str) -> ReductionGraph:
    """Construct the simulation graph; identical inputs build identical graphs."""
    if variant not in (VARIANT_ACCEPT, VARIANT_REJECT):
        raise ValueError(f"variant must be 'A' or 'R', got {variant!r}")
    lay = layout(machine, x)
    s, t_rounds = lay.s, lay.round_count
    c_index = lay.constraint_index

    labels: list[Label] = []
    round_index: list[int] = []
    for k, ref in enumerate(lay.schedule):
        for label in _layer_labels(ref, lay, machine):
            labels.append(label)
            round_index.append(k)
    # One punisher per (round, later index); the pseudo-index spares the
    # constraint layer.
    for k in range(t_rounds):
        for t in range(k + 1, c_index + 1):
            labels.append(PunishNode(k, t))
            round_index.append(k)
    constraint = _constraint_labels(machine, x, lay, variant)
    labels.extend(constraint)
    round_index.extend([c_index] * len(constraint))

    n = len(labels)
    id_of = {label: nid for nid, label in enumerate(labels)}
    if len(id_of) != n:
        raise NodeKaylesError("duplicate node label in build")  # pragma: no cover
    masks = [1 << v for v in range(n)]

    def connect(u: int, v: int) -> None:
        masks[u] |= 1 << v
        masks[v] |= 1 << u

    index_masks = [0] * (c_index + 1)
    for nid, k in enumerate(round_index):
        index_masks[k] |= 1 << nid
    suffix = [0] * (c_index + 2)
    for k in range(c_index, -1, -1):
        suffix[k] = suffix[k + 1] | index_masks[k]

    # Rule wiring: premise conflicts and satisfied conclusions kill a rule.
    for rule in constraint:
        if isinstance(rule, (AcceptNode, RejectNode)):
            continue
        rid = id_of[rule]
        for lit in rule_antecedent(rule):
            if isinstance(lit, PathNode):
                connect(id_of[PathNode(lit.round, 1 - lit.bit)], rid)
            else:
                for sibling in _layer_labels(_layer_ref_of(lit, lay), lay, machine):
                    if sibling != lit:
                        connect(id_of[sibling], rid)
        connect(id_of[rule.target], rid)

    # Final-state wiring for the vote node.
    if variant == VARIANT_ACCEPT:
        connect(id_of[StateNode(s, atm.ACCEPT_INDEX)], id_of[AcceptNode()])
    else:
        rej = id_of[RejectNode()]
        for j in range(machine.state_count):
            if j != atm.ACCEPT_INDEX:
                connect(id_of[StateNode(s, j)], rej)

    # Constraint nodes are mutually adjacent.
    cmask = index_masks[c_index]
    for cid in bits(cmask):
        masks[cid] |= cmask

    # Each round's layer plus its punishers is a clique.
    for k in range(t_rounds):
        kmask = index_masks[k]
        for nid in bits(kmask):
            masks[nid] |= kmask

    # Punisher reach: everything scheduled after its round except its target.
    for nid, label in enumerate(labels):
        if not isinstance(label, PunishNode):
            continue
        reach = suffix[label.round + 1] & ~index_masks[label.target]
        masks[nid] |= reach
        bit = 1 << nid
        for u in bits(reach):
            masks[u] |= bit

    graph = GroundGraph(n, tuple(masks))
    sched_masks = tuple(index_masks[k] & _scheduled_only(labels, k, round_index) for k in range(t_rounds))
    return ReductionGraph(
        graph=graph,
        layout=lay,
        labels=tuple(labels),
        variant=variant,
        machine=machine,
        input=x,
        id_of=id_of,
        round_index=tuple(round_index),
        schedule_masks=sched_masks,
    )


def _scheduled_only(labels: list[Label], k: int, round_index: list[int]) -> int:
    mask = 0
    for nid, label in enumerate(labels):
        if round_index[nid] == k and not isinstance(label, PunishNode):
            mask |= 1 << nid
    return mask


def expected_node_counts(machine: Machine, x: str) -> dict[str, int]:
    """Closed-form node counts, for cross-checking a built graph."""
    lay = layout(machine, x)
    s, nq, t_rounds = lay.s, machine.state_count, lay.round_count
    head_rules = 0
    for c in (0, 1):
        for q in range(nq):
            for z in SYMBOLS:
                _, _, move = machine.delta[(c, q, z)]
                head_rules += sum(1 for k in range(s) if 0 <= k + move < s)
    head_rules *= s  # one copy per simulated step
    per_step = 2 * nq * s * 3  # (branch, state, head, read) combinations
    counts = {
        "path": 2 * s,
        "alice": (s + 1) * (3 * s + s + nq),
        "bob": (s + 1) * (s + 2) - 1,
        "punisher": t_rounds * (t_rounds + 1) // 2,
        "constraint": (2 + s) + s * (per_step * 2 + 2 * nq * s * (s - 1) * 3) + head_rules + 1,
    }
    counts["total"] = sum(counts.values())
    return counts


def sidecar_json(rg: ReductionGraph) -> str:
    """Label and layout sidecar accompanying the plain graph JSON."""
    import json

    payload = {
        "variant": rg.variant,
        "labels": {str(nid): label_record(label) for nid, label in enumerate(rg.labels)},
        "layout": {
            "s": rg.layout.s,
            "l0": rg.layout.l0,
            "n0": rg.layout.n0,
            "T": rg.layout.round_count,
            "schedule": [list(ref) for ref in rg.layout.schedule],
        },
    }
    return json.dumps(payload, sort_keys=True)


_DOT_COLORS = {
    PathNode: "lightblue",
    TapeNode: "palegreen",
    HeadNode: "palegreen",
    StateNode: "palegreen",
    BobNode: "khaki",
    PunishNode: "lightsalmon",
    InitRule: "plum",
    TransRule: "plum",
    AcceptNode: "orchid",
    RejectNode: "orchid",
}


def dot_fillcolors(rg: ReductionGraph) -> dict[int, str]:
    return {nid: _DOT_COLORS[type(label)] for nid, label in enumerate(rg.labels)}


# ---------------------------------------------------------------------------
# Legitimacy


def is_k_legitimate(position: Position, rg: ReductionGraph, k: int) -> bool:
    """All scheduled layers before round ``k`` dead, all after alive.

    Layer ``k`` itself is unconstrained; punishers and constraint nodes are
    never constrained.
    """
    alive = position.alive
    before = 0
    for j in range(min(k, rg.layout.round_count)):
        before |= rg.schedule_masks[j]
    after = 0
    for j in range(k + 1, rg.layout.round_count):
        after |= rg.schedule_masks[j]
    return alive & before == 0 and alive & after == after


def is_schedule_legitimate(moves: Sequence[int], rg: ReductionGraph) -> bool:
    """True when the i-th move is a scheduled node of layer i."""
    if len(moves) > rg.layout.round_count:
        return False
    return all(
        0 <= v < rg.graph.node_count and rg.schedule_masks[i] >> v & 1
        for i, v in enumerate(moves)
    )


def legitimate_prefix(
    rg: ReductionGraph,
    k: int,
    choose: Callable[[ReductionGraph, int, Position], int] | None = None,
) -> tuple[Position, list[int]]:
    """Play ``k`` on-schedule rounds (lowest available id unless told otherwise)."""
    position = rg.fresh()
    moves: list[int] = []
    for round_ in range(k):
        if choose is None:
            v = min(bits(rg.schedule_masks[round_] & position.alive))
        else:
            v = choose(rg, round_, position)
        moves.append(v)
        position = play(position, [v])
    return position, moves


# ---------------------------------------------------------------------------
# Move-sequence utilities


def merge(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Strict interleaving a0, b0, a1, b1, ...; ``b`` may be one shorter."""
    if len(b) not in (len(a), len(a) - 1):
        raise LengthMismatchError(f"cannot interleave lengths {len(a)} and {len(b)}")
    out: list[int] = []
    for i, av in enumerate(a):
        out.append(av)
        if i < len(b):
            out.append(b[i])
    return out


def aseq(moves: Sequence[int]) -> list[int]:
    """Even-index subsequence: the first mover's moves of a game record."""
    return list(moves[0::2])


def conf_of(rg: ReductionGraph, move_ids: Sequence[int], round_: int | None = None) -> Config:
    """Assemble one round's declarations into a configuration."""
    s = rg.layout.s
    tape: dict[int, int] = {}
    head = state = None
    rounds = set()
    for nid in move_ids:
        label = rg.label_of(nid)
        if isinstance(label, TapeNode):
            if label.cell in tape:
                raise MalformedRoundError(f"duplicate declaration for cell {label.cell}")
            tape[label.cell] = label.symbol
            rounds.add(label.round)
        elif isinstance(label, HeadNode):
            if head is not None:
                raise MalformedRoundError("duplicate head declaration")
            head = label.pos
            rounds.add(label.round)
        elif isinstance(label, StateNode):
            if state is not None:
                raise MalformedRoundError("duplicate state declaration")
            state = label.state
            rounds.add(label.round)
        else:
            raise MalformedRoundError(f"{label!r} is not a declaration node")
    if sorted(tape) != list(range(s)) or head is None or state is None:
        raise MalformedRoundError("round is missing declarations")
    if len(rounds) != 1 or (round_ is not None and rounds != {round_}):
        raise MalformedRoundError(f"declarations span rounds {sorted(rounds)}")
    return Config(state, head, tuple(tape[j] for j in range(s)))


# ---------------------------------------------------------------------------
# Computation predicates


def a_moves_legitimate(rg: ReductionGraph, a_ids: Sequence[int]) -> bool:
    """The k-th declaration comes from declaration layer k of the schedule."""
    lay = rg.layout
    for k, nid in enumerate(a_ids):
        q, r = divmod(k, lay.l0)
        if q > lay.s:
            return False
        round_ = lay.s + 2 * (q * lay.l0 + r)
        if not (0 <= nid < rg.graph.node_count and rg.schedule_masks[round_] >> nid & 1):
            return False
    return True


def _expected_declaration(cfg: Config, q: int, r: int, s: int) -> Label:
    if r < s:
        return TapeNode(q, r, cfg.tape[r])
    if r == s:
        return HeadNode(q, cfg.head)
    return StateNode(q, cfg.state)


def computation_predicates(
    rg: ReductionGraph,
    a_ids: Sequence[int],
    path_bits: Sequence[int],
    mode: str,
) -> bool:
    """Consistency of declarations with the machine run along ``path_bits``.

    ``partial`` accepts any consistent prefix; ``full`` requires the entire
    declaration list; ``accepting``/``rejecting`` add the final-state test.
    """
    if mode not in ("partial", "full", "accepting", "rejecting"):
        raise ValueError(f"unknown mode {mode!r}")
    machine, x, lay = rg.machine, rg.input, rg.layout
    s, l0 = lay.s, lay.l0
    if len(path_bits) != s:
        raise ValueError(f"need a full path of {s} bits")
    if not a_moves_legitimate(rg, a_ids):
        return False
    if mode != "partial" and len(a_ids) != (s + 1) * l0:
        return False
    cfg = atm.initial_config(machine, x)
    for k, nid in enumerate(a_ids):
        q, r = divmod(k, l0)
        if r == 0 and q > 0:
            cfg = atm.step(machine, path_bits[q - 1], cfg)
        if rg.label_of(nid) != _expected_declaration(cfg, q, r, s):
            return False
    if mode == "accepting":
        return rg.label_of(a_ids[-1]) == StateNode(s, atm.ACCEPT_INDEX)
    if mode == "rejecting":
        return rg.label_of(a_ids[-1]) != StateNode(s, atm.ACCEPT_INDEX)
    return True


def declarations_for_run(rg: ReductionGraph, path_bits: Sequence[int]) -> list[int]:
    """The on-schedule declaration ids spelling out the true run."""
    machine, x, lay = rg.machine, rg.input, rg.layout
    configs = atm.run(machine, x, path_bits)
    out: list[int] = []
    for q, cfg in enumerate(configs):
        for r in range(lay.l0):
            out.append(rg.node_id(_expected_declaration(cfg, q, r, lay.s)))
    return out


def apply_path(rg: ReductionGraph, path_bits: Sequence[int]) -> Position:
    """Position after playing the path layers according to ``path_bits``."""
    moves = [rg.path_id(i, bit) for i, bit in enumerate(path_bits)]
    return play(rg.fresh(), moves)


# ---------------------------------------------------------------------------
# Witness extraction


@dataclass
class ReductionPair:
    """Both variants of the simulation graph with shared search tables."""

    machine: Machine
    input: str
    accept_graph: ReductionGraph
    reject_graph: ReductionGraph
    accept_table: TranspositionTable
    reject_table: TranspositionTable

    @classmethod
    def build(
        cls, machine: Machine, x: str, *, time_budget_ms: float | None = None
    ) -> "ReductionPair":
        ga = build(machine, x, VARIANT_ACCEPT)
        gr = build(machine, x, VARIANT_REJECT)
        ta = TranspositionTable(ga.graph, node_budget=None, time_budget_ms=time_budget_ms)
        tr = TranspositionTable(gr.graph, node_budget=None, time_budget_ms=time_budget_ms)
        return cls(machine, x, ga, gr, ta, tr)

    def graph_for(self, variant: str) -> ReductionGraph:
        return self.accept_graph if variant == VARIANT_ACCEPT else self.reject_graph

    def table_for(self, variant: str) -> TranspositionTable:
        return self.accept_table if variant == VARIANT_ACCEPT else self.reject_table


@dataclass
class WitnessResult:
    """Strategy-extracted play certifying a run of the simulated machine."""

    variant: str
    adversary_moves: list[int]
    play: list[int]
    path_phase: list[int]
    path_bits: list[int]
    comp_moves: list[int]
    configs: list[Config]


def _decode_path_bits(rg: ReductionGraph, path_moves: Sequence[int]) -> list[int]:
    out = []
    for i, nid in enumerate(path_moves):
        label = rg.label_of(nid)
        if not isinstance(label, PathNode) or label.round != i:
            raise MalformedRoundError(f"move {i} is {label!r}, expected a round-{i} path node")
        out.append(label.bit)
    return out


def witness(
    machine: Machine,
    x: str,
    half_path: Sequence[int],
    variant: str,
    context: ReductionPair | None = None,
) -> WitnessResult:
    """Drive the strategy functions against a half-path of adversary bits.

    Variant ``A``: the adversary supplies the odd path rounds plus the forced
    second-player nodes, and the engine plays first on the accept graph; the
    whole game comes out of one first-player line.

    Variant ``R``: the adversary supplies the even path rounds; the engine
    answers the path phase as second player on the accept graph (where its
    zero-value options force rejection), then switches to the reject graph and
    plays out the declarations as first player against the forced nodes.
    """
    ctx = context or ReductionPair.build(machine, x)
    lay = ctx.accept_graph.layout
    s, l0 = lay.s, lay.l0
    if len(half_path) != s // 2:
        raise ValueError(f"half path must have {s // 2} bits")

    if variant == VARIANT_ACCEPT:
        rg = ctx.accept_graph
        adversary = [rg.path_id(2 * k + 1, bit) for k, bit in enumerate(half_path)]
        adversary += rg.bob_ids_in_schedule()
        line = first_player_line(adversary, rg.fresh(), ctx.accept_table)
        path_phase = line[:s]
        path_bits_full = _decode_path_bits(rg, path_phase)
        comp_moves = aseq(line[s:])
    elif variant == VARIANT_REJECT:
        ga, rg = ctx.accept_graph, ctx.reject_graph
        adversary = [ga.path_id(2 * k, bit) for k, bit in enumerate(half_path)]
        path_line = second_player_line(adversary, ga.fresh(), ctx.accept_table)
        path_bits_full = _decode_path_bits(ga, path_line)
        path_phase = [rg.path_id(i, bit) for i, bit in enumerate(path_bits_full)]
        position = play(rg.fresh(), path_phase)
        comp_line = first_player_line(rg.bob_ids_in_schedule(), position, ctx.reject_table)
        line = path_phase + comp_line
        comp_moves = aseq(comp_line)
    else:
        raise ValueError(f"variant must be 'A' or 'R', got {variant!r}")

    graph_v = ctx.graph_for(variant)
    configs = [
        conf_of(graph_v, comp_moves[i * l0 : (i + 1) * l0], round_=i) for i in range(s + 1)
    ]
    return WitnessResult(
        variant=variant,
        adversary_moves=list(adversary),
        play=line,
        path_phase=path_phase,
        path_bits=path_bits_full,
        comp_moves=comp_moves,
        configs=configs,
    )
