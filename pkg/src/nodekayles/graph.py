"""Undirected graphs and Node Kayles positions.

Graphs follow the usual coding convention for this game: every declared node
is adjacent to itself, so a move at ``v`` deletes exactly the closed
neighborhood ``N[v]``.  Self-loops are implicit in storage (node membership)
and only materialize in serialization when explicitly requested.

A :class:`Position` is an induced subgraph of an immutable
:class:`GroundGraph`, represented as a bitmask of surviving nodes.  This keeps
every reachable game state hashable and cheap to copy.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import EmptySequenceError, GraphFormatError, MoveNotAvailableError

ALICE = "Alice"
BOB = "Bob"


@dataclass(frozen=True)
class GroundGraph:
    """Immutable undirected graph over nodes ``0..node_count-1``.

    ``closed_neighborhoods[v]`` is a bitmask containing ``v`` itself plus all
    its neighbors.
    """

    node_count: int
    closed_neighborhoods: tuple[int, ...]

    @classmethod
    def from_edges(cls, node_count: int, edges: Iterable[tuple[int, int]]) -> "GroundGraph":
        masks = [1 << v for v in range(node_count)]
        for u, v in edges:
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise GraphFormatError(f"node id out of range in edge ({u}, {v})")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(node_count, tuple(masks))

    @property
    def full_mask(self) -> int:
        return (1 << self.node_count) - 1

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.closed_neighborhoods[u] >> v & 1)

    def neighbors(self, v: int) -> set[int]:
        """Closed neighborhood of ``v`` as a set (includes ``v``)."""
        return set(bits(self.closed_neighborhoods[v]))

    def edges(self) -> list[tuple[int, int]]:
        """Non-loop edges, each listed once with ``u < v``, sorted."""
        out = []
        for u in range(self.node_count):
            mask = self.closed_neighborhoods[u] >> (u + 1)
            v = u + 1
            while mask:
                if mask & 1:
                    out.append((u, v))
                mask >>= 1
                v += 1
        return out


@dataclass(frozen=True)
class Position:
    """Surviving-node set within a fixed ground graph."""

    ground: GroundGraph
    alive: int

    @classmethod
    def fresh(cls, ground: GroundGraph) -> "Position":
        return cls(ground, ground.full_mask)

    def __post_init__(self) -> None:
        if self.alive & ~self.ground.full_mask:
            raise GraphFormatError("alive set mentions undeclared nodes")

    @property
    def is_empty(self) -> bool:
        return self.alive == 0

    def node_count_alive(self) -> int:
        return self.alive.bit_count()


def bits(mask: int) -> Iterator[int]:
    """Yield set-bit indices of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def nodes(position: Position) -> set[int]:
    """Alive nodes of the position."""
    return set(bits(position.alive))


def option(position: Position, v: int) -> Position:
    """Play ``v``: remove its closed neighborhood from the position."""
    if v < 0 or v >= position.ground.node_count or not position.alive >> v & 1:
        raise MoveNotAvailableError(f"node {v} is not available")
    return Position(position.ground, position.alive & ~position.ground.closed_neighborhoods[v])


def play(position: Position, moves: Sequence[int]) -> Position:
    """Fold ``moves`` over the position; moves naming dead nodes are no-ops."""
    ground = position.ground
    alive = position.alive
    for v in moves:
        if 0 <= v < ground.node_count and alive >> v & 1:
            alive &= ~ground.closed_neighborhoods[v]
    return Position(ground, alive)


def is_winning_sequence(moves: Sequence[int], position: Position) -> bool:
    """True when the last move empties a previously nonempty position."""
    if not moves:
        raise EmptySequenceError("a winning sequence has at least one move")
    before = play(position, moves[:-1])
    return not before.is_empty and play(before, moves[-1:]).is_empty


def winner(moves: Sequence[int]) -> str:
    """Winner of a completed game record: Alice iff the length is odd."""
    return ALICE if len(moves) % 2 == 1 else BOB


def closed_neighborhood(position: Position, v: int) -> set[int]:
    """Alive part of ``N[v]``: exactly the nodes a move at ``v`` removes."""
    return set(bits(position.alive & position.ground.closed_neighborhoods[v]))


# ---------------------------------------------------------------------------
# Validation of raw adjacency data


def validate_graph(
    pairs: Iterable[tuple[int, int]],
    node_count: int | None = None,
    *,
    complete_symmetry: bool = True,
) -> GroundGraph:
    """Build a :class:`GroundGraph` from raw pairs, or raise a diagnosis.

    With ``complete_symmetry`` (the file formats list each edge once) the
    reverse direction of every pair is added; otherwise a missing reverse
    pair is reported as an asymmetric edge.  Self-loops are implied for every
    declared node.
    """
    pair_list = [(int(u), int(v)) for u, v in pairs]
    mentioned = [x for uv in pair_list for x in uv]
    if node_count is None:
        node_count = max(mentioned) + 1 if mentioned else 0
    for u, v in pair_list:
        if not (0 <= u < node_count and 0 <= v < node_count):
            raise GraphFormatError(
                f"node id out of range: edge ({u}, {v}) with {node_count} declared nodes"
            )
    if not complete_symmetry:
        seen = set(pair_list)
        for u, v in pair_list:
            if u != v and (v, u) not in seen:
                raise GraphFormatError(f"asymmetric edge: ({u}, {v}) present, ({v}, {u}) missing")
    return GroundGraph.from_edges(node_count, pair_list)


def is_symmetric_relation(pairs: Iterable[tuple[int, int]]) -> bool:
    pair_set = {(int(u), int(v)) for u, v in pairs}
    return all((v, u) in pair_set for u, v in pair_set)


# ---------------------------------------------------------------------------
# Serialization

_JSON_KEYS = ("nodes", "edges")


def parse_graph_json(text: str) -> GroundGraph:
    """Parse ``{"nodes": n, "edges": [[u, v], ...]}``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"malformed graph JSON: {exc}") from exc
    if not isinstance(data, dict) or "nodes" not in data:
        raise GraphFormatError('graph JSON must be an object with a "nodes" field')
    n = data["nodes"]
    if not isinstance(n, int) or n < 0:
        raise GraphFormatError('"nodes" must be a non-negative integer')
    edges = data.get("edges", [])
    pairs = []
    for i, edge in enumerate(edges):
        if not (isinstance(edge, (list, tuple)) and len(edge) == 2):
            raise GraphFormatError(f"edge #{i} is not a pair: {edge!r}")
        pairs.append((edge[0], edge[1]))
    return validate_graph(pairs, n, complete_symmetry=True)


def dump_graph_json(graph: GroundGraph) -> str:
    """Canonical JSON: sorted non-loop edge list, loops implicit."""
    return json.dumps({"nodes": graph.node_count, "edges": [list(e) for e in graph.edges()]})


def parse_graph_text(text: str) -> GroundGraph:
    """Parse the line format: first line ``n``, then one ``u v`` pair per line."""
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if not lines:
        return GroundGraph.from_edges(0, [])
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise GraphFormatError(f"line 1: expected node count, got {lines[0]!r}") from exc
    pairs = []
    for lineno, line in enumerate(lines[1:], start=2):
        fields = line.split()
        if len(fields) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            pairs.append((int(fields[0]), int(fields[1])))
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: non-integer field in {line!r}") from exc
    return validate_graph(pairs, n, complete_symmetry=True)


def dump_graph_text(graph: GroundGraph) -> str:
    lines = [str(graph.node_count)]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def to_dot(
    graph: GroundGraph,
    *,
    alive: int | None = None,
    fillcolors: dict[int, str] | None = None,
    name: str = "kayles",
) -> str:
    """DOT export: undirected, loops suppressed, optional per-node fill colors."""
    out = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(graph.node_count):
        attrs = []
        if fillcolors and v in fillcolors:
            attrs.append(f'style=filled fillcolor="{fillcolors[v]}"')
        if alive is not None and not alive >> v & 1:
            attrs.append('color="gray" fontcolor="gray"')
        attr_text = f" [{' '.join(attrs)}]" if attrs else ""
        out.append(f"  {v}{attr_text};")
    for u, v in graph.edges():
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"
