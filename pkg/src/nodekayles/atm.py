"""Binary-branching machines in path-normal form.

A machine run never branches on its own: all nondeterminism is a bit string
fixed up front, consumed one bit per step.  Acceptance of an input is the
alternating value of those bits — the first player owns even bit indices
(she moves first), the second player the odd ones.

The step budget ``s`` for an input doubles as the tape length, and every run
takes exactly ``s`` steps.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Mapping, Sequence

from .errors import (
    HeadOutOfRangeError,
    InputTooLongError,
    MachineFormatError,
    OddTimeBoundError,
)

BLANK = 2
ACCEPT_INDEX = 1
SYMBOLS = (0, 1, 2)
BRANCHES = (0, 1)
MOVES = (-1, 0, 1)

ACCEPTING = "accepting"
REJECTING = "rejecting"


@dataclass(frozen=True)
class Machine:
    """Validated machine: states, step polynomial, and a total transition map.

    ``delta[(branch, state, read)] = (next_state, write, move)``.
    """

    states: tuple[str, ...]
    time_poly: tuple[int, ...]
    delta: Mapping[tuple[int, int, int], tuple[int, int, int]]
    name: str = ""

    @property
    def state_count(self) -> int:
        return len(self.states)


@dataclass(frozen=True)
class Config:
    """Machine configuration: state index, head position, tape contents."""

    state: int
    head: int
    tape: tuple[int, ...]

    def flatten(self) -> tuple[int, ...]:
        """Tuple form ⟨state, head, tape...⟩ of length tape+2."""
        return (self.state, self.head) + self.tape


def load_machine(data: dict, name: str = "") -> Machine:
    """Validate a machine description in the JSON wire format."""
    states = data.get("states")
    if not isinstance(states, list) or not all(isinstance(q, str) for q in states):
        raise MachineFormatError('"states" must be a list of state names')
    if len(states) < 2:
        raise MachineFormatError("need at least a start and an accept state")
    index = {q: i for i, q in enumerate(states)}
    if len(index) != len(states):
        raise MachineFormatError("duplicate state names")
    accept = data.get("accept")
    if index.get(accept) != ACCEPT_INDEX:
        raise MachineFormatError(
            f'"accept" must name state #{ACCEPT_INDEX} ({states[ACCEPT_INDEX]!r}), got {accept!r}'
        )
    poly = data.get("time_poly")
    if not isinstance(poly, list) or not poly or not all(isinstance(c, int) for c in poly):
        raise MachineFormatError('"time_poly" must be a non-empty list of integer coefficients')
    delta: dict[tuple[int, int, int], tuple[int, int, int]] = {}
    for i, rule in enumerate(data.get("delta", [])):
        try:
            key = (int(rule["branch"]), index[rule["state"]], int(rule["read"]))
            value = (index[rule["next"]], int(rule["write"]), int(rule["move"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise MachineFormatError(f"transition #{i} is malformed: {rule!r}") from exc
        if key[0] not in BRANCHES or key[2] not in SYMBOLS:
            raise MachineFormatError(f"transition #{i} has branch/symbol out of range")
        if value[1] not in SYMBOLS or value[2] not in MOVES:
            raise MachineFormatError(f"transition #{i} has write/move out of range")
        if key in delta:
            raise MachineFormatError(f"transition #{i} duplicates {key}")
        delta[key] = value
    for branch in BRANCHES:
        for state in range(len(states)):
            for read in SYMBOLS:
                if (branch, state, read) not in delta:
                    raise MachineFormatError(
                        f"transition table is not total: missing "
                        f"(branch={branch}, state={states[state]!r}, read={read})"
                    )
    return Machine(tuple(states), tuple(poly), delta, name=name or data.get("name", ""))


def machine_to_dict(machine: Machine) -> dict:
    rules = [
        {
            "branch": branch,
            "state": machine.states[state],
            "read": read,
            "next": machine.states[nxt],
            "write": write,
            "move": move,
        }
        for (branch, state, read), (nxt, write, move) in sorted(machine.delta.items())
    ]
    out = {
        "states": list(machine.states),
        "accept": machine.states[ACCEPT_INDEX],
        "time_poly": list(machine.time_poly),
        "delta": rules,
    }
    if machine.name:
        out["name"] = machine.name
    return out


def load_machine_json(text: str, name: str = "") -> Machine:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MachineFormatError(f"malformed machine JSON: {exc}") from exc
    return load_machine(data, name=name)


FIXTURE_NAMES = ("m_yes", "m_no", "m_bit0", "m_bit1", "m_flip")


def load_fixture(name: str) -> Machine:
    """Load one of the packaged machines (``m_yes``, ``m_no``, ...)."""
    path = resources.files("nodekayles.fixtures").joinpath(f"{name}.json")
    return load_machine_json(path.read_text(), name=name)


def poly_value(coefficients: Sequence[int], n: int) -> int:
    return sum(c * n**i for i, c in enumerate(coefficients))


def time_bound(machine: Machine, x: str) -> int:
    """Step budget for input ``x``; must be even and at least 2."""
    s = poly_value(machine.time_poly, len(x))
    if s < 2 or s % 2 != 0:
        raise OddTimeBoundError(f"step budget {s} for input of length {len(x)} (need even ≥ 2)")
    return s


def parse_input(x: str) -> tuple[int, ...]:
    if not all(ch in "01" for ch in x):
        raise MachineFormatError(f"input must be a 0/1 string, got {x!r}")
    return tuple(int(ch) for ch in x)


def initial_config(machine: Machine, x: str) -> Config:
    """Start configuration: state 0, head 0, input bits then blanks."""
    s = time_bound(machine, x)
    bits_in = parse_input(x)
    if len(bits_in) > s:
        raise InputTooLongError(f"input of length {len(bits_in)} exceeds tape length {s}")
    tape = bits_in + (BLANK,) * (s - len(bits_in))
    return Config(0, 0, tape)


def step(machine: Machine, branch: int, config: Config) -> Config:
    """One transition along the given path bit."""
    nxt, write, move = machine.delta[(branch, config.state, config.tape[config.head])]
    head = config.head + move
    if not 0 <= head < len(config.tape):
        raise HeadOutOfRangeError(f"head moved to {head} on a tape of length {len(config.tape)}")
    tape = list(config.tape)
    tape[config.head] = write
    return Config(nxt, head, tuple(tape))


def run(machine: Machine, x: str, path_bits: Sequence[int]) -> list[Config]:
    """All s+1 configurations along the given path."""
    s = time_bound(machine, x)
    if len(path_bits) != s:
        raise MachineFormatError(f"path has {len(path_bits)} bits, need {s}")
    configs = [initial_config(machine, x)]
    for bit in path_bits:
        configs.append(step(machine, bit, configs[-1]))
    return configs


def classify_run(machine: Machine, x: str, path_bits: Sequence[int]) -> str:
    """``accepting`` iff the final configuration is in the accept state."""
    final = run(machine, x, path_bits)[-1]
    return ACCEPTING if final.state == ACCEPT_INDEX else REJECTING


def accepts(machine: Machine, x: str) -> bool:
    """Alternating value over path bits, brute-forced over all 2^s paths.

    The first player (existential) owns even bit indices, the second
    (universal) the odd ones.
    """
    s = time_bound(machine, x)
    outcomes = []
    for code in range(1 << s):
        # Bit i of the path is chosen at step i; code runs lexicographically
        # with bit 0 as the most significant digit.
        path = [(code >> (s - 1 - i)) & 1 for i in range(s)]
        outcomes.append(classify_run(machine, x, path) == ACCEPTING)
    for level in range(s - 1, -1, -1):
        fold = any if level % 2 == 0 else all
        outcomes = [fold(pair) for pair in zip(outcomes[0::2], outcomes[1::2])]
    return outcomes[0]
