"""Command-line front end: queries, terminal play, graph emission, suites."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import atm, reduction, verify
from .engine import (
    DEFAULT_SG_NODE_BUDGET,
    KERNEL_BACKEND,
    TranspositionTable,
    sentinel,
    sg,
    strategy_move,
)
from .errors import BudgetExceededError, NodeKaylesError
from .graph import (
    ALICE,
    BOB,
    Position,
    closed_neighborhood,
    dump_graph_json,
    nodes,
    option,
    parse_graph_json,
    parse_graph_text,
    to_dot,
    winner,
)

_SUITES = ("small-graphs", "strategy", "legitimacy", "complement", "end-to-end")


def _load_graph(path: str):
    text = Path(path).read_text()
    if path.endswith(".json"):
        return parse_graph_json(text)
    return parse_graph_text(text)


def _load_machine(path: str) -> atm.Machine:
    return atm.load_machine_json(Path(path).read_text(), name=Path(path).stem)


def _budgets(args) -> dict:
    node_budget = args.budget_nodes
    if node_budget is None:
        env = os.environ.get("NK_BUDGET_NODES")
        node_budget = int(env) if env else DEFAULT_SG_NODE_BUDGET
    return {"node_budget": node_budget, "time_budget_ms": args.budget_ms}


def _table(ground, args) -> TranspositionTable:
    budgets = _budgets(args)
    return TranspositionTable(
        ground, node_budget=budgets["node_budget"], time_budget_ms=budgets["time_budget_ms"]
    )


def cmd_sg(args) -> int:
    ground = _load_graph(args.graph)
    position = Position.fresh(ground)
    table = _table(ground, args)
    if args.win_only:
        wins = table.win(position, time_budget_ms=args.budget_ms)
        if args.json:
            print(json.dumps({"first_player_wins": wins}))
        else:
            print("win" if wins else "loss")
        return 0
    value = table.grundy(position)
    if args.json:
        print(json.dumps({"sg": value}))
    else:
        print(value)
    return 0


def cmd_win(args) -> int:
    ground = _load_graph(args.graph)
    wins = _table(ground, args).win(Position.fresh(ground), time_budget_ms=args.budget_ms)
    if args.json:
        print(json.dumps({"first_player_wins": wins}))
    else:
        print("win" if wins else "loss")
    return 0


def cmd_tau(args) -> int:
    ground = _load_graph(args.graph)
    position = Position.fresh(ground)
    move = strategy_move(position, _table(ground, args))
    if args.json:
        print(json.dumps({"move": move, "sentinel": move == sentinel(position)}))
    elif move == sentinel(position):
        print(f"pass ({move})")
    else:
        print(move)
    return 0


def cmd_reduce(args) -> int:
    machine = _load_machine(args.machine)
    rg = reduction.build(machine, args.input, args.variant)
    graph_json = dump_graph_json(rg.graph)
    out = Path(args.output) if args.output else None
    if out is None:
        print(graph_json)
    else:
        out.write_text(graph_json + "\n")
        sidecar = out.with_suffix(out.suffix + ".sidecar.json")
        sidecar.write_text(reduction.sidecar_json(rg) + "\n")
    if args.dot:
        Path(args.dot).write_text(
            to_dot(rg.graph, fillcolors=reduction.dot_fillcolors(rg))
        )
    if args.json and out is not None:
        print(
            json.dumps(
                {
                    "nodes": rg.graph.node_count,
                    "variant": rg.variant,
                    "rounds": rg.layout.round_count,
                    "output": str(out),
                }
            )
        )
    return 0


def cmd_verify(args) -> int:
    machine = _load_machine(args.machine) if args.machine else None
    report = verify.run_suite(
        args.suite,
        machine=machine,
        machine_input=args.input or "",
        time_budget_ms=args.budget_ms,
    )
    if args.json:
        print(json.dumps(report.to_dict()))
    else:
        status = "pass" if report.passed else "FAIL"
        print(f"{report.suite}: {status} ({report.cases} cases, {report.wall_seconds:.1f}s)")
        for failure in report.failures[:10]:
            print(f"  failure: {failure}")
        for item in report.inconclusive:
            print(f"  inconclusive: {item}")
    return 0 if report.passed else 1


def cmd_play(args) -> int:
    ground = _load_graph(args.graph)
    position = Position.fresh(ground)
    table = _table(ground, args)
    budgets = _budgets(args)
    show_hints = position.node_count_alive() <= (budgets["node_budget"] or 0)

    if args.role:
        human = ALICE if args.role == "alice" else BOB
    else:
        # The engine takes the favored seat: first player iff that seat wins.
        human = BOB if table.win(position, time_budget_ms=args.budget_ms) else ALICE
    print(f"You play {human}; engine backend: {KERNEL_BACKEND}")
    history: list[int] = []
    while True:
        if position.is_empty:
            who = winner(history)
            print(f"Game over: {who} wins ({len(history)} moves).")
            return 0
        mover = ALICE if len(history) % 2 == 0 else BOB
        if mover == human:
            if show_hints:
                hints = {
                    v: table.grundy(option(position, v), node_budget=None)
                    for v in sorted(nodes(position))
                }
                print(f"alive: {hints}")
            else:
                print(f"alive: {sorted(nodes(position))}")
            line = input(f"{human} move> ").strip()
            if line in ("q", "quit", "exit"):
                print("Resigned.")
                return 0
            try:
                move = int(line)
            except ValueError:
                print("Enter a node id (or q to quit).")
                continue
            if move not in nodes(position):
                print(f"Node {move} is not available.")
                continue
        else:
            try:
                move = strategy_move(position, table, time_budget_ms=args.budget_ms)
            except BudgetExceededError:
                move = min(nodes(position))
                print("(engine move unverified: budget exhausted)")
            if move == sentinel(position):
                move = min(nodes(position))  # losing anyway; keep the game moving
            print(f"engine plays {move} (removes {sorted(closed_neighborhood(position, move))})")
        history.append(move)
        position = option(position, move)


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(
        node_budget=_budgets(args)["node_budget"],
        time_budget_ms=args.budget_ms,
        journal_path=args.journal,
        static_dir=args.ui,
    )
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nk", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph=False, machine=False):
        if graph:
            p.add_argument("-g", "--graph", required=True, help="graph file (.json or text)")
        if machine:
            p.add_argument("-m", "--machine", required=machine == "required", help="machine JSON file")
            p.add_argument("-x", "--input", default="", help="input bit string")
        p.add_argument("--budget-nodes", type=int, default=None)
        p.add_argument("--budget-ms", type=float, default=None)
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p_sg = sub.add_parser("sg", help="Grundy value of a graph")
    common(p_sg, graph=True)
    p_sg.add_argument("--win-only", action="store_true", help="print win/loss instead")
    p_sg.set_defaults(func=cmd_sg)

    p_win = sub.add_parser("win", help="first-player win/loss")
    common(p_win, graph=True)
    p_win.set_defaults(func=cmd_win)

    p_tau = sub.add_parser("tau", help="the engine's preferred move")
    common(p_tau, graph=True)
    p_tau.set_defaults(func=cmd_tau)

    p_play = sub.add_parser("play", help="play against the engine in the terminal")
    common(p_play, graph=True)
    p_play.add_argument("--role", choices=("alice", "bob"), help="seat to take (default: the unfavored one)")
    p_play.set_defaults(func=cmd_play)

    p_red = sub.add_parser("reduce", help="emit the simulation graph for a machine/input")
    common(p_red, machine="required")
    p_red.add_argument("--variant", choices=("A", "R"), default="A")
    p_red.add_argument("-o", "--output", help="write graph JSON here (plus .sidecar.json)")
    p_red.add_argument("--dot", help="also write a colored DOT rendering")
    p_red.set_defaults(func=cmd_reduce)

    p_ver = sub.add_parser("verify", help="run a property suite")
    common(p_ver, machine=True)
    p_ver.add_argument("--suite", choices=_SUITES, required=True)
    p_ver.set_defaults(func=cmd_verify)

    p_srv = sub.add_parser("serve", help="start the HTTP game service")
    common(p_srv)
    p_srv.add_argument("--host", default="127.0.0.1")
    p_srv.add_argument("--port", type=int, default=8000)
    p_srv.add_argument("--journal", help="append-only JSON-lines move journal")
    p_srv.add_argument("--ui", help="static directory to serve at /")
    p_srv.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 1
    except NodeKaylesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (KeyboardInterrupt, EOFError):
        print()
        return 130


if __name__ == "__main__":
    sys.exit(main())
