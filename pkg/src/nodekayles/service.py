"""Session-scoped HTTP JSON API for playing against the engine.

Sessions live in memory behind per-session locks; an optional append-only
journal records every move for audit or crash recovery.  All game math stays
server-side: the browser client only renders state snapshots.
"""

from __future__ import annotations

import json
import secrets
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import atm, reduction
from .engine import TranspositionTable, sentinel, strategy_move
from .errors import BudgetExceededError, NodeKaylesError
from .graph import (
    ALICE,
    BOB,
    GroundGraph,
    Position,
    bits,
    option,
    validate_graph,
    winner,
)

API_PREFIX = "/api/v1"
DEFAULT_NODE_BUDGET = 64


class ApiError(Exception):
    def __init__(self, status: int, code: str, detail: str):
        super().__init__(detail)
        self.status = status
        self.code = code
        self.detail = detail


@dataclass
class GameSession:
    id: str
    ground: GroundGraph
    position: Position
    human_role: str
    table: TranspositionTable
    time_budget_ms: float | None
    node_budget: int
    history: list[int] = field(default_factory=list)
    moves: list[dict] = field(default_factory=list)
    reduction_meta: dict | None = None
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def turn(self) -> str | None:
        if self.position.is_empty:
            return None
        return ALICE if len(self.history) % 2 == 0 else BOB

    @property
    def engine_role(self) -> str:
        return BOB if self.human_role == ALICE else ALICE

    def record(self, node: int, by: str, unverified: bool = False) -> None:
        self.history.append(node)
        entry = {"node": node, "by": by}
        if unverified:
            entry["unverified"] = True
        self.moves.append(entry)
        self.position = option(self.position, node)

    def snapshot(self) -> dict:
        state = {
            "id": self.id,
            "graph": {
                "nodes": self.ground.node_count,
                "edges": [list(e) for e in self.ground.edges()],
            },
            "alive": sorted(bits(self.position.alive)),
            "history": list(self.history),
            "moves": list(self.moves),
            "turn": self.turn,
            "human_role": self.human_role,
            "winner": winner(self.history) if self.position.is_empty else None,
        }
        if self.reduction_meta is not None:
            state["reduction"] = self.reduction_meta
        return state


def _engine_move(session: GameSession) -> None:
    position = session.position
    try:
        move = strategy_move(position, session.table, time_budget_ms=session.time_budget_ms)
        unverified = False
        if move == sentinel(position):
            move = min(bits(position.alive))  # no zero-value option; play on
    except BudgetExceededError:
        move = min(bits(position.alive))
        unverified = True
    session.record(move, session.engine_role, unverified)


def create_app(
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
    time_budget_ms: float | None = 10_000.0,
    journal_path: str | None = None,
    static_dir: str | None = None,
) -> FastAPI:
    app = FastAPI(title="nodekayles", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    sessions: dict[str, GameSession] = {}
    registry_lock = threading.Lock()
    journal_lock = threading.Lock()

    def journal(event: dict) -> None:
        if journal_path is None:
            return
        event = {"ts": time.time(), **event}
        with journal_lock:
            with open(journal_path, "a") as fh:
                fh.write(json.dumps(event) + "\n")

    def get_session(session_id: str) -> GameSession:
        with registry_lock:
            session = sessions.get(session_id)
        if session is None:
            raise ApiError(404, "unknown-session", f"no session {session_id!r}")
        return session

    @app.exception_handler(ApiError)
    async def _api_error(_: Request, exc: ApiError) -> JSONResponse:
        return JSONResponse({"error": exc.code, "detail": exc.detail}, status_code=exc.status)

    @app.post(API_PREFIX + "/games")
    def create_game(payload: dict) -> dict:
        if not isinstance(payload, dict):
            raise ApiError(400, "malformed", "request body must be a JSON object")
        human_role = payload.get("human_role", ALICE)
        if human_role not in (ALICE, BOB):
            raise ApiError(400, "malformed", f"human_role must be Alice or Bob, got {human_role!r}")
        reduction_meta = None
        if "graph" in payload:
            spec = payload["graph"]
            if not isinstance(spec, dict) or not isinstance(spec.get("nodes"), int):
                raise ApiError(400, "malformed", 'graph needs an integer "nodes" field')
            try:
                edges = [tuple(e) for e in spec.get("edges", [])]
                ground = validate_graph(edges, spec["nodes"], complete_symmetry=True)
            except (NodeKaylesError, TypeError, ValueError) as exc:
                raise ApiError(422, "invalid-graph", str(exc)) from exc
        elif "reduction" in payload:
            spec = payload["reduction"]
            if not isinstance(spec, dict) or "machine" not in spec:
                raise ApiError(400, "malformed", 'reduction needs a "machine" field')
            try:
                machine = atm.load_machine(spec["machine"])
                rg = reduction.build(machine, spec.get("input", ""), spec.get("variant", "A"))
            except NodeKaylesError as exc:
                raise ApiError(422, "invalid-machine", str(exc)) from exc
            ground = rg.graph
            reduction_meta = json.loads(reduction.sidecar_json(rg))
        else:
            raise ApiError(400, "malformed", 'supply either "graph" or "reduction"')

        session = GameSession(
            id=secrets.token_hex(8),
            ground=ground,
            position=Position.fresh(ground),
            human_role=human_role,
            table=TranspositionTable(ground, node_budget=None),
            time_budget_ms=time_budget_ms,
            node_budget=node_budget,
            reduction_meta=reduction_meta,
        )
        try:
            if not session.position.is_empty and session.turn == session.engine_role:
                _engine_move(session)
        except BudgetExceededError as exc:  # pragma: no cover - engine falls back instead
            raise ApiError(507, "budget", str(exc)) from exc
        with registry_lock:
            sessions[session.id] = session
        journal({"event": "create", "session": session.id, "human_role": human_role})
        return {"id": session.id, "state": session.snapshot()}

    @app.get(API_PREFIX + "/games/{session_id}")
    def get_state(session_id: str) -> dict:
        return get_session(session_id).snapshot()

    @app.post(API_PREFIX + "/games/{session_id}/moves")
    def apply_move(session_id: str, payload: dict) -> dict:
        session = get_session(session_id)
        node = payload.get("node") if isinstance(payload, dict) else None
        if not isinstance(node, int):
            raise ApiError(400, "malformed", 'body must carry an integer "node"')
        with session.lock:
            if session.position.is_empty or session.turn != session.human_role:
                raise ApiError(409, "not-your-turn", "it is not your turn to move")
            if not (0 <= node < session.ground.node_count) or not session.position.alive >> node & 1:
                raise ApiError(422, "move-not-available", f"node {node} is not available")
            session.record(node, session.human_role)
            journal({"event": "move", "session": session.id, "node": node, "by": session.human_role})
            if not session.position.is_empty:
                _engine_move(session)
                journal(
                    {
                        "event": "move",
                        "session": session.id,
                        "node": session.history[-1],
                        "by": session.engine_role,
                    }
                )
            return session.snapshot()

    @app.get(API_PREFIX + "/games/{session_id}/hints")
    def get_hints(session_id: str) -> dict:
        session = get_session(session_id)
        with session.lock:
            position = session.position
            alive = sorted(bits(position.alive))
            if position.node_count_alive() <= session.node_budget:
                try:
                    hints = [
                        {
                            "node": v,
                            "grundy": session.table.grundy(
                                option(position, v), time_budget_ms=session.time_budget_ms
                            ),
                        }
                        for v in alive
                    ]
                    return {"hints": hints}
                except BudgetExceededError:
                    pass  # degrade to the boolean ladder below
            try:
                hints = [
                    {
                        "node": v,
                        "wins": not session.table.win(
                            option(position, v), time_budget_ms=session.time_budget_ms
                        ),
                    }
                    for v in alive
                ]
                return {"hints": hints}
            except BudgetExceededError:
                return {"hints": "unavailable"}

    @app.delete(API_PREFIX + "/games/{session_id}")
    def delete_game(session_id: str) -> dict:
        get_session(session_id)
        with registry_lock:
            sessions.pop(session_id, None)
        journal({"event": "delete", "session": session_id})
        return {"deleted": session_id}

    if static_dir and Path(static_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
