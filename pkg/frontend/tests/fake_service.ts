// In-memory double of the game service, honoring the same wire contract.
// Only used by tests; the production client talks to the real server.

import type { FetchLike } from "../src/api.js";
import type { GameState, GraphSpec, MoveRecord } from "../src/types.js";

interface Session {
  id: string;
  graph: GraphSpec;
  alive: Set<number>;
  history: number[];
  moves: MoveRecord[];
  humanRole: string;
}

function neighborhoods(graph: GraphSpec): Set<number>[] {
  const out: Set<number>[] = [];
  for (let v = 0; v < graph.nodes; v++) out.push(new Set([v]));
  for (const [u, v] of graph.edges) {
    out[u]!.add(v);
    out[v]!.add(u);
  }
  return out;
}

function key(alive: Set<number>): string {
  return [...alive].sort((a, b) => a - b).join(",");
}

function grundy(alive: Set<number>, hoods: Set<number>[], memo: Map<string, number>): number {
  if (alive.size === 0) return 0;
  const k = key(alive);
  const cached = memo.get(k);
  if (cached !== undefined) return cached;
  const seen = new Set<number>();
  for (const v of alive) {
    const child = new Set([...alive].filter((u) => !hoods[v]!.has(u)));
    seen.add(grundy(child, hoods, memo));
  }
  let value = 0;
  while (seen.has(value)) value += 1;
  memo.set(k, value);
  return value;
}

export class FakeService {
  private sessions = new Map<string, Session>();
  private nextId = 1;

  fetcher: FetchLike = async (input, init) => {
    const method = init?.method ?? "GET";
    const body = init?.body ? JSON.parse(String(init.body)) : null;
    const match = input.match(/\/api\/v1\/games(?:\/([^/]+))?(?:\/(moves|hints))?$/);
    if (!match) return json(404, { error: "not-found", detail: input });
    const [, id, sub] = match;
    if (!id && method === "POST") return this.create(body);
    if (!id) return json(404, { error: "not-found", detail: input });
    const session = this.sessions.get(id);
    if (!session) return json(404, { error: "unknown-session", detail: id });
    if (sub === "moves" && method === "POST") return this.move(session, body?.node);
    if (sub === "hints") return this.hints(session);
    if (method === "DELETE") {
      this.sessions.delete(id);
      return json(200, { deleted: id });
    }
    return json(200, this.snapshot(session));
  };

  removalPreview(id: string, node: number): number[] {
    const session = this.sessions.get(id)!;
    const hoods = neighborhoods(session.graph);
    return [...session.alive].filter((u) => hoods[node]!.has(u)).sort((a, b) => a - b);
  }

  private create(body: { graph?: GraphSpec; human_role?: string } | null) {
    if (!body?.graph) return json(400, { error: "malformed", detail: "graph required" });
    const session: Session = {
      id: `fake-${this.nextId++}`,
      graph: body.graph,
      alive: new Set(Array.from({ length: body.graph.nodes }, (_, v) => v)),
      history: [],
      moves: [],
      humanRole: body.human_role ?? "Alice",
    };
    this.sessions.set(session.id, session);
    if (this.turn(session) !== session.humanRole && session.alive.size > 0) {
      this.engineMove(session);
    }
    return json(200, { id: session.id, state: this.snapshot(session) });
  }

  private turn(session: Session): string {
    return session.history.length % 2 === 0 ? "Alice" : "Bob";
  }

  private engineRole(session: Session): string {
    return session.humanRole === "Alice" ? "Bob" : "Alice";
  }

  private apply(session: Session, node: number, by: string): void {
    const hoods = neighborhoods(session.graph);
    session.alive = new Set([...session.alive].filter((u) => !hoods[node]!.has(u)));
    session.history.push(node);
    session.moves.push({ node, by });
  }

  private engineMove(session: Session): void {
    const hoods = neighborhoods(session.graph);
    const memo = new Map<string, number>();
    const candidates = [...session.alive].sort((a, b) => a - b);
    let pick = candidates[0]!;
    for (const v of candidates) {
      const child = new Set([...session.alive].filter((u) => !hoods[v]!.has(u)));
      if (grundy(child, hoods, memo) === 0) {
        pick = v;
        break;
      }
    }
    this.apply(session, pick, this.engineRole(session));
  }

  private move(session: Session, node: unknown) {
    if (typeof node !== "number") return json(400, { error: "malformed", detail: "node required" });
    if (session.alive.size === 0 || this.turn(session) !== session.humanRole) {
      return json(409, { error: "not-your-turn", detail: "wait for the engine" });
    }
    if (!session.alive.has(node)) {
      return json(422, { error: "move-not-available", detail: `node ${node} is dead` });
    }
    this.apply(session, node, session.humanRole);
    if (session.alive.size > 0) this.engineMove(session);
    return json(200, this.snapshot(session));
  }

  private hints(session: Session) {
    const hoods = neighborhoods(session.graph);
    const memo = new Map<string, number>();
    const hints = [...session.alive]
      .sort((a, b) => a - b)
      .map((v) => ({
        node: v,
        grundy: grundy(new Set([...session.alive].filter((u) => !hoods[v]!.has(u))), hoods, memo),
      }));
    return json(200, { hints });
  }

  private snapshot(session: Session): GameState {
    return {
      id: session.id,
      graph: session.graph,
      alive: [...session.alive].sort((a, b) => a - b),
      history: [...session.history],
      moves: [...session.moves],
      turn: session.alive.size === 0 ? null : this.turn(session),
      human_role: session.humanRole,
      winner: session.alive.size === 0 ? (session.history.length % 2 === 1 ? "Alice" : "Bob") : null,
    };
  }
}

function json(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}
