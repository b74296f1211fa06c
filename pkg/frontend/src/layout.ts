import type { GameState } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

export const WIDTH = 760;
export const HEIGHT = 520;

/**
 * Simple spring layout: repulsion between all pairs, attraction along edges,
 * seeded deterministically from node ids so renders are stable.
 */
export function forceLayout(nodeCount: number, edges: [number, number][]): Point[] {
  const pos: Point[] = [];
  for (let v = 0; v < nodeCount; v++) {
    const angle = (2 * Math.PI * v) / Math.max(nodeCount, 1);
    pos.push({
      x: WIDTH / 2 + Math.cos(angle) * WIDTH * 0.33,
      y: HEIGHT / 2 + Math.sin(angle) * HEIGHT * 0.33,
    });
  }
  const iterations = Math.min(260, 40 + nodeCount * 4);
  for (let step = 0; step < iterations; step++) {
    const force: Point[] = pos.map(() => ({ x: 0, y: 0 }));
    for (let u = 0; u < nodeCount; u++) {
      for (let v = u + 1; v < nodeCount; v++) {
        const dx = pos[u]!.x - pos[v]!.x;
        const dy = pos[u]!.y - pos[v]!.y;
        const d2 = Math.max(dx * dx + dy * dy, 1);
        const push = 14000 / d2;
        const d = Math.sqrt(d2);
        force[u]!.x += (dx / d) * push;
        force[u]!.y += (dy / d) * push;
        force[v]!.x -= (dx / d) * push;
        force[v]!.y -= (dy / d) * push;
      }
    }
    for (const [u, v] of edges) {
      const dx = pos[u]!.x - pos[v]!.x;
      const dy = pos[u]!.y - pos[v]!.y;
      const d = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
      const pull = (d - 110) * 0.02;
      force[u]!.x -= (dx / d) * pull;
      force[u]!.y -= (dy / d) * pull;
      force[v]!.x += (dx / d) * pull;
      force[v]!.y += (dy / d) * pull;
    }
    const damp = 0.85 * (1 - step / iterations) + 0.05;
    for (let v = 0; v < nodeCount; v++) {
      pos[v]!.x = Math.min(WIDTH - 24, Math.max(24, pos[v]!.x + force[v]!.x * damp));
      pos[v]!.y = Math.min(HEIGHT - 24, Math.max(24, pos[v]!.y + force[v]!.y * damp));
    }
  }
  return pos;
}

export type LayerClass = "path" | "declaration" | "forced" | "punisher" | "constraint";

const KIND_TO_CLASS: Record<string, LayerClass> = {
  PathNode: "path",
  TapeNode: "declaration",
  HeadNode: "declaration",
  StateNode: "declaration",
  BobNode: "forced",
  PunishNode: "punisher",
  InitRule: "constraint",
  TransRule: "constraint",
  AcceptNode: "constraint",
  RejectNode: "constraint",
};

export function layerClassOf(kind: string): LayerClass {
  return KIND_TO_CLASS[kind] ?? "constraint";
}

/**
 * Column layout for simulation graphs: one column per scheduled round, then a
 * punisher block and a constraint block, in schedule order.
 */
export function layerColumns(state: GameState): Point[] | null {
  const meta = state.reduction;
  if (!meta) return null;
  const rounds = meta.layout.T;
  const columns = rounds + 2; // punishers, then constraints
  const colWidth = WIDTH / (columns + 1);
  const pos: Point[] = [];
  const perColumnCount: number[] = new Array(columns).fill(0);

  const columnOf = (id: number): number => {
    const label = meta.labels[String(id)];
    if (!label) return columns - 1;
    const cls = layerClassOf(label.kind);
    if (cls === "punisher") return rounds;
    if (cls === "constraint") return rounds + 1;
    return roundOf(label, meta.layout.s, meta.layout.l0);
  };

  const columnIndex: number[] = [];
  for (let v = 0; v < state.graph.nodes; v++) {
    const col = columnOf(v);
    columnIndex.push(col);
    perColumnCount[col] = (perColumnCount[col] ?? 0) + 1;
  }
  const seen: number[] = new Array(columns).fill(0);
  for (let v = 0; v < state.graph.nodes; v++) {
    const col = columnIndex[v]!;
    const total = perColumnCount[col] ?? 1;
    const row = seen[col]!;
    seen[col] = row + 1;
    pos.push({
      x: colWidth * (col + 1),
      y: (HEIGHT * (row + 1)) / (total + 1),
    });
  }
  return pos;
}

function roundOf(label: { kind: string; [k: string]: unknown }, s: number, l0: number): number {
  const i = typeof label.round === "number" ? label.round : 0;
  switch (label.kind) {
    case "PathNode":
      return i;
    case "TapeNode":
      return s + 2 * (i * l0 + (label.cell as number));
    case "HeadNode":
      return s + 2 * (i * l0 + s);
    case "StateNode":
      return s + 2 * (i * l0 + s + 1);
    case "BobNode":
      return s + 2 * (i * l0 + (label.slot as number)) + 1;
    default:
      return 0;
  }
}

/** Closed neighborhood of v: exactly what a move at v removes. */
export function closedNeighborhood(nodeCount: number, edges: [number, number][], v: number): Set<number> {
  const out = new Set<number>([v]);
  for (const [a, b] of edges) {
    if (a === v) out.add(b);
    if (b === v) out.add(a);
  }
  return out;
}
