// Wire types for the game service (prefix /api/v1).

export interface GraphSpec {
  nodes: number;
  edges: [number, number][];
}

export interface MoveRecord {
  node: number;
  by: string;
  unverified?: boolean;
}

export interface LayoutMeta {
  s: number;
  l0: number;
  n0: number;
  T: number;
  schedule: (string | number)[][];
}

export interface LabelRecord {
  kind: string;
  [field: string]: unknown;
}

export interface ReductionMeta {
  variant: string;
  labels: Record<string, LabelRecord>;
  layout: LayoutMeta;
}

export interface GameState {
  id: string;
  graph: GraphSpec;
  alive: number[];
  history: number[];
  moves: MoveRecord[];
  turn: string | null;
  human_role: string;
  winner: string | null;
  reduction?: ReductionMeta;
}

export type Hint = { node: number; grundy?: number; wins?: boolean };
export type HintsPayload = { hints: Hint[] | "unavailable" };

export interface ApiErrorBody {
  error: string;
  detail: string;
}
