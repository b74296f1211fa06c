import type { GameState, GraphSpec, HintsPayload } from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    detail: string,
  ) {
    super(detail);
  }
}

async function unwrap<T>(response: Response): Promise<T> {
  const body = await response.json();
  if (!response.ok) {
    throw new ApiError(response.status, body.error ?? "error", body.detail ?? "request failed");
  }
  return body as T;
}

/** Thin typed client; all game math stays on the server. */
export class GameClient {
  constructor(
    private base = "",
    private fetcher: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private url(path: string): string {
    return `${this.base}/api/v1${path}`;
  }

  async createGame(body: {
    graph?: GraphSpec;
    reduction?: { machine: unknown; input: string; variant: string };
    human_role: string;
  }): Promise<{ id: string; state: GameState }> {
    const response = await this.fetcher(this.url("/games"), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    return unwrap(response);
  }

  async getState(id: string): Promise<GameState> {
    return unwrap(await this.fetcher(this.url(`/games/${id}`)));
  }

  async submitMove(id: string, node: number): Promise<GameState> {
    const response = await this.fetcher(this.url(`/games/${id}/moves`), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ node }),
    });
    return unwrap(response);
  }

  async getHints(id: string): Promise<HintsPayload> {
    return unwrap(await this.fetcher(this.url(`/games/${id}/hints`)));
  }

  async deleteGame(id: string): Promise<void> {
    await unwrap(await this.fetcher(this.url(`/games/${id}`), { method: "DELETE" }));
  }
}
