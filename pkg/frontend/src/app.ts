import { ApiError, GameClient } from "./api.js";
import { BoardView } from "./board.js";
import type { GameState, GraphSpec, Hint } from "./types.js";

/**
 * Glue between the service client and the board: one in-flight mutation at a
 * time, hints refreshed after every accepted move when the overlay is on.
 */
export class App {
  readonly board: BoardView;
  state: GameState | null = null;
  hintsOn = false;
  hints: Hint[] | "unavailable" | null = null;
  hintsToggle: HTMLButtonElement;
  private busy = false;

  constructor(
    root: HTMLElement,
    private client: GameClient,
  ) {
    this.hintsToggle = document.createElement("button");
    this.hintsToggle.textContent = "Show hints";
    this.hintsToggle.addEventListener("click", () => void this.toggleHints());
    root.appendChild(this.hintsToggle);
    const boardHost = document.createElement("div");
    root.appendChild(boardHost);
    this.board = new BoardView(boardHost, { onNodeClick: (node) => void this.submitMove(node) });
  }

  async newGame(graph: GraphSpec, humanRole: string): Promise<void> {
    const { state } = await this.client.createGame({ graph, human_role: humanRole });
    this.state = state;
    this.hints = null;
    this.board.clearToast();
    await this.refreshHints();
    this.board.update(state, this.hints);
  }

  async submitMove(node: number): Promise<void> {
    if (!this.state || this.busy || this.state.winner) return;
    this.busy = true;
    try {
      const state = await this.client.submitMove(this.state.id, node);
      this.state = state;
      this.board.clearToast();
      await this.refreshHints();
      this.board.update(state, this.hints);
    } catch (error) {
      if (error instanceof ApiError && (error.status === 409 || error.status === 422)) {
        this.board.showToast(error.message); // stale click; the view stays consistent
      } else {
        throw error;
      }
    } finally {
      this.busy = false;
    }
  }

  async toggleHints(): Promise<void> {
    this.hintsOn = !this.hintsOn;
    this.hintsToggle.textContent = this.hintsOn ? "Hide hints" : "Show hints";
    await this.refreshHints();
    if (this.state) this.board.update(this.state, this.hints);
  }

  private async refreshHints(): Promise<void> {
    if (!this.hintsOn || !this.state || this.state.winner) {
      this.hints = this.hintsOn ? this.hints : null;
      if (!this.hintsOn) this.hints = null;
      return;
    }
    const payload = await this.client.getHints(this.state.id);
    this.hints = payload.hints;
    if (this.hints === "unavailable") {
      this.hintsToggle.disabled = true;
      this.hintsToggle.textContent = "Hints unavailable";
    }
  }
}

export function bootstrap(root: HTMLElement, base = ""): App {
  return new App(root, new GameClient(base));
}
