import { closedNeighborhood, forceLayout, layerClassOf, layerColumns, HEIGHT, WIDTH } from "./layout.js";
import type { GameState, Hint } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface BoardCallbacks {
  onNodeClick(node: number): void;
}

/**
 * Renders one state snapshot; every update is a pure function of the last
 * snapshot received from the server (plus the optional hint payload).
 */
export class BoardView {
  private svg: SVGSVGElement;
  readonly turnBanner: HTMLElement;
  readonly winnerBanner: HTMLElement;
  readonly toast: HTMLElement;
  private state: GameState | null = null;
  private hints: Hint[] | "unavailable" | null = null;

  constructor(
    private container: HTMLElement,
    private callbacks: BoardCallbacks,
  ) {
    this.turnBanner = document.createElement("div");
    this.turnBanner.className = "banner turn-banner";
    this.winnerBanner = document.createElement("div");
    this.winnerBanner.className = "banner winner-banner";
    this.toast = document.createElement("div");
    this.toast.className = "toast";
    this.svg = document.createElementNS(SVG_NS, "svg") as SVGSVGElement;
    this.svg.setAttribute("viewBox", `0 0 ${WIDTH} ${HEIGHT}`);
    this.svg.setAttribute("class", "board");
    container.append(this.turnBanner, this.winnerBanner, this.svg, this.toast);
  }

  update(state: GameState, hints: Hint[] | "unavailable" | null = null): void {
    this.state = state;
    this.hints = hints;
    this.render();
  }

  showToast(message: string): void {
    this.toast.textContent = message;
    this.toast.classList.add("visible");
  }

  clearToast(): void {
    this.toast.textContent = "";
    this.toast.classList.remove("visible");
  }

  nodeElement(node: number): Element | null {
    return this.svg.querySelector(`[data-node="${node}"]`);
  }

  private render(): void {
    const state = this.state;
    if (!state) return;
    while (this.svg.firstChild) this.svg.removeChild(this.svg.firstChild);

    const alive = new Set(state.alive);
    const lastMove = state.history.length ? state.history[state.history.length - 1] : null;
    const positions = layerColumns(state) ?? forceLayout(state.graph.nodes, state.graph.edges);

    const edgeGroup = document.createElementNS(SVG_NS, "g");
    for (const [u, v] of state.graph.edges) {
      const line = document.createElementNS(SVG_NS, "line");
      const pu = positions[u]!;
      const pv = positions[v]!;
      line.setAttribute("x1", String(pu.x));
      line.setAttribute("y1", String(pu.y));
      line.setAttribute("x2", String(pv.x));
      line.setAttribute("y2", String(pv.y));
      const dead = !alive.has(u) || !alive.has(v);
      line.setAttribute("class", dead ? "edge dead" : "edge");
      edgeGroup.appendChild(line);
    }
    this.svg.appendChild(edgeGroup);

    const hintByNode = new Map<number, Hint>();
    if (Array.isArray(this.hints)) {
      for (const hint of this.hints) hintByNode.set(hint.node, hint);
    }

    const nodeGroup = document.createElementNS(SVG_NS, "g");
    for (let v = 0; v < state.graph.nodes; v++) {
      const group = document.createElementNS(SVG_NS, "g");
      group.setAttribute("data-node", String(v));
      const classes = ["node"];
      classes.push(alive.has(v) ? "alive" : "dead");
      if (lastMove === v) classes.push("last-move");
      const meta = state.reduction?.labels[String(v)];
      if (meta) classes.push(`layer-${layerClassOf(meta.kind)}`);
      const hint = hintByNode.get(v);
      if (hint && (hint.grundy === 0 || hint.wins === true)) classes.push("hint-zero");
      group.setAttribute("class", classes.join(" "));

      const point = positions[v]!;
      const circle = document.createElementNS(SVG_NS, "circle");
      circle.setAttribute("cx", String(point.x));
      circle.setAttribute("cy", String(point.y));
      circle.setAttribute("r", "14");
      group.appendChild(circle);

      const text = document.createElementNS(SVG_NS, "text");
      text.setAttribute("x", String(point.x));
      text.setAttribute("y", String(point.y + 4));
      text.setAttribute("text-anchor", "middle");
      text.textContent = String(v);
      group.appendChild(text);

      if (hint && hint.grundy !== undefined) {
        const badge = document.createElementNS(SVG_NS, "text");
        badge.setAttribute("x", String(point.x + 16));
        badge.setAttribute("y", String(point.y - 10));
        badge.setAttribute("class", "hint-badge");
        badge.textContent = String(hint.grundy);
        group.appendChild(badge);
      }

      if (alive.has(v)) {
        group.addEventListener("click", () => this.callbacks.onNodeClick(v));
        group.addEventListener("mouseenter", () => this.shadeNeighborhood(v));
        group.addEventListener("mouseleave", () => this.clearShading());
      }
      nodeGroup.appendChild(group);
    }
    this.svg.appendChild(nodeGroup);

    this.turnBanner.textContent = state.winner
      ? ""
      : state.turn === state.human_role
        ? `Your move (${state.human_role})`
        : `Engine thinking (${state.turn})`;
    if (state.winner) {
      const yours = state.winner === state.human_role;
      this.winnerBanner.textContent = `${state.winner} wins${yours ? " — that's you!" : ""}`;
      this.winnerBanner.classList.add("visible");
    } else {
      this.winnerBanner.textContent = "";
      this.winnerBanner.classList.remove("visible");
    }
  }

  /** Hover preview: shade exactly the closed neighborhood a move would remove. */
  private shadeNeighborhood(v: number): void {
    const state = this.state;
    if (!state) return;
    const removed = closedNeighborhood(state.graph.nodes, state.graph.edges, v);
    const alive = new Set(state.alive);
    for (const u of removed) {
      if (!alive.has(u)) continue;
      this.nodeElement(u)?.classList.add("would-remove");
    }
  }

  private clearShading(): void {
    for (const el of Array.from(this.svg.querySelectorAll(".would-remove"))) {
      el.classList.remove("would-remove");
    }
  }
}
