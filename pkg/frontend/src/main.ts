import { bootstrap } from "./app.js";
import type { GraphSpec } from "./types.js";

const PRESETS: Record<string, GraphSpec> = {
  "path-3": { nodes: 3, edges: [[0, 1], [1, 2]] },
  "path-5": { nodes: 5, edges: [[0, 1], [1, 2], [2, 3], [3, 4]] },
  "two-edges": { nodes: 4, edges: [[0, 1], [2, 3]] },
  cycle6: { nodes: 6, edges: [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [0, 5]] },
};

function main(): void {
  const root = document.getElementById("app");
  if (!root) throw new Error("missing #app container");

  const controls = document.createElement("div");
  controls.className = "controls";
  const select = document.createElement("select");
  for (const name of Object.keys(PRESETS)) {
    const option = document.createElement("option");
    option.value = name;
    option.textContent = name;
    select.appendChild(option);
  }
  const role = document.createElement("select");
  for (const seat of ["Alice", "Bob"]) {
    const option = document.createElement("option");
    option.value = seat;
    option.textContent = `play as ${seat}`;
    role.appendChild(option);
  }
  const start = document.createElement("button");
  start.textContent = "New game";
  controls.append(select, role, start);
  root.appendChild(controls);

  const app = bootstrap(root);
  start.addEventListener("click", () => {
    const preset = PRESETS[select.value] ?? PRESETS["path-3"]!;
    void app.newGame(preset, role.value);
  });
}

main();
