/** Layer minimap with route overlay.
 *
 * Four boxes for the four layers (discord SW, win-win NE, matching the
 * chart's quadrants), the symmetric diagonal drawn across them, the current
 * game's layer(s) shaded, and the planned route listed step by step.
 * Clicking a step jumps the session to that game.
 */

import type { PathRecord, PathStepRecord } from "./api";

const LAYER_GRID: [string, string][][] = [
  // [layer value, css class]; visual rows top to bottom.
  [
    ["L4-row-aligned", "l4"],
    ["L3-win-win", "l3"],
  ],
  [
    ["L1-discord", "l1"],
    ["L2-column-aligned", "l2"],
  ],
];

export interface StepHandler {
  (step: PathStepRecord, index: number): void;
}

export function renderMinimap(
  container: HTMLElement,
  currentLayers: string[],
  path: PathRecord | null,
  onStep: StepHandler,
): void {
  container.replaceChildren();
  const map = document.createElement("div");
  map.className = "minimap";
  map.id = "minimap";
  for (const row of LAYER_GRID) {
    const rowDiv = document.createElement("div");
    rowDiv.className = "minimap-row";
    for (const [layer, css] of row) {
      const box = document.createElement("div");
      box.className = `layer-box ${css}`;
      box.dataset.layer = layer;
      box.textContent = layer.replace("-", " ");
      if (currentLayers.includes(layer)) box.classList.add("current");
      rowDiv.appendChild(box);
    }
    map.appendChild(rowDiv);
  }
  const diagonal = document.createElement("div");
  diagonal.className = "symmetric-axis";
  diagonal.title = "symmetric games run along this diagonal";
  map.appendChild(diagonal);
  container.appendChild(map);

  const overlay = document.createElement("div");
  overlay.id = "path-overlay";
  if (path === null) {
    container.appendChild(overlay);
    return;
  }
  if (path.steps.length === 0) {
    const note = document.createElement("div");
    note.className = "path-note";
    note.textContent = "already there — zero steps";
    overlay.appendChild(note);
  } else {
    const list = document.createElement("ol");
    list.className = "path-steps";
    path.steps.forEach((step, i) => {
      const item = document.createElement("li");
      item.dataset.encoding = step.encoding;
      item.dataset.move = step.move;
      const link = document.createElement("a");
      link.textContent = `${step.move} → ${step.name} (${step.encoding})`;
      link.addEventListener("click", () => onStep(step, i));
      item.appendChild(link);
      list.appendChild(item);
    });
    overlay.appendChild(list);
    const cost = document.createElement("div");
    cost.className = "path-cost";
    cost.textContent = `cost ${path.cost}`;
    overlay.appendChild(cost);
  }
  container.appendChild(overlay);
}

export function renderUnreachable(container: HTMLElement, message: string): void {
  container.replaceChildren();
  const note = document.createElement("div");
  note.id = "path-overlay";
  note.className = "path-unreachable";
  note.textContent = `unreachable with current move set: ${message}`;
  container.appendChild(note);
}
