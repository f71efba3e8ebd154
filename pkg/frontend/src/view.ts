/** DOM rendering for the game view: payoff matrix with badges, family
 * banner, names, and the move buttons grouped by cost tier.  Every value
 * shown is copied verbatim from a service record. */

import type { GameRecord, NeighborRecord } from "./api";

export const CELLS = ["UL", "UR", "DL", "DR"] as const;
export type Cell = (typeof CELLS)[number];

export interface MoveHandler {
  (move: string, target: NeighborRecord): void;
}

const TIER_LABELS: [string, (move: string) => boolean][] = [
  ["low swaps", (m) => m.startsWith("low12")],
  ["mid swaps", (m) => m.startsWith("mid23")],
  ["high swaps", (m) => m.startsWith("high34")],
  ["jumps", (m) => m.startsWith("x")],
  ["half swaps", (m) => m.startsWith("tie-") || m.startsWith("break-")],
];

function payoffsFromEncoding(encoding: string): Record<Cell, [string, string]> {
  const [row, col] = encoding.split("/");
  const out = {} as Record<Cell, [string, string]>;
  CELLS.forEach((cell, i) => {
    out[cell] = [row[i], col[i]];
  });
  return out;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function renderGame(
  container: HTMLElement,
  record: GameRecord,
  onMove: MoveHandler,
): void {
  container.replaceChildren();

  const title = el("h2", "game-title", record.display_name);
  title.id = "game-title";
  container.appendChild(title);

  const subtitle = el("div", "game-subtitle");
  subtitle.append(
    Object.assign(el("span", "coordinate-name", record.name), { id: "coordinate-name" }),
    el("span", "encoding", record.encoding),
  );
  container.appendChild(subtitle);

  const banner = el("div", "family-banner", record.classification.family);
  banner.id = "family-banner";
  banner.dataset.family = record.classification.family;
  banner.dataset.subfamily = record.classification.subfamily;
  if (record.classification.family === "pd-family") {
    banner.classList.add("warning");
    banner.append(el("span", "warning-note", " — dilemma territory"));
  }
  container.appendChild(banner);

  const layers = el("div", "layer-indicator", record.layers.join(", ") || "no layer");
  layers.id = "layer-indicator";
  container.appendChild(layers);

  container.appendChild(renderMatrix(record));
  container.appendChild(renderMoveButtons(record.neighbors, onMove));

  const aliases = record.common_names.flatMap((e) => e.names);
  if (aliases.length > 0) {
    container.appendChild(el("div", "aliases", aliases.join("; ")));
  }
}

export function renderMatrix(record: GameRecord): HTMLTableElement {
  const payoffs = payoffsFromEncoding(record.encoding);
  const c = record.classification;
  const table = el("table", "matrix");
  table.id = "matrix";
  for (const rowCells of [
    ["UL", "UR"],
    ["DL", "DR"],
  ] as Cell[][]) {
    const tr = el("tr");
    for (const cell of rowCells) {
      const td = el("td", "cell");
      td.dataset.cell = cell;
      const [r, col] = payoffs[cell];
      const value = el("span", "payoff", `${r},${col}`);
      td.appendChild(value);
      if (c.pareto_optimal.includes(cell)) value.classList.add("pareto");
      if (c.nash_weak.includes(cell)) {
        const badge = el("span", "badge nash", "N");
        if (c.nash_strict.includes(cell)) badge.classList.add("strict");
        td.appendChild(badge);
        if (!c.pareto_optimal.includes(cell)) {
          td.appendChild(el("span", "badge deficient", "!"));
        }
      }
      const [rowStrategy, colStrategy] = cell === "UL" ? ["up", "left"]
        : cell === "UR" ? ["up", "right"]
        : cell === "DL" ? ["down", "left"]
        : ["down", "right"];
      if (c.row.maximin.includes(rowStrategy) && c.column.maximin.includes(colStrategy)) {
        td.appendChild(el("span", "badge maximin", "m"));
      }
      tr.appendChild(td);
    }
    table.appendChild(tr);
  }
  return table;
}

function renderMoveButtons(
  neighbors: NeighborRecord[],
  onMove: MoveHandler,
): HTMLElement {
  const panel = el("div", "moves");
  panel.id = "moves";
  for (const [label, match] of TIER_LABELS) {
    const tierMoves = neighbors.filter((n) => match(n.move));
    const tier = el("fieldset", "move-tier");
    tier.appendChild(el("legend", undefined, label));
    if (tierMoves.length === 0) {
      tier.appendChild(el("span", "none", "none"));
      tier.classList.add("empty");
    }
    for (const n of tierMoves) {
      const button = el("button", "move", n.move);
      button.dataset.move = n.move;
      button.dataset.targetId = String(n.id);
      button.dataset.targetEncoding = n.encoding;
      button.addEventListener("click", () => onMove(n.move, n));
      tier.appendChild(button);
    }
    panel.appendChild(tier);
  }
  return panel;
}

export function renderTrail(
  container: HTMLElement,
  entries: readonly { record: GameRecord; move: string | null }[],
  position: number,
  onJump: (index: number) => void,
): void {
  container.replaceChildren();
  const list = el("ol", "trail");
  list.id = "trail";
  entries.forEach((entry, i) => {
    const item = el("li");
    item.dataset.index = String(i);
    item.dataset.encoding = entry.record.encoding;
    const label = entry.move === null ? entry.record.name : `${entry.move} → ${entry.record.name}`;
    const link = el("a", i === position ? "current" : "", label);
    link.addEventListener("click", () => onJump(i));
    item.appendChild(link);
    list.appendChild(item);
  });
  container.appendChild(list);
}

export function renderError(container: HTMLElement, message: string | null): void {
  container.replaceChildren();
  if (message) {
    container.appendChild(el("div", "error", message));
  }
}
