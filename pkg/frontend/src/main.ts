/** Explorer shell: hash routing (#/game/<coordinate-name>), the goal
 * picker, and undo, on top of the Explorer session. */

import { ApiClient } from "./api";
import { Explorer } from "./explorer";
import "./style.css";

const api = new ApiClient("");

function mount(): void {
  const app = document.getElementById("app");
  if (!app) throw new Error("missing #app");
  app.innerHTML = `
    <header>
      <h1>2×2 game explorer</h1>
      <form id="lookup">
        <input id="lookup-input" placeholder="sd-sd, 1324/4321, Chicken…" />
        <button type="submit">show</button>
        <button type="button" id="undo" title="undo the last move">undo</button>
      </form>
    </header>
    <div id="error-area"></div>
    <main>
      <section id="game-area"></section>
      <aside>
        <form id="route">
          <label>route to
            <select id="goal">
              <option value="family:win-win">win-win family</option>
              <option value="family:second-best">second-best family</option>
              <option value="layer:l3">win-win layer</option>
              <option value="game:sn-sn">No Conflict</option>
              <option value="game:sh-sh">Harmony</option>
            </select>
          </label>
          <label>moves
            <select id="route-moves">
              <option value="adjacent">adjacent swaps</option>
              <option value="adjacent+half">adjacent + half swaps</option>
              <option value="all">all moves</option>
            </select>
          </label>
          <button type="submit">plan</button>
        </form>
        <section id="minimap-area"></section>
        <section id="trail-area"></section>
      </aside>
    </main>
  `;

  const explorer = new Explorer(
    api,
    {
      game: document.getElementById("game-area")!,
      trail: document.getElementById("trail-area")!,
      minimap: document.getElementById("minimap-area")!,
      error: document.getElementById("error-area")!,
    },
    (record) => {
      const target = `#/game/${record.name}`;
      if (window.location.hash !== target) {
        history.replaceState(null, "", target);
      }
    },
  );

  document.getElementById("lookup")!.addEventListener("submit", (e) => {
    e.preventDefault();
    const input = document.getElementById("lookup-input") as HTMLInputElement;
    if (input.value.trim()) void explorer.show(input.value.trim());
  });
  document.getElementById("undo")!.addEventListener("click", () => {
    void explorer.undo();
  });
  document.getElementById("route")!.addEventListener("submit", (e) => {
    e.preventDefault();
    const goal = (document.getElementById("goal") as HTMLSelectElement).value;
    const moves = (document.getElementById("route-moves") as HTMLSelectElement).value;
    void explorer.planRoute(goal, moves);
  });
  window.addEventListener("hashchange", () => {
    const name = hashGame();
    if (name && name !== explorer.current.name) void explorer.show(name);
  });

  void explorer.show(hashGame() ?? "sd-sd");
}

function hashGame(): string | null {
  const match = window.location.hash.match(/^#\/game\/(.+)$/);
  return match ? decodeURIComponent(match[1]) : null;
}

mount();
