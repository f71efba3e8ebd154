/** The explorer session: wires the API client, the trail, and the views.
 *
 * Kept free of window/hash concerns so tests can drive a full session in a
 * bare DOM; main.ts adds the routing shell on top.
 */

import { ApiClient, ApiError, type GameRecord, type NeighborRecord, type PathRecord } from "./api";
import { renderMinimap, renderUnreachable } from "./minimap";
import { SessionTrail } from "./state";
import { renderError, renderGame, renderTrail } from "./view";

export interface ExplorerElements {
  game: HTMLElement;
  trail: HTMLElement;
  minimap: HTMLElement;
  error: HTMLElement;
}

export class Explorer {
  readonly trail = new SessionTrail();
  private route: PathRecord | null = null;
  private busy: Promise<void> = Promise.resolve();

  constructor(
    readonly api: ApiClient,
    readonly elements: ExplorerElements,
    readonly onNavigate: (record: GameRecord) => void = () => {},
  ) {}

  /** Serialize mutations: at most one in-flight change to the session. */
  private enqueue(task: () => Promise<void>): Promise<void> {
    this.busy = this.busy.then(task, task);
    return this.busy;
  }

  /** Fetch a record with the full applicable-move list for the buttons. */
  private async load(idOrName: string | number): Promise<GameRecord> {
    const [record, allMoves] = await Promise.all([
      this.api.game(idOrName),
      this.api.neighbors(idOrName, "all"),
    ]);
    return { ...record, neighbors: allMoves };
  }

  show(idOrName: string): Promise<void> {
    return this.enqueue(async () => {
      try {
        const record = await this.load(idOrName);
        this.trail.start(record);
        this.route = null;
        this.renderAll();
      } catch (e) {
        this.showError(e);
      }
    });
  }

  applyMove(move: string, target: NeighborRecord): Promise<void> {
    return this.enqueue(async () => {
      try {
        const record = await this.load(target.id);
        this.trail.push(move, record);
        this.route = null;
        this.renderAll();
      } catch (e) {
        this.showError(e);
      }
    });
  }

  undo(): Promise<void> {
    return this.enqueue(async () => {
      if (this.trail.canUndo) {
        this.trail.undo();
        this.route = null;
        this.renderAll();
      }
    });
  }

  jump(index: number): Promise<void> {
    return this.enqueue(async () => {
      this.trail.jump(index);
      this.renderAll();
    });
  }

  planRoute(goal: string, moves = "adjacent"): Promise<void> {
    return this.enqueue(async () => {
      try {
        this.route = await this.api.path(this.trail.current.record.encoding, goal, moves);
        this.renderAll();
      } catch (e) {
        if (e instanceof ApiError && e.status === 422) {
          renderUnreachable(this.elements.minimap, e.message);
          return;
        }
        this.showError(e);
      }
    });
  }

  /** Jump the session onto a planned route step (replays the prefix). */
  followRouteStep(index: number): Promise<void> {
    return this.enqueue(async () => {
      if (!this.route) return;
      const prefix = this.route.steps.slice(0, index + 1);
      try {
        for (const step of prefix) {
          const record = await this.load(step.encoding);
          this.trail.push(step.move, record);
        }
        this.route = this.route.steps.length === index + 1 ? null : this.route;
        this.renderAll();
      } catch (e) {
        this.showError(e);
      }
    });
  }

  get current(): GameRecord {
    return this.trail.current.record;
  }

  /** Wait for pending session mutations (used by tests). */
  settled(): Promise<void> {
    return this.busy;
  }

  private renderAll(): void {
    const record = this.current;
    renderError(this.elements.error, null);
    renderGame(this.elements.game, record, (move, target) => {
      void this.applyMove(move, target);
    });
    renderTrail(this.elements.trail, this.trail.all(), this.trail.position, (i) => {
      void this.jump(i);
    });
    renderMinimap(this.elements.minimap, record.layers, this.route, (_step, i) => {
      void this.followRouteStep(i);
    });
    this.onNavigate(record);
  }

  private showError(e: unknown): void {
    const message = e instanceof Error ? e.message : String(e);
    renderError(this.elements.error, message);
  }
}
