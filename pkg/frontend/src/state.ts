/** Session trail: the games visited and the moves that led there.
 *
 * Replaying the recorded moves through the service reproduces the current
 * game; undo steps the pointer back without losing the forward history
 * until a new move branches off.
 */

import type { GameRecord } from "./api";

export interface TrailEntry {
  record: GameRecord;
  /** Move that produced this entry; null for the session start. */
  move: string | null;
}

export class SessionTrail {
  private entries: TrailEntry[] = [];
  private pointer = -1;

  start(record: GameRecord): void {
    this.entries = [{ record, move: null }];
    this.pointer = 0;
  }

  get current(): TrailEntry {
    if (this.pointer < 0) throw new Error("trail is empty");
    return this.entries[this.pointer];
  }

  get length(): number {
    return this.entries.length;
  }

  get position(): number {
    return this.pointer;
  }

  get canUndo(): boolean {
    return this.pointer > 0;
  }

  get canRedo(): boolean {
    return this.pointer < this.entries.length - 1;
  }

  push(move: string, record: GameRecord): void {
    this.entries = this.entries.slice(0, this.pointer + 1);
    this.entries.push({ record, move });
    this.pointer += 1;
  }

  undo(): TrailEntry {
    if (!this.canUndo) throw new Error("nothing to undo");
    this.pointer -= 1;
    return this.current;
  }

  redo(): TrailEntry {
    if (!this.canRedo) throw new Error("nothing to redo");
    this.pointer += 1;
    return this.current;
  }

  jump(index: number): TrailEntry {
    if (index < 0 || index >= this.entries.length) throw new Error("bad trail index");
    this.pointer = index;
    return this.current;
  }

  /** Moves from the start up to the pointer, for service-side replay. */
  movesToCurrent(): string[] {
    return this.entries
      .slice(1, this.pointer + 1)
      .map((e) => e.move)
      .filter((m): m is string => m !== null);
  }

  all(): readonly TrailEntry[] {
    return this.entries;
  }
}
