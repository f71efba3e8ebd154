import { describe, expect, test } from "vitest";

import type { GameRecord } from "../src/api";
import { SessionTrail } from "../src/state";

function fake(encoding: string): GameRecord {
  return {
    id: 0,
    encoding,
    name: encoding,
    display_name: encoding,
    common_names: [],
    tie_classes: { row: "strict", column: "strict" },
    layers: [],
    classification: {
      nash_weak: [],
      nash_strict: [],
      family: "win-win",
      subfamily: "harmonious",
      fixed_rank_sum: false,
      pareto_optimal: [],
      mutually_pareto_optimal: [],
      row: { dominance: "none", dominant_strategy: null, maximin: [], degenerate: false, inducement: "mixed" },
      column: { dominance: "none", dominant_strategy: null, maximin: [], degenerate: false, inducement: "mixed" },
    },
    neighbors: [],
  };
}

describe("SessionTrail", () => {
  test("push, undo, branch", () => {
    const trail = new SessionTrail();
    trail.start(fake("a"));
    trail.push("m1", fake("b"));
    trail.push("m2", fake("c"));
    expect(trail.current.record.encoding).toBe("c");
    expect(trail.movesToCurrent()).toEqual(["m1", "m2"]);

    trail.undo();
    expect(trail.current.record.encoding).toBe("b");
    expect(trail.canRedo).toBe(true);
    trail.redo();
    expect(trail.current.record.encoding).toBe("c");

    trail.undo();
    trail.undo();
    expect(trail.current.record.encoding).toBe("a");
    expect(trail.canUndo).toBe(false);
    trail.push("m3", fake("d"));
    expect(trail.length).toBe(2); // the undone branch is discarded
    expect(trail.movesToCurrent()).toEqual(["m3"]);
  });

  test("jump moves the pointer without forgetting the tail", () => {
    const trail = new SessionTrail();
    trail.start(fake("a"));
    trail.push("m1", fake("b"));
    trail.push("m2", fake("c"));
    trail.jump(0);
    expect(trail.current.record.encoding).toBe("a");
    expect(trail.length).toBe(3);
    trail.jump(2);
    expect(trail.current.record.encoding).toBe("c");
  });
});
