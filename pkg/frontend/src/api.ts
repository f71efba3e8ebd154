/** Typed client for the read-only topology service.
 *
 * The explorer never computes game logic locally: every displayed value
 * comes from these records.
 */

export interface PlayerRecord {
  dominance: string;
  dominant_strategy: string | null;
  maximin: string[];
  degenerate: boolean;
  inducement: string;
}

export interface MixedStrategyRecord {
  p_up: string;
  q_left: string;
  expected: [string, string];
  cardinal_caveat: boolean;
}

export interface ClassificationRecord {
  nash_weak: string[];
  nash_strict: string[];
  family: string;
  subfamily: string;
  fixed_rank_sum: boolean;
  pareto_optimal: string[];
  mutually_pareto_optimal: string[];
  row: PlayerRecord;
  column: PlayerRecord;
  mixed_strategy?: MixedStrategyRecord;
}

export interface NeighborRecord {
  move: string;
  id: number;
  encoding: string;
  name: string;
}

export interface CommonNameRecord {
  names: string[];
  tags: string[];
}

export interface GameRecord {
  id: number;
  encoding: string;
  name: string;
  display_name: string;
  common_names: CommonNameRecord[];
  tie_classes: { row: string; column: string };
  layers: string[];
  classification: ClassificationRecord;
  neighbors: NeighborRecord[];
}

export interface PathStepRecord {
  move: string;
  encoding: string;
  name: string;
}

export interface PathRecord {
  start: string;
  cost: string;
  steps: PathStepRecord[];
}

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

async function getJson<T>(url: string): Promise<T> {
  const resp = await fetch(url);
  const body = await resp.text();
  if (!resp.ok) {
    let message = body;
    try {
      message = (JSON.parse(body) as { error?: string }).error ?? body;
    } catch {
      // keep raw body
    }
    throw new ApiError(resp.status, message);
  }
  return JSON.parse(body) as T;
}

export class ApiClient {
  constructor(readonly base: string = "") {}

  game(idOrName: string | number): Promise<GameRecord> {
    return getJson(`${this.base}/api/games/${encodeURIComponent(String(idOrName))}`);
  }

  neighbors(idOrName: string | number, moves = "all"): Promise<NeighborRecord[]> {
    const key = encodeURIComponent(String(idOrName));
    return getJson(`${this.base}/api/games/${key}/neighbors?moves=${moves}`);
  }

  async path(
    from: string,
    goal: string,
    moves = "adjacent",
    costs = "uniform",
  ): Promise<PathRecord> {
    const resp = await fetch(`${this.base}/api/path`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ from, goal, moves, costs }),
    });
    const body = await resp.text();
    if (!resp.ok) {
      let message = body;
      try {
        message = (JSON.parse(body) as { error?: string }).error ?? body;
      } catch {
        // keep raw body
      }
      throw new ApiError(resp.status, message);
    }
    return JSON.parse(body) as PathRecord;
  }
}
