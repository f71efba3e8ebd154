"""Payoff-swap moves, the neighbor graph, tiles and layers, path search.

Moves come in three flavors.  Adjacent swaps exchange consecutive ranks
(1-2, 2-3, 3-4) for one player; non-adjacent swaps (1-3, 2-4, 1-4) model
larger payoff jumps and are off by default.  Half swaps make or break ties,
stepping between preference classes.  A rank swap needs both ranks present
exactly once, which is what keeps full swaps inside a class.

Every move result is re-canonicalized, so walks stay inside the atlas.
Search is uniform-cost with a total, documented tie-break, making witness
paths reproducible.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .classify import Player, classify
from .core import (
    CellIndex,
    Game,
    PlayerPattern,
    canonical_game,
    format_game,
    pattern,
    renormalize_levels,
)


class MoveNotApplicable(ValueError):
    """The move's ranks or ties are not present in the pattern."""


class InvalidTarget(ValueError):
    """break_tie target cell is not part of the named tie."""


class NoPath(ValueError):
    def __init__(self, message: str, explored: int):
        super().__init__(message)
        self.explored = explored


class NonStrictGame(ValueError):
    """Strict-only structure (layer, tile) asked of a game with ties."""


class MoveKind(Enum):
    LOW12 = "low12"
    MID23 = "mid23"
    HIGH34 = "high34"
    X13 = "x13"
    X24 = "x24"
    X14 = "x14"
    MAKE_TIE = "make-tie"
    BREAK_TIE = "break-tie"


_SWAP_RANKS = {
    MoveKind.LOW12: (1, 2),
    MoveKind.MID23: (2, 3),
    MoveKind.HIGH34: (3, 4),
    MoveKind.X13: (1, 3),
    MoveKind.X24: (2, 4),
    MoveKind.X14: (1, 4),
}


class TieLevel(Enum):
    LOW = "low"
    MID = "mid"
    HIGH = "high"


ADJACENT_SWAPS = frozenset({MoveKind.LOW12, MoveKind.MID23, MoveKind.HIGH34})
NON_ADJACENT_SWAPS = frozenset({MoveKind.X13, MoveKind.X24, MoveKind.X14})
HALF_SWAPS = frozenset({MoveKind.MAKE_TIE, MoveKind.BREAK_TIE})
ALL_MOVES = ADJACENT_SWAPS | NON_ADJACENT_SWAPS | HALF_SWAPS

#: Non-adjacent swaps are opt-in: treated as costlier, less likely changes.
DEFAULT_MOVES = ADJACENT_SWAPS

_KIND_ORDER = {k: i for i, k in enumerate(MoveKind)}
_PLAYER_ORDER = {Player.ROW: 0, Player.COLUMN: 1}
_LEVEL_ORDER = {None: 0, TieLevel.LOW: 0, TieLevel.MID: 1, TieLevel.HIGH: 2}


@dataclass(frozen=True)
class SwapMove:
    player: Player
    kind: MoveKind
    level: TieLevel | None = None
    target: CellIndex | None = None
    raise_target: bool = True

    def sort_key(self):
        return (
            _KIND_ORDER[self.kind],
            _PLAYER_ORDER[self.player],
            _LEVEL_ORDER[self.level],
            -1 if self.target is None else int(self.target),
            not self.raise_target,
        )

    def __str__(self) -> str:
        if self.kind in _SWAP_RANKS:
            return f"{self.kind.value}:{self.player.value}"
        if self.kind is MoveKind.MAKE_TIE:
            return f"tie-{self.level.value}:{self.player.value}"
        direction = "" if self.raise_target else ":down"
        return f"break-{self.level.value}:{self.player.value}:{self.target.name}{direction}"


def parse_move(text: str) -> SwapMove:
    """Parse the CLI move grammar, e.g. ``high34:row``, ``tie-low:column``,
    ``break-low:row:UL`` (append ``:down`` to demote the target)."""
    parts = text.strip().lower().split(":")
    head = parts[0]
    try:
        player = Player(parts[1])
    except (IndexError, ValueError):
        raise MoveNotApplicable(f"move {text!r} lacks a valid player") from None
    kinds = {k.value: k for k in _SWAP_RANKS}
    if head in kinds:
        return SwapMove(player, kinds[head])
    if head.startswith("tie-"):
        return SwapMove(player, MoveKind.MAKE_TIE, TieLevel(head[4:]))
    if head.startswith("break-"):
        if len(parts) < 3:
            raise MoveNotApplicable(f"break move {text!r} needs a target cell")
        target = CellIndex[parts[2].upper()]
        raise_target = not (len(parts) > 3 and parts[3] == "down")
        return SwapMove(player, MoveKind.BREAK_TIE, TieLevel(head[6:]), target, raise_target)
    raise MoveNotApplicable(f"unknown move {text!r}")


# ---------------------------------------------------------------------------
# Applying moves


def _player_pattern(g: Game, player: Player) -> PlayerPattern:
    return g.row if player is Player.ROW else g.column


def _with_pattern(g: Game, player: Player, p: PlayerPattern) -> Game:
    return Game(p, g.column) if player is Player.ROW else Game(g.row, p)


def _swap_pattern_ranks(p: PlayerPattern, a: int, b: int) -> PlayerPattern:
    cells_a, cells_b = p.cells_with(a), p.cells_with(b)
    if len(cells_a) != 1 or len(cells_b) != 1:
        raise MoveNotApplicable(
            f"ranks {a} and {b} must each appear exactly once in {p.encode()}"
        )
    ranks = list(p.ranks)
    ranks[cells_a[0]], ranks[cells_b[0]] = b, a
    return pattern(ranks)


def _levels(p: PlayerPattern) -> list[tuple[CellIndex, ...]]:
    return [cells for _, cells in p.levels()]


def _mergeable_pairs(p: PlayerPattern) -> dict[TieLevel, int]:
    """Map from tie level name to the index of the lower level it merges."""
    k = len(_levels(p))
    if k == 4:
        return {TieLevel.LOW: 0, TieLevel.MID: 1, TieLevel.HIGH: 2}
    if k == 3:
        return {TieLevel.LOW: 0, TieLevel.HIGH: 1}
    if k == 2:
        return {TieLevel.LOW: 0, TieLevel.HIGH: 0}
    return {}


def _make_tie_pattern(p: PlayerPattern, level: TieLevel) -> PlayerPattern:
    pairs = _mergeable_pairs(p)
    if level not in pairs:
        raise MoveNotApplicable(
            f"no adjacent rank levels to merge at {level.value} in {p.encode()}"
        )
    lower = pairs[level]
    levels = _levels(p)
    level_of = [0] * 4
    for idx, cells in enumerate(levels):
        merged_idx = idx if idx <= lower else idx - 1
        for c in cells:
            level_of[c] = merged_idx
    return renormalize_levels(level_of)


def _tied_level_index(p: PlayerPattern, level: TieLevel) -> int:
    levels = _levels(p)
    k = len(levels)
    index = {TieLevel.LOW: 0, TieLevel.HIGH: k - 1}.get(level)
    if level is TieLevel.MID:
        if k != 3:
            raise MoveNotApplicable(f"{p.encode()} has no middle level")
        index = 1
    if len(levels[index]) < 2:
        raise MoveNotApplicable(f"no tie at {level.value} level of {p.encode()}")
    return index


def _break_tie_pattern(
    p: PlayerPattern, level: TieLevel, target: CellIndex, raise_target: bool
) -> PlayerPattern:
    idx = _tied_level_index(p, level)
    levels = _levels(p)
    if target not in levels[idx]:
        raise InvalidTarget(f"cell {target.name} is not in the {level.value} tie")
    level_of = [0] * 4
    for i, cells in enumerate(levels):
        for c in cells:
            base = 2 * i + 1  # leave room to split the target's level
            level_of[c] = base
    level_of[target] += 1 if raise_target else -1
    values = sorted(set(level_of))
    return renormalize_levels([values.index(v) for v in level_of])


def apply_swap(g: Game, move: SwapMove) -> Game:
    """Apply any move to a game; the result is canonical."""
    p = _player_pattern(g, move.player)
    if move.kind in _SWAP_RANKS:
        new = _swap_pattern_ranks(p, *_SWAP_RANKS[move.kind])
    elif move.kind is MoveKind.MAKE_TIE:
        new = _make_tie_pattern(p, move.level)
    elif move.kind is MoveKind.BREAK_TIE:
        new = _break_tie_pattern(p, move.level, move.target, move.raise_target)
    else:  # pragma: no cover
        raise MoveNotApplicable(f"unhandled kind {move.kind}")
    return canonical_game(_with_pattern(g, move.player, new))


def make_tie(g: Game, player: Player, level: TieLevel) -> Game:
    return apply_swap(g, SwapMove(player, MoveKind.MAKE_TIE, level))


def break_tie(
    g: Game, player: Player, level: TieLevel, target: CellIndex, raise_target: bool = True
) -> Game:
    return apply_swap(g, SwapMove(player, MoveKind.BREAK_TIE, level, target, raise_target))


def _applicable_moves(g: Game, move_set: frozenset[MoveKind]) -> list[SwapMove]:
    moves = []
    for player in Player:
        p = _player_pattern(g, player)
        counts = {r: len(p.cells_with(r)) for r in set(p.ranks)}
        for kind in (MoveKind.LOW12, MoveKind.MID23, MoveKind.HIGH34,
                     MoveKind.X13, MoveKind.X24, MoveKind.X14):
            if kind not in move_set:
                continue
            a, b = _SWAP_RANKS[kind]
            if counts.get(a) == 1 and counts.get(b) == 1:
                moves.append(SwapMove(player, kind))
        if MoveKind.MAKE_TIE in move_set:
            for level in _mergeable_pairs(p):
                if level is TieLevel.HIGH and len(_levels(p)) == 2:
                    continue  # same merge as LOW on two-level patterns
                moves.append(SwapMove(player, MoveKind.MAKE_TIE, level))
        if MoveKind.BREAK_TIE in move_set:
            for level in (TieLevel.LOW, TieLevel.MID, TieLevel.HIGH):
                try:
                    idx = _tied_level_index(p, level)
                except MoveNotApplicable:
                    continue
                levels = _levels(p)
                if level is TieLevel.HIGH and idx == 0:
                    continue  # single-level pattern: LOW already covers it
                if level is TieLevel.MID and len(levels) != 3:
                    continue
                tie = levels[idx]
                for target in tie:
                    directions = (True,) if len(tie) == 2 else (True, False)
                    for raise_target in directions:
                        moves.append(
                            SwapMove(player, MoveKind.BREAK_TIE, level, target, raise_target)
                        )
    return sorted(moves, key=SwapMove.sort_key)


def neighbors(
    g: Game, move_set: frozenset[MoveKind] = DEFAULT_MOVES
) -> list[tuple[SwapMove, Game]]:
    """All distinct applicable moves with their (canonical) results."""
    g = canonical_game(g)
    return [(m, apply_swap(g, m)) for m in _applicable_moves(g, move_set)]


# ---------------------------------------------------------------------------
# Layers and tiles


class Layer(Enum):
    L1_DISCORD = "L1-discord"
    L2_COLUMN_ALIGNED = "L2-column-aligned"
    L3_WIN_WIN = "L3-win-win"
    L4_ROW_ALIGNED = "L4-row-aligned"


def _alignment(row_cell: CellIndex, col_cell: CellIndex) -> Layer:
    if row_cell == col_cell:
        return Layer.L3_WIN_WIN
    if row_cell.row == col_cell.row:
        return Layer.L4_ROW_ALIGNED
    if row_cell.column == col_cell.column:
        return Layer.L2_COLUMN_ALIGNED
    return Layer.L1_DISCORD


def layer_set(g: Game) -> frozenset[Layer]:
    """Layers a game touches; tie games with several best payoffs sit between
    layers, the Zero game touches none."""
    return frozenset(
        _alignment(rc, cc)
        for rc in g.row.cells_with(4)
        for cc in g.column.cells_with(4)
    )


def layer_of(g: Game) -> Layer:
    if not g.is_strict:
        raise NonStrictGame(f"{format_game(g)} has ties; use layer_set")
    (layer,) = layer_set(g)
    return layer


def _closure(g: Game, kinds: frozenset[MoveKind]) -> frozenset[Game]:
    seen = {canonical_game(g)}
    frontier = list(seen)
    while frontier:
        current = frontier.pop()
        for _, nxt in neighbors(current, kinds):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return frozenset(seen)


def tile_of(g: Game) -> frozenset[Game]:
    """The tile: closure under lowest-rank swaps (4 games for strict input)."""
    if not g.is_strict:
        raise NonStrictGame(f"{format_game(g)} has ties; tiles are strict structure")
    return _closure(g, frozenset({MoveKind.LOW12}))


def mid_tile_of(g: Game) -> frozenset[Game]:
    """Experimental: closure under middle swaps ("middle tile")."""
    if not g.is_strict:
        raise NonStrictGame(f"{format_game(g)} has ties")
    return _closure(g, frozenset({MoveKind.MID23}))


def high_tile_of(g: Game) -> frozenset[Game]:
    """Experimental: closure under highest swaps ("high tile")."""
    if not g.is_strict:
        raise NonStrictGame(f"{format_game(g)} has ties")
    return _closure(g, frozenset({MoveKind.HIGH34}))


class LinkKind(Enum):
    HOTSPOT = "hotspot"
    PIPE = "pipe"
    SIMPLE = "simple"


@dataclass(frozen=True)
class TileLink:
    kind: LinkKind
    tiles: tuple[frozenset[Game], ...]
    edges: tuple[tuple[Game, Game], ...]

    @property
    def layers(self) -> tuple[Layer, ...]:
        return tuple(sorted({layer_of(next(iter(t))) for t in self.tiles}, key=lambda l: l.value))


def tile_links(strict_games: Iterable[Game]) -> list[TileLink]:
    """Classify every inter-layer highest-swap connection between tiles.

    A hotspot doubly links two tiles (every game has both its high swaps into
    the other tile, 8 edges).  Pipes chain four tiles across the four layers
    with single links (4 edges between adjacent tiles).
    """
    games = [canonical_game(g) for g in strict_games]
    tile_index: dict[Game, int] = {}
    tiles: list[frozenset[Game]] = []
    for g in games:
        if g not in tile_index:
            t = tile_of(g)
            for member in t:
                tile_index[member] = len(tiles)
            tiles.append(t)

    pair_edges: dict[frozenset[int], set[tuple[Game, Game]]] = {}
    for g in games:
        for _, h in neighbors(g, frozenset({MoveKind.HIGH34})):
            key = frozenset((tile_index[g], tile_index[h]))
            edge = tuple(sorted((g, h), key=format_game))
            pair_edges.setdefault(key, set()).add(edge)

    links: list[TileLink] = []
    pipe_adjacency: dict[int, set[int]] = {}
    pipe_pair_edges: dict[frozenset[int], set] = {}
    for key, edges in sorted(pair_edges.items(), key=lambda kv: sorted(kv[0])):
        a, b = sorted(key)
        if len(edges) == 8:
            links.append(
                TileLink(LinkKind.HOTSPOT, (tiles[a], tiles[b]), tuple(sorted(edges)))
            )
        elif len(edges) == 4:
            pipe_adjacency.setdefault(a, set()).add(b)
            pipe_adjacency.setdefault(b, set()).add(a)
            pipe_pair_edges[key] = edges
        else:
            links.append(
                TileLink(LinkKind.SIMPLE, (tiles[a], tiles[b]), tuple(sorted(edges)))
            )

    seen: set[int] = set()
    for start in sorted(pipe_adjacency):
        if start in seen:
            continue
        component = {start}
        frontier = [start]
        while frontier:
            node = frontier.pop()
            for other in pipe_adjacency[node]:
                if other not in component:
                    component.add(other)
                    frontier.append(other)
        seen |= component
        members = tuple(tiles[i] for i in sorted(component))
        edges = tuple(
            sorted(
                edge
                for key, es in pipe_pair_edges.items()
                if key <= component
                for edge in es
            )
        )
        links.append(TileLink(LinkKind.PIPE, members, edges))
    return links


# ---------------------------------------------------------------------------
# Costs, goals, search


@dataclass(frozen=True)
class CostModel:
    weights: Mapping[MoveKind, Fraction]

    def __post_init__(self):
        for kind, w in self.weights.items():
            if w < 0:
                raise ValueError(f"negative cost for {kind}")
        lo, mid, hi = (
            self.weights.get(k)
            for k in (MoveKind.LOW12, MoveKind.MID23, MoveKind.HIGH34)
        )
        if None not in (lo, mid, hi) and not (lo <= mid <= hi):
            raise ValueError("costs must respect low <= mid <= high")

    def cost(self, move: SwapMove) -> Fraction:
        return self.weights[move.kind]

    @classmethod
    def uniform(cls) -> "CostModel":
        return cls({k: Fraction(1) for k in MoveKind})

    @classmethod
    def graded(cls) -> "CostModel":
        """Transaction-cost ordering: cheaper to rearrange low stakes than
        high ones; half swaps count half; non-adjacent swaps cost their
        adjacent-swap decompositions."""
        return cls(
            {
                MoveKind.LOW12: Fraction(1),
                MoveKind.MID23: Fraction(2),
                MoveKind.HIGH34: Fraction(3),
                MoveKind.X13: Fraction(4),
                MoveKind.X24: Fraction(7),
                MoveKind.X14: Fraction(9),
                MoveKind.MAKE_TIE: Fraction(1, 2),
                MoveKind.BREAK_TIE: Fraction(1, 2),
            }
        )


@dataclass(frozen=True)
class Goal:
    """Target predicate for path search: a family, subfamily, layer, or game."""

    kind: str  # "family" | "subfamily" | "layer" | "game"
    value: str

    def matches(self, g: Game) -> bool:
        if self.kind == "game":
            return format_game(g) == self.value
        if self.kind == "family":
            return classify(g).family.value == self.value
        if self.kind == "subfamily":
            return classify(g).subfamily.value == self.value
        if self.kind == "layer":
            return any(l.value == self.value for l in layer_set(g))
        raise ValueError(f"unknown goal kind {self.kind!r}")

    def __str__(self) -> str:
        return f"{self.kind}:{self.value}"


def goal_from_text(text: str) -> Goal:
    from .classify import Family, Subfamily
    from .naming import lookup_common_name, parse_name

    kind, _, value = text.partition(":")
    if not value:
        raise ValueError(f"goal {text!r} must look like kind:value")
    kind = kind.strip().lower()
    value = value.strip()
    if kind == "family":
        return Goal("family", Family(value.lower()).value)
    if kind == "subfamily":
        return Goal("subfamily", Subfamily(value.lower()).value)
    if kind == "layer":
        aliases = {
            "l1": Layer.L1_DISCORD, "discord": Layer.L1_DISCORD,
            "l2": Layer.L2_COLUMN_ALIGNED, "column": Layer.L2_COLUMN_ALIGNED,
            "l3": Layer.L3_WIN_WIN, "win-win": Layer.L3_WIN_WIN,
            "l4": Layer.L4_ROW_ALIGNED, "row": Layer.L4_ROW_ALIGNED,
        }
        layer = aliases.get(value.lower())
        if layer is None:
            layer = Layer(value)
        return Goal("layer", layer.value)
    if kind == "game":
        from .core import ParseError, parse_game

        try:
            target = canonical_game(parse_game(value))
        except ParseError:
            found = lookup_common_name(value)
            target = canonical_game(found) if found else parse_name(value)
        return Goal("game", format_game(target))
    raise ValueError(f"unknown goal kind {kind!r}")


@dataclass(frozen=True)
class Path:
    start: Game
    steps: tuple[tuple[SwapMove, Game], ...]
    cost: Fraction

    @property
    def end(self) -> Game:
        return self.steps[-1][1] if self.steps else self.start

    def __len__(self) -> int:
        return len(self.steps)

    def replay(self) -> Game:
        """Re-apply the moves from the start; must reproduce every step."""
        current = self.start
        for move, expected in self.steps:
            current = apply_swap(current, move)
            if current != expected:
                raise AssertionError(f"replay diverged at {move}")
        return current


def _move_key_tuple(moves: Sequence[SwapMove]) -> tuple:
    return tuple(m.sort_key() for m in moves)


def shortest_path(
    start: Game,
    goal: Goal,
    move_set: frozenset[MoveKind] = DEFAULT_MOVES,
    cost_model: CostModel | None = None,
    universe: frozenset[Game] | None = None,
) -> Path:
    """Minimum-cost path from start to any game satisfying the goal.

    Ties break deterministically by (cost, path length, move order, game
    encoding), so the witness path is stable across runs.
    """
    cost_model = cost_model or CostModel.uniform()
    origin = canonical_game(start)
    counter = 0
    heap = [(Fraction(0), 0, (), format_game(origin), counter, origin, ())]
    settled: set[Game] = set()
    while heap:
        cost, length, move_keys, enc, _, game_, steps = heapq.heappop(heap)
        if game_ in settled:
            continue
        settled.add(game_)
        if goal.matches(game_):
            return Path(origin, steps, cost)
        for move, nxt in neighbors(game_, move_set):
            if nxt in settled:
                continue
            if universe is not None and nxt not in universe:
                continue
            counter += 1
            heapq.heappush(
                heap,
                (
                    cost + cost_model.cost(move),
                    length + 1,
                    move_keys + (move.sort_key(),),
                    format_game(nxt),
                    counter,
                    nxt,
                    steps + ((move, nxt),),
                ),
            )
    raise NoPath(f"no path from {format_game(origin)} to {goal}", explored=len(settled))


_INVERSE_KIND = {
    MoveKind.MAKE_TIE: MoveKind.BREAK_TIE,
    MoveKind.BREAK_TIE: MoveKind.MAKE_TIE,
}


def escape_map(
    goal: Goal,
    move_set: frozenset[MoveKind] = DEFAULT_MOVES,
    cost_model: CostModel | None = None,
    universe: Iterable[Game] | None = None,
) -> dict[Game, Fraction]:
    """Distance-to-goal for every reachable game, by multi-source reverse
    search from the goal set.  Agrees with shortest_path pointwise."""
    cost_model = cost_model or CostModel.uniform()
    if universe is None:
        from .atlas import build_atlas

        universe = build_atlas().games
    members = [canonical_game(g) for g in universe]
    member_set = frozenset(members)

    reverse_set = frozenset(_INVERSE_KIND.get(k, k) for k in move_set)
    dist: dict[Game, Fraction] = {}
    heap = []
    counter = 0
    for g in members:
        if goal.matches(g):
            heap.append((Fraction(0), counter, g))
            counter += 1
    heapq.heapify(heap)
    while heap:
        d, _, game_ = heapq.heappop(heap)
        if game_ in dist:
            continue
        dist[game_] = d
        for reverse_move, prev in neighbors(game_, reverse_set):
            if prev in dist or prev not in member_set:
                continue
            # Cost of the forward move that the reverse step mirrors.
            forward_kind = _INVERSE_KIND.get(reverse_move.kind, reverse_move.kind)
            counter += 1
            heapq.heappush(
                heap, (d + cost_model.weights[forward_kind], counter, prev)
            )
    return dist


def format_path(path: Path) -> str:
    """Text form: start line, then one ``move -> encoding [name]`` per step."""
    from .naming import display_name

    lines = [f"{format_game(path.start)}  [{display_name(path.start)}]"]
    for move, g in path.steps:
        lines.append(f"  {move} -> {format_game(g)}  [{display_name(g)}]")
    lines.append(f"cost: {path.cost}")
    return "\n".join(lines)


def path_records(path: Path) -> dict:
    """Machine-readable form of a path."""
    from .naming import coordinate_name

    return {
        "start": format_game(path.start),
        "cost": str(path.cost),
        "steps": [
            {
                "move": str(move),
                "encoding": format_game(g),
                "name": coordinate_name(g).text,
            }
            for move, g in path.steps
        ],
    }
