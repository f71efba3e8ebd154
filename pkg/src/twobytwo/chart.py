"""Deterministic chart layouts and SVG/DOT rendering.

The strict chart assembles the four 36-game layers into a 12x12 display with
Prisoner's Dilemma scrolled to the center: discord layer in the southwest
quadrant, win-win in the northeast, the column- and row-aligned layers in the
other two corners.  Rows of a panel share the row player's pattern and
columns the column player's pattern, in the alternating low/middle swap
order, so grid neighbors differ by exactly one swap and the symmetric games
run along the southwest-northeast diagonal.

The complete chart covers all 1,413 games on one grid: the Zero game at the
origin, the two-rank "archetypal" classes and high ties in the low quadrant,
and the strict/low/middle classes interleaved checkerboard-style in the high
quadrant.  Games whose orbit spans several grid cells are placed once at
their first cell; the other cells become cross-references.

Rendering is pure string assembly: identical inputs give identical bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

from .atlas import Atlas, symmetric_catalog
from .classify import classify
from .core import (
    INTERCHANGE_TRANSFORMS,
    CellIndex,
    Game,
    TieClass,
    apply_transform,
    canonical_game,
    format_game,
    pattern,
)
from .naming import coordinate_name
from .topology import ADJACENT_SWAPS, MoveKind, neighbors

#: Fixed style table; charts are meant to be comparable across runs.
FAMILY_COLORS = {
    "win-win": "#8dd3a8",
    "biased": "#a8c8e8",
    "second-best": "#d8c8e8",
    "unfair": "#f0c898",
    "pd-family": "#f0a0a0",
    "cyclic": "#e8e8a0",
    "indeterminate": "#d0d0d0",
}

#: Strict row-pattern codes in display order for the two pattern cycles.
_DISCORD_CODES = ("sc", "sb", "sr", "sm", "sk", "sd")
_WINWIN_CODES = ("su", "sa", "so", "sp", "sh", "sn")


class Panel(Enum):
    L1 = "L1-discord"
    L2 = "L2-column-aligned"
    L3 = "L3-win-win"
    L4 = "L4-row-aligned"
    INTERLACED = "interlaced"
    ARCHETYPAL = "archetypal"
    MIXED_ROW = "archetypal-row"
    MIXED_COLUMN = "archetypal-column"


@dataclass(frozen=True)
class Placement:
    panel: Panel
    x: int
    y: int


@dataclass(frozen=True)
class ChartLayout:
    which: str  # "strict" | "complete"
    size: tuple[int, int]
    cells: Mapping[int, Placement]  # game id -> grid cell
    cross_references: Mapping[tuple[int, int], int]  # extra cell -> game id
    atlas: Atlas

    def game_at(self, x: int, y: int) -> int | None:
        for game_id, p in self.cells.items():
            if (p.x, p.y) == (x, y):
                return game_id
        return None


def _code_rows(codes: Iterable[str]) -> list[tuple[int, ...]]:
    catalog = symmetric_catalog()
    return [catalog.by_code(c).row_ranks for c in codes]


def _code_cols(codes: Iterable[str]) -> list[tuple[int, ...]]:
    catalog = symmetric_catalog()
    return [catalog.by_code(c).col_ranks for c in codes]


def layout_strict(atlas: Atlas) -> ChartLayout:
    """The four-layer 12x12 display with PD at the center four."""
    discord_rows = _code_rows(_DISCORD_CODES)
    winwin_rows = _code_rows(_WINWIN_CODES)
    discord_cols = _code_cols(_DISCORD_CODES)
    winwin_cols = _code_cols(_WINWIN_CODES)

    row_axis = discord_rows + winwin_rows  # y = 1..12, bottom to top
    col_axis = discord_cols + winwin_cols  # x = 1..12, left to right
    panel_of = {
        (False, False): Panel.L1,
        (False, True): Panel.L2,
        (True, False): Panel.L4,
        (True, True): Panel.L3,
    }
    cells: dict[int, Placement] = {}
    for y, row_ranks in enumerate(row_axis, start=1):
        for x, col_ranks in enumerate(col_axis, start=1):
            g = canonical_game(Game(pattern(row_ranks), pattern(col_ranks)))
            panel = panel_of[(y > 6, x > 6)]
            cells[atlas.id_of(g)] = Placement(panel, x, y)
    return ChartLayout("strict", (12, 12), cells, {}, atlas)


# Axis blocks for the complete chart: the Zero pattern, then the two-rank
# and high-tie classes (every pattern, lexicographic), then the interlaced
# strict/low/middle display patterns.
_INTERLACED_ROW_CODES = (
    "sd", "ld", "sc", "mb", "sb", "lb", "sr", "mm", "sm", "lk", "sk", "mk",
    "sn", "ln", "su", "mu", "sa", "lo", "so", "mp", "sp", "lh", "sh", "mh",
)


def _class_patterns_lex(cls: TieClass) -> list[tuple[int, ...]]:
    from .atlas import enumerate_patterns

    return sorted(p.ranks for p in enumerate_patterns()[cls])


def _complete_axes() -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    multi = (
        [(0, 0, 0, 0)]
        + _class_patterns_lex(TieClass.BASIC)
        + _class_patterns_lex(TieClass.TRIPLE)
        + _class_patterns_lex(TieClass.DOUBLE)
        + _class_patterns_lex(TieClass.HIGH_TIES)
    )
    rows = multi + _code_rows(_INTERLACED_ROW_CODES)
    cols = multi + _code_cols(_INTERLACED_ROW_CODES)
    return rows, cols


def layout_complete(atlas: Atlas) -> ChartLayout:
    """All 1,413 games on a 51x51 grid; duplicates become cross-references."""
    rows, cols = _complete_axes()
    row_index = {p: i + 1 for i, p in enumerate(rows)}
    col_index = {p: i + 1 for i, p in enumerate(cols)}
    boundary = 28  # first interlaced axis position

    cells: dict[int, Placement] = {}
    cross: dict[tuple[int, int], int] = {}
    for game_id, g in enumerate(atlas.games):
        spots = set()
        for t in INTERCHANGE_TRANSFORMS:
            v = apply_transform(g, t)
            y = row_index.get(v.row.ranks)
            x = col_index.get(v.column.ranks)
            if x is not None and y is not None:
                spots.add((y, x))
        if not spots:
            raise AssertionError(f"unplaceable game {format_game(g)}")
        home_y, home_x = min(spots)
        panel = {
            (True, True): Panel.INTERLACED,
            (True, False): Panel.MIXED_ROW,
            (False, True): Panel.MIXED_COLUMN,
            (False, False): Panel.ARCHETYPAL,
        }[(home_y >= boundary, home_x >= boundary)]
        cells[game_id] = Placement(panel, home_x, home_y)
        for y, x in spots - {(home_y, home_x)}:
            cross[(x, y)] = game_id
    return ChartLayout("complete", (51, 51), cells, cross, atlas)


# ---------------------------------------------------------------------------
# Rendering


_CELL = 72  # px per game cell
_PAYOFF_POS = {
    CellIndex.UL: (0.26, 0.30),
    CellIndex.UR: (0.74, 0.30),
    CellIndex.DL: (0.26, 0.78),
    CellIndex.DR: (0.74, 0.78),
}


def _svg_cell(g: Game, name: str, px: float, py: float, compact: bool) -> list[str]:
    c = classify(g)
    color = FAMILY_COLORS[c.family.value]
    out = [
        f'<g id="{name}" class="game family-{c.family.value}" '
        f'transform="translate({px:g},{py:g})">',
        f'<rect width="{_CELL}" height="{_CELL}" fill="{color}" stroke="#444" stroke-width="0.5"/>',
    ]
    if compact:
        out.append(
            f'<text x="{_CELL/2:g}" y="{_CELL/2:g}" class="enc" text-anchor="middle">'
            f"{format_game(g)}</text>"
        )
        out.append("</g>")
        return out
    for cell in CellIndex:
        fx, fy = _PAYOFF_POS[cell]
        x, y = fx * _CELL, fy * _CELL
        r, col = g.payoffs(cell)
        classes = ["payoff"]
        if cell in c.pareto_optimal:
            classes.append("pareto")
        if cell in c.nash_weak:
            out.append(
                f'<circle cx="{x:g}" cy="{y - 4:g}" r="9" class="nash" fill="none" '
                f'stroke="#222" stroke-width="{1.6 if cell in c.nash_strict else 0.8:g}"/>'
            )
        if cell.row in c.row.maximin and cell.column in c.column.maximin:
            out.append(
                f'<rect x="{x - 11:g}" y="{y - 13:g}" width="22" height="18" class="maximin" '
                f'fill="none" stroke="#666" stroke-width="0.6" stroke-dasharray="2,1"/>'
            )
        out.append(
            f'<text x="{x:g}" y="{y:g}" class="{" ".join(classes)}" '
            f'text-anchor="middle">{r},{col}</text>'
        )
    out.append(
        f'<text x="{_CELL/2:g}" y="{_CELL - 4:g}" class="label" text-anchor="middle">'
        f"{name}</text>"
    )
    out.append("</g>")
    return out


_SVG_STYLE = (
    "text{font-family:monospace;font-size:10px}"
    ".payoff.pareto{font-weight:bold}"
    ".label{font-size:8px;fill:#333}"
    ".enc{font-size:7px}"
)


def render_svg(layout: ChartLayout) -> str:
    """One group per game cell with payoffs and equilibrium glyphs; element
    ids are coordinate names.  Byte-deterministic."""
    width, height = layout.size
    compact = layout.which == "complete"
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width * _CELL}" '
        f'height="{height * _CELL}" viewBox="0 0 {width * _CELL} {height * _CELL}">',
        f"<style>{_SVG_STYLE}</style>",
    ]
    ordered = sorted(
        layout.cells.items(), key=lambda kv: (kv[1].y, kv[1].x)
    )
    for game_id, p in ordered:
        g = layout.atlas.games[game_id]
        name = coordinate_name(g).text
        px = (p.x - 1) * _CELL
        py = (height - p.y) * _CELL  # y grows upward in chart coordinates
        lines.extend(_svg_cell(g, name, px, py, compact))
    for (x, y), game_id in sorted(layout.cross_references.items()):
        g = layout.atlas.games[game_id]
        px, py = (x - 1) * _CELL, (height - y) * _CELL
        lines.append(
            f'<text x="{px + _CELL/2:g}" y="{py + _CELL/2:g}" class="crossref" '
            f'text-anchor="middle">&#8594;{coordinate_name(g).text}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


_EDGE_STYLE = {
    MoveKind.LOW12: "solid",
    MoveKind.MID23: "dashed",
    MoveKind.HIGH34: "bold",
    MoveKind.X13: "dotted",
    MoveKind.X24: "dotted",
    MoveKind.X14: "dotted",
    MoveKind.MAKE_TIE: "dotted",
    MoveKind.BREAK_TIE: "dotted",
}


def render_dot(layout: ChartLayout, move_set=ADJACENT_SWAPS) -> str:
    """Graphviz graph: nodes are games, edges the selected moves."""
    games = [layout.atlas.games[i] for i in sorted(layout.cells)]
    node_lines = []
    for g in games:
        name = coordinate_name(g).text
        c = classify(g)
        node_lines.append(
            f'  "{name}" [label="{name}\\n{format_game(g)}" '
            f'style=filled fillcolor="{FAMILY_COLORS[c.family.value]}"];'
        )
    member = set(games)
    edges = set()
    for g in games:
        for move, h in neighbors(g, frozenset(move_set)):
            if h not in member:
                continue
            a, b = sorted((coordinate_name(g).text, coordinate_name(h).text))
            edges.add((a, b, _EDGE_STYLE[move.kind]))
    edge_lines = [
        f'  "{a}" -- "{b}" [style={style}];' for a, b, style in sorted(edges)
    ]
    return "\n".join(
        ["graph topology {", "  node [shape=box fontname=monospace];"]
        + sorted(node_lines)
        + edge_lines
        + ["}"]
    ) + "\n"


def render(layout: ChartLayout, fmt: str) -> str:
    if fmt == "svg":
        return render_svg(layout)
    if fmt == "dot":
        return render_dot(layout)
    raise ValueError(f"unknown chart format {fmt!r}")
