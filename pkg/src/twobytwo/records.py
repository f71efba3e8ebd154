"""Machine-readable record form of games and classifications.

The same records back the CLI's ``--format records`` output and the HTTP
service's JSON responses, so the two surfaces agree byte-for-byte once
serialized with sorted keys.  All numbers are integers except mixed-strategy
probabilities, which are exact fraction strings to avoid float drift.
"""

from __future__ import annotations

import json
from typing import Iterable

from .atlas import Atlas
from .classify import (
    Classification,
    NoInteriorEquilibrium,
    classify,
    mixed_equilibrium,
)
from .core import CELLS, Game, format_game
from .naming import common_names, coordinate_name, display_name
from .topology import DEFAULT_MOVES, MoveKind, layer_set, neighbors

_ROW_STRATEGIES = ("up", "down")
_COL_STRATEGIES = ("left", "right")


def _cells(cells) -> list[str]:
    return [c.name for c in CELLS if c in cells]


def classification_record(g: Game) -> dict:
    c: Classification = classify(g)
    record = {
        "nash_weak": _cells(c.nash_weak),
        "nash_strict": _cells(c.nash_strict),
        "family": c.family.value,
        "subfamily": c.subfamily.value,
        "fixed_rank_sum": c.fixed_rank_sum,
        "pareto_optimal": _cells(c.pareto_optimal),
        "mutually_pareto_optimal": _cells(c.mutually_pareto_optimal),
        "row": _player_record(c, row=True),
        "column": _player_record(c, row=False),
    }
    if not c.nash_strict:
        try:
            m = mixed_equilibrium(g)
            record["mixed_strategy"] = {
                "p_up": str(m.p_up),
                "q_left": str(m.q_left),
                "expected": [str(m.expected[0]), str(m.expected[1])],
                "cardinal_caveat": True,
            }
        except NoInteriorEquilibrium:
            pass
    return record


def _player_record(c: Classification, row: bool) -> dict:
    facts = c.row if row else c.column
    names = _ROW_STRATEGIES if row else _COL_STRATEGIES
    return {
        "dominance": facts.dominance.value,
        "dominant_strategy": None
        if facts.dominant_strategy is None
        else names[facts.dominant_strategy],
        "maximin": [names[s] for s in facts.maximin],
        "degenerate": facts.degenerate,
        "inducement": facts.inducement.value,
    }


def game_record(
    atlas: Atlas, g: Game, move_set: frozenset[MoveKind] = DEFAULT_MOVES
) -> dict:
    game_id = atlas.id_of(g)
    canonical = atlas.games[game_id]
    name = coordinate_name(canonical)
    return {
        "id": game_id,
        "encoding": format_game(canonical),
        "name": name.text,
        "display_name": display_name(canonical),
        "common_names": [
            {"names": list(e.names), "tags": list(e.tags)}
            for e in common_names(canonical)
        ],
        "tie_classes": {
            "row": canonical.row.tie_class.value,
            "column": canonical.column.tie_class.value,
        },
        "layers": sorted(l.value for l in layer_set(canonical)),
        "classification": classification_record(canonical),
        "neighbors": [
            {
                "move": str(move),
                "id": atlas.id_of(h),
                "encoding": format_game(h),
                "name": coordinate_name(h).text,
            }
            for move, h in neighbors(canonical, move_set)
        ],
    }


def dumps(record) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def dump_lines(records: Iterable[dict]) -> str:
    return "\n".join(dumps(r) for r in records) + "\n"
