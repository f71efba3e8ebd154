"""Command-line interface.

Games are accepted as encodings ("1324/4321"), coordinate names ("sd-sd"),
common names ("Prisoner's Dilemma"), or atlas ids.  Exit codes: 0 success,
2 unknown game/name/move/goal, 3 internal self-check failure.
"""

from __future__ import annotations

import argparse
import sys

from . import atlas as atlas_mod
from .atlas import Equivalence, build_atlas
from .classify import census, census_records, render_census, special_sets
from .core import Game, ParseError, format_game, parse_game
from .naming import (
    UnknownCode,
    common_names,
    coordinate_name,
    display_name,
    lookup_common_name,
    parse_name,
)
from .records import dump_lines, dumps, game_record
from .topology import (
    ADJACENT_SWAPS,
    ALL_MOVES,
    HALF_SWAPS,
    NON_ADJACENT_SWAPS,
    CostModel,
    MoveKind,
    MoveNotApplicable,
    NoPath,
    apply_swap,
    format_path,
    goal_from_text,
    neighbors,
    parse_move,
    path_records,
    shortest_path,
)


class UserError(Exception):
    """Bad input from the user: unknown game, name, move, or goal."""


MOVE_SETS = {
    "adjacent": ADJACENT_SWAPS,
    "swaps": ADJACENT_SWAPS | NON_ADJACENT_SWAPS,
    "half": HALF_SWAPS,
    "adjacent+half": ADJACENT_SWAPS | HALF_SWAPS,
    "all": ALL_MOVES,
}


def resolve_move_set(text: str) -> frozenset[MoveKind]:
    if text in MOVE_SETS:
        return MOVE_SETS[text]
    kinds = set()
    for token in text.split(","):
        try:
            kinds.add(MoveKind(token.strip()))
        except ValueError:
            raise UserError(f"unknown move set or kind {token.strip()!r}") from None
    return frozenset(kinds)


def resolve_game(atlas, text: str) -> Game:
    text = text.strip()
    if "/" in text:
        try:
            return atlas.games[atlas.id_of(parse_game(text))]
        except ParseError as e:
            raise UserError(str(e)) from None
    if text.isdigit():
        game_id = int(text)
        if game_id >= len(atlas.games):
            raise UserError(f"id {game_id} out of range (atlas has {len(atlas.games)})")
        return atlas.games[game_id]
    try:
        return parse_name(text)
    except UnknownCode:
        pass
    found = lookup_common_name(text)
    if found is None:
        raise UserError(f"unknown game {text!r}")
    return atlas.games[atlas.id_of(found)]


def _universe(atlas, which: str):
    if which == "strict":
        return atlas.strict_games()
    if which == "complete":
        return atlas.games
    raise UserError(f"unknown set {which!r} (use strict or complete)")


def cmd_census(args, out) -> int:
    atlas = build_atlas()
    games = _universe(atlas, args.set)
    result = census(games)
    if args.format == "records":
        out.write(dump_lines(census_records(result)))
    else:
        out.write(render_census(result) + "\n")
        if args.set == "strict":
            sets = special_sets(games)
            out.write("\nspecial sets:\n")
            for key in sorted(sets):
                out.write(f"  {key:<30}{len(sets[key]):>4}\n")
    return 0


def cmd_classify(args, out) -> int:
    atlas = build_atlas()
    g = resolve_game(atlas, args.game)
    record = game_record(atlas, g)
    if args.format == "records":
        out.write(dumps(record) + "\n")
        return 0
    c = record["classification"]
    out.write(f"game:       {record['encoding']}  ({record['name']})\n")
    if record["display_name"] != record["name"]:
        out.write(f"known as:   {record['display_name']}\n")
    names = [n for e in record["common_names"] for n in e["names"]]
    if len(names) > 1:
        out.write(f"aliases:    {'; '.join(names[1:])}\n")
    out.write(f"ties:       row={record['tie_classes']['row']} column={record['tie_classes']['column']}\n")
    out.write(f"layers:     {', '.join(record['layers']) or 'none'}\n")
    out.write(f"family:     {c['family']} / {c['subfamily']}\n")
    out.write(f"nash weak:  {', '.join(c['nash_weak']) or 'none'}\n")
    out.write(f"nash strict:{' ' + (', '.join(c['nash_strict']) or 'none')}\n")
    for side in ("row", "column"):
        p = c[side]
        dom = p["dominance"]
        if p["dominant_strategy"]:
            dom += f" ({p['dominant_strategy']})"
        out.write(
            f"{side}:{' ' * (11 - len(side))}dominance={dom} maximin={','.join(p['maximin'])} "
            f"inducement={p['inducement']}"
            + (" degenerate" if p["degenerate"] else "")
            + "\n"
        )
    if c["fixed_rank_sum"]:
        out.write("fixed rank-sum game\n")
    if "mixed_strategy" in c:
        m = c["mixed_strategy"]
        out.write(
            f"mixed:      P(up)={m['p_up']} P(left)={m['q_left']} "
            f"expected=({m['expected'][0]}, {m['expected'][1]}) [ranks read as cardinal]\n"
        )
    return 0


def cmd_neighbors(args, out) -> int:
    atlas = build_atlas()
    g = resolve_game(atlas, args.game)
    move_set = resolve_move_set(args.moves)
    rows = neighbors(g, move_set)
    if args.format == "records":
        out.write(dumps(game_record(atlas, g, move_set)["neighbors"]) + "\n")
        return 0
    out.write(f"{format_game(g)}  ({coordinate_name(g).text})\n")
    for move, h in rows:
        out.write(f"  {str(move):<24} -> {format_game(h)}  [{display_name(h)}]\n")
    return 0


def cmd_swap(args, out) -> int:
    atlas = build_atlas()
    g = resolve_game(atlas, args.game)
    try:
        move = parse_move(args.move)
        result = apply_swap(g, move)
    except MoveNotApplicable as e:
        raise UserError(str(e)) from None
    if args.format == "records":
        out.write(dumps(game_record(atlas, result)) + "\n")
    else:
        out.write(f"{format_game(result)}  ({coordinate_name(result).text})"
                  f"  [{display_name(result)}]\n")
    return 0


def cmd_path(args, out) -> int:
    atlas = build_atlas()
    g = resolve_game(atlas, args.game)
    try:
        goal = goal_from_text(args.goal)
    except (ValueError, UnknownCode) as e:
        raise UserError(str(e)) from None
    move_set = resolve_move_set(args.moves)
    cost_model = CostModel.graded() if args.costs == "graded" else CostModel.uniform()
    try:
        path = shortest_path(g, goal, move_set, cost_model)
    except NoPath as e:
        raise UserError(f"{e} (explored {e.explored} games)") from None
    if args.format == "records":
        out.write(dumps(path_records(path)) + "\n")
    else:
        out.write(format_path(path) + "\n")
    return 0


def cmd_enumerate(args, out) -> int:
    atlas = build_atlas()
    if args.format == "atlas":
        out.write(atlas.export_text())
        return 0
    equivalence = (
        Equivalence.INTERCHANGE_REFLECTION
        if args.equiv == "reflection"
        else Equivalence.INTERCHANGE
    )
    class_filter = None
    if args.cls:
        from .core import TieClass

        try:
            cls = TieClass(args.cls)
        except ValueError:
            raise UserError(f"unknown tie class {args.cls!r}") from None
        class_filter = (cls, cls)
    games = atlas_mod.enumerate_games(class_filter, equivalence)
    if args.format == "records":
        out.write(dump_lines({"encoding": format_game(g)} for g in games))
        return 0
    for g in games:
        out.write(format_game(g) + "\n")
    out.write(f"total\t{len(games)}\n")
    return 0


def cmd_name(args, out) -> int:
    atlas = build_atlas()
    g = resolve_game(atlas, args.game)
    name = coordinate_name(g)
    if args.format == "records":
        record = {
            "encoding": format_game(g),
            "name": name.text,
            "interchanged": name.interchanged,
            "common_names": [
                {"names": list(e.names), "tags": list(e.tags)} for e in common_names(g)
            ],
        }
        out.write(dumps(record) + "\n")
        return 0
    out.write(f"{name.marked_text}\n")
    for entry in common_names(g):
        tags = f"  ({'; '.join(entry.tags)})" if entry.tags else ""
        out.write(f"  {'; '.join(entry.names)}{tags}\n")
    return 0


def cmd_chart(args, out) -> int:
    from .chart import layout_complete, layout_strict, render

    atlas = build_atlas()
    layout = layout_strict(atlas) if args.which == "strict" else layout_complete(atlas)
    try:
        text = render(layout, args.format)
    except ValueError as e:
        raise UserError(str(e)) from None
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(text)
        out.write(f"wrote {args.output}\n")
    else:
        out.write(text)
    return 0


def cmd_serve(args, out) -> int:
    from .service import serve

    serve(port=args.port, announce=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twobytwo",
        description="The topology of 2x2 ordinal games: census, swaps, paths, charts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, choices=("text", "records")):
        p.add_argument("--format", choices=choices, default=choices[0])

    p = sub.add_parser("census", help="family and subfamily counts")
    p.add_argument("--set", choices=("strict", "complete"), default="strict")
    add_format(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("classify", help="equilibria, dominance, family of one game")
    p.add_argument("game")
    add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("neighbors", help="games one move away")
    p.add_argument("game")
    p.add_argument("--moves", default="adjacent")
    add_format(p)
    p.set_defaults(func=cmd_neighbors)

    p = sub.add_parser("swap", help="apply one move to a game")
    p.add_argument("game")
    p.add_argument("move", help="e.g. high34:row, tie-low:column, break-low:row:UL")
    add_format(p)
    p.set_defaults(func=cmd_swap)

    p = sub.add_parser("path", help="shortest transformation path to a goal")
    p.add_argument("game")
    p.add_argument("--goal", required=True, help="family:win-win, game:sn-sn, layer:l3, ...")
    p.add_argument("--moves", default="adjacent")
    p.add_argument("--costs", choices=("uniform", "graded"), default="uniform")
    add_format(p)
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("enumerate", help="list canonical games")
    p.add_argument("--class", dest="cls", default=None, help="restrict to one tie class")
    p.add_argument("--equiv", choices=("interchange", "reflection"), default="interchange")
    add_format(p, choices=("text", "records", "atlas"))
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("name", help="coordinate name and known aliases")
    p.add_argument("game")
    add_format(p)
    p.set_defaults(func=cmd_name)

    p = sub.add_parser("chart", help="render the topology chart")
    p.add_argument("--which", choices=("strict", "complete"), default="strict")
    p.add_argument("--format", choices=("svg", "dot"), default="svg")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_chart)

    p = sub.add_parser("serve", help="start the read-only JSON service")
    p.add_argument("--port", type=int, default=8224)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UserError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except AssertionError as e:
        print(f"internal invariant breach: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
