"""Exhaustive enumeration of patterns and games, orbit counting, the Atlas.

The raw universe is tiny: 75 patterns per player, 5,625 ordered pattern
pairs.  Everything here is generated eagerly and kept immutable.  Counted
universes: 1,413 games up to row/column interchange (144 strict), 726 when
reflections are also identified (78 strict).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from .core import (
    ALL_TRANSFORMS,
    INTERCHANGE_TRANSFORMS,
    Game,
    PlayerPattern,
    TieClass,
    apply_transform,
    canonical_game,
    canonical_game_with_reflection,
    format_game,
    is_symmetric,
    parse_game,
    pattern,
)


class Equivalence(Enum):
    INTERCHANGE = "interchange"
    INTERCHANGE_REFLECTION = "interchange+reflection"


#: Per-player pattern counts per tie class (sums to 75).
EXPECTED_CLASS_COUNTS = {
    TieClass.STRICT: 24,
    TieClass.LOW_TIES: 12,
    TieClass.MIDDLE_TIES: 12,
    TieClass.HIGH_TIES: 12,
    TieClass.TRIPLE: 4,
    TieClass.DOUBLE: 6,
    TieClass.BASIC: 4,
    TieClass.ZERO: 1,
}


@lru_cache(maxsize=1)
def enumerate_patterns() -> dict[TieClass, tuple[PlayerPattern, ...]]:
    """All 75 player patterns, grouped by tie class."""
    groups: dict[TieClass, list[PlayerPattern]] = {c: [] for c in TieClass}
    for cls in TieClass:
        seen = set()
        for perm in itertools.permutations(cls.multiset):
            if perm in seen:
                continue
            seen.add(perm)
            groups[cls].append(PlayerPattern(perm))
        groups[cls].sort()
    return {c: tuple(ps) for c, ps in groups.items()}


@lru_cache(maxsize=1)
def all_patterns() -> tuple[PlayerPattern, ...]:
    return tuple(p for ps in enumerate_patterns().values() for p in ps)


def raw_games(
    class_filter: tuple[TieClass, TieClass] | None = None,
) -> list[Game]:
    """All ordered pattern pairs, optionally restricted to a class pair.

    A class-pair filter keeps games whose {row class, column class} matches
    the unordered pair, so both role assignments are included.
    """
    patterns = all_patterns()
    if class_filter is None:
        return [Game(r, c) for r, c in itertools.product(patterns, repeat=2)]
    wanted = frozenset(class_filter) if class_filter[0] != class_filter[1] else None
    games = []
    for r, c in itertools.product(patterns, repeat=2):
        if wanted is None:
            if r.tie_class is class_filter[0] and c.tie_class is class_filter[0]:
                games.append(Game(r, c))
        elif {r.tie_class, c.tie_class} == wanted:
            games.append(Game(r, c))
    return games


def enumerate_games(
    class_filter: tuple[TieClass, TieClass] | None = None,
    equivalence: Equivalence = Equivalence.INTERCHANGE,
) -> list[Game]:
    """One canonical representative per orbit, sorted by encoding."""
    rep = (
        canonical_game
        if equivalence is Equivalence.INTERCHANGE
        else canonical_game_with_reflection
    )
    return sorted({rep(g) for g in raw_games(class_filter)}, key=format_game)


def orbit_count_oracle(
    equivalence: Equivalence = Equivalence.INTERCHANGE,
    class_filter: tuple[TieClass, TieClass] | None = None,
) -> int:
    """Burnside orbit count: average the fixed-point counts of each group
    element over the raw pairs, without constructing any orbit."""
    transforms = (
        INTERCHANGE_TRANSFORMS
        if equivalence is Equivalence.INTERCHANGE
        else ALL_TRANSFORMS
    )
    games = raw_games(class_filter)
    total = 0
    for t in transforms:
        total += sum(1 for g in games if apply_transform(g, t) == g)
    count, rem = divmod(total, len(transforms))
    if rem:
        raise AssertionError("fixed-point total not divisible by group order")
    return count


# ---------------------------------------------------------------------------
# Symmetric catalog

# Strict symmetric games in chart-diagonal order.  Each layer's six row
# patterns form a cycle under alternating lowest/middle swaps; the discord
# cycle starts at Prisoner's Dilemma, the win-win cycle at No Conflict.
_DISCORD_CYCLE_START = (1, 3, 2, 4)  # sd
_WINWIN_CYCLE_START = (2, 4, 1, 3)  # sn


def _swap_ranks(ranks: tuple[int, ...], a: int, b: int) -> tuple[int, ...]:
    return tuple(b if r == a else a if r == b else r for r in ranks)


def _strict_cycle(start: tuple[int, ...]) -> list[tuple[int, ...]]:
    out = [start]
    for low_first in (True, False, True, False, True):
        prev = out[-1]
        out.append(_swap_ranks(prev, 1, 2) if low_first else _swap_ranks(prev, 2, 3))
    return out


def _tie(ranks: tuple[int, ...], low: int, high: int) -> tuple[int, ...]:
    """Merge the two rank levels [low, high] and renormalize."""
    from .core import renormalize_levels

    merged = [min(r, low) if r in (low, high) else r for r in ranks]
    values = sorted(set(merged))
    return renormalize_levels([values.index(v) for v in merged]).ranks


def _mirror(ranks: tuple[int, ...]) -> tuple[int, ...]:
    # Column pattern of the symmetric game with this row pattern: reflect
    # across the UR-DL diagonal (swap the UL and DR entries).
    return (ranks[3], ranks[1], ranks[2], ranks[0])


@dataclass(frozen=True)
class CatalogEntry:
    code: str
    index: int
    row_ranks: tuple[int, int, int, int]
    col_ranks: tuple[int, int, int, int]
    names: tuple[str, ...]
    equal_to: str | None = None  # interchanged duplicate of an earlier code

    @property
    def display_game(self) -> Game:
        return Game(pattern(self.row_ranks), pattern(self.col_ranks))

    @property
    def game(self) -> Game:
        return canonical_game(self.display_game)


@dataclass(frozen=True)
class SymmetricCatalog:
    """The symmetric ordinal games with their two-letter codes.

    ``entries`` lists all 47 codes of the diagonal display, including the
    interchanged duplicates needed to generate high- and double-tie games;
    ``distinct`` collapses those to the 38 distinct games.
    """

    entries: tuple[CatalogEntry, ...]

    @property
    def distinct(self) -> tuple[CatalogEntry, ...]:
        return tuple(e for e in self.entries if e.equal_to is None)

    def by_code(self, code: str) -> CatalogEntry:
        try:
            return _CATALOG_BY_CODE[code]
        except KeyError:
            raise KeyError(f"unknown symmetric-game code {code!r}") from None


_STRICT_NAMES = {
    "sd": ("Prisoner's Dilemma",),
    "sc": ("Chicken", "Hawk-Dove", "Snowdrift"),
    "sb": ("Battle of the Sexes", "Leader", "Bach or Stravinsky"),
    "sr": ("Hero", "Battle of the Sexes", "Bach or Stravinsky"),
    "sm": ("Compromise", "Anti-Chicken", "Prisoner's Delight"),
    "sk": ("Deadlock", "Lock", "Anti-Prisoner's Dilemma"),
    "sn": ("No Conflict", "Concord"),
    "su": ("Stag Hunt",),
    "sa": ("Assurance", "Coordination"),
    "so": ("Coordination", "Anti-Coordination"),
    "sp": ("Peace", "Resolution"),
    "sh": ("Harmony",),
}

_TIE_NAMES = {
    "ld": ("Low Dilemma",),
    "lb": ("Low Battle", "Battle of the Sexes"),
    "lk": ("Low Lock",),
    "ln": ("Low Concord", "Low No Conflict"),
    "lo": ("Low Coordination", "Coordination"),
    "lh": ("Low Harmony",),
    "mb": ("Middle Battle", "Volunteer's Dilemma", "Middle Leader"),
    "mm": ("Middle Compromise",),
    "mk": ("Midlock", "Middle Deadlock"),
    "mu": ("Middle Hunt", "Rousseau's Hunt"),
    "mp": ("Middle Peace",),
    "mh": ("Middle Harmony", "Invisible Hand"),
    "hd": ("High Dilemma", "High Hunt"),
    "hc": ("High Chicken", "High Concord"),
    "hb": ("High Battle", "High Leader"),
    "hr": ("High Hero", "High Battle"),
    "hm": ("High Compromise", "High Harmony"),
    "hk": ("High Lock", "High Peace"),
    "hn": ("High Concord", "High No Conflict"),
    "hu": ("High Dilemma", "High Hunt"),
    "ha": ("High Assurance", "High Coordination"),
    "ho": ("High Coordination",),
    "hp": ("High Peace",),
    "hh": ("High Harmony",),
    "tk": ("Triple Lock",),
    "th": ("Triple Harmony",),
    "dd": ("Double Dilemma", "Avatamsaka", "Interdependence"),
    "db": ("Double Battle", "Double Coordination"),
    "dk": ("Double Lock", "Double Harmony"),
    "du": ("Double Dilemma", "Avatamsaka", "Interdependence", "Double Hunt"),
    "do": ("Double Coordination",),
    "dh": ("Double Harmony",),
    "bd": ("Basic Discord", "Basic Dilemma"),
    "bh": ("Basic Harmony",),
    "ze": ("Zero", "Indifference", "Null"),
}


@lru_cache(maxsize=1)
def symmetric_catalog() -> SymmetricCatalog:
    discord = _strict_cycle(_DISCORD_CYCLE_START)
    winwin = _strict_cycle(_WINWIN_CYCLE_START)
    strict_rows = dict(
        zip(("sd", "sc", "sb", "sr", "sm", "sk"), discord),
        **dict(zip(("sn", "su", "sa", "so", "sp", "sh"), winwin)),
    )
    low = lambda r: _tie(r, 1, 2)
    mid = lambda r: _tie(r, 2, 3)
    high = lambda r: _tie(r, 3, 4)
    rows: dict[str, tuple[int, ...]] = dict(strict_rows)
    for code, src in {"ld": "sd", "lb": "sb", "lk": "sk", "ln": "sn", "lo": "so", "lh": "sh"}.items():
        rows[code] = low(strict_rows[src])
    for code, src in {"mb": "sb", "mm": "sm", "mk": "sk", "mu": "su", "mp": "sp", "mh": "sh"}.items():
        rows[code] = mid(strict_rows[src])
    for src in strict_rows:
        rows["h" + src[1]] = high(strict_rows[src])
    rows["tk"] = _tie(rows["hk"], 2, 4)
    rows["th"] = _tie(rows["hh"], 2, 4)
    for code, src in {"dd": "ld", "db": "lb", "dk": "lk", "du": "ln", "do": "lo", "dh": "lh"}.items():
        rows[code] = _tie(rows[src], 3, 4)
    rows["bd"] = _tie(rows["ld"], 1, 3)
    rows["bh"] = _tie(rows["lh"], 1, 3)
    rows["ze"] = (0, 0, 0, 0)

    order = [
        "sd", "sc", "sb", "sr", "sm", "sk", "sn", "su", "sa", "so", "sp", "sh",
        "ld", "lb", "lk", "ln", "lo", "lh",
        "mb", "mm", "mk", "mu", "mp", "mh",
        "hd", "hc", "hb", "hr", "hm", "hk", "hn", "hu", "ha", "ho", "hp", "hh",
        "tk", "th",
        "dd", "db", "dk", "du", "do", "dh",
        "bd", "bh", "ze",
    ]
    entries = []
    seen: dict[str, str] = {}
    for i, code in enumerate(order, start=1):
        row = rows[code]
        names = _STRICT_NAMES.get(code) or _TIE_NAMES[code]
        entry = CatalogEntry(code, i, row, _mirror(row), names)
        enc = format_game(entry.game)
        if enc in seen:
            entry = CatalogEntry(code, i, row, _mirror(row), names, equal_to=seen[enc])
        else:
            seen[enc] = code
        entries.append(entry)
    catalog = SymmetricCatalog(tuple(entries))
    _CATALOG_BY_CODE.update({e.code: e for e in entries})
    return catalog


_CATALOG_BY_CODE: dict[str, CatalogEntry] = {}


# ---------------------------------------------------------------------------
# Atlas


@dataclass(frozen=True)
class Atlas:
    """The immutable universe of canonical games with dense, stable ids."""

    equivalence: Equivalence
    games: tuple[Game, ...]
    index: dict[str, int] = field(repr=False)  # canonical encoding -> id
    strict_ids: tuple[int, ...] = field(repr=False)
    symmetric_ids: tuple[int, ...] = field(repr=False)
    class_rosters: dict[tuple[TieClass, TieClass], tuple[int, ...]] = field(repr=False)

    def __len__(self) -> int:
        return len(self.games)

    def id_of(self, g: Game) -> int:
        rep = (
            canonical_game(g)
            if self.equivalence is Equivalence.INTERCHANGE
            else canonical_game_with_reflection(g)
        )
        try:
            return self.index[format_game(rep)]
        except KeyError:
            raise KeyError(f"game {format_game(g)} is not in the atlas") from None

    def game_by_id(self, game_id: int) -> Game:
        return self.games[game_id]

    def strict_games(self) -> tuple[Game, ...]:
        return tuple(self.games[i] for i in self.strict_ids)

    def family_rosters(self) -> dict:
        """Game ids grouped by payoff family (computed once, then cached)."""
        if not hasattr(self, "_family_rosters"):
            from .classify import classify

            rosters: dict = {}
            for i, g in enumerate(self.games):
                rosters.setdefault(classify(g).family, []).append(i)
            object.__setattr__(
                self, "_family_rosters", {k: tuple(v) for k, v in rosters.items()}
            )
        return self._family_rosters

    def export_text(self) -> str:
        """Line-oriented export: id, encoding, tie classes, coordinate name."""
        from .naming import coordinate_name

        lines = []
        for i, g in enumerate(self.games):
            classes = f"{g.row.tie_class.value},{g.column.tie_class.value}"
            name = coordinate_name(g).text
            lines.append(f"{i}\t{format_game(g)}\t{classes}\t{name}")
        return "\n".join(lines) + "\n"


def import_text(text: str, equivalence: Equivalence = Equivalence.INTERCHANGE) -> Atlas:
    """Rebuild an atlas from :meth:`Atlas.export_text` output; ids must match."""
    games = []
    for line in text.strip().splitlines():
        game_id, encoding, _classes, _name = line.split("\t")
        if int(game_id) != len(games):
            raise ValueError(f"non-dense id {game_id} in atlas import")
        games.append(parse_game(encoding))
    rebuilt = _assemble(games, equivalence)
    return rebuilt


def _assemble(games: list[Game], equivalence: Equivalence) -> Atlas:
    index = {format_game(g): i for i, g in enumerate(games)}
    strict_ids = tuple(i for i, g in enumerate(games) if g.is_strict)
    symmetric_ids = tuple(i for i, g in enumerate(games) if is_symmetric(g))
    rosters: dict[tuple[TieClass, TieClass], list[int]] = {}
    for i, g in enumerate(games):
        rosters.setdefault((g.row.tie_class, g.column.tie_class), []).append(i)
    return Atlas(
        equivalence=equivalence,
        games=tuple(games),
        index=index,
        strict_ids=strict_ids,
        symmetric_ids=symmetric_ids,
        class_rosters={k: tuple(v) for k, v in rosters.items()},
    )


@lru_cache(maxsize=2)
def build_atlas(equivalence: Equivalence = Equivalence.INTERCHANGE) -> Atlas:
    """Build the full atlas: ids are assigned in lexicographic encoding order."""
    games = enumerate_games(None, equivalence)
    atlas = _assemble(games, equivalence)
    _self_check(atlas)
    return atlas


def _self_check(atlas: Atlas) -> None:
    expected = 1413 if atlas.equivalence is Equivalence.INTERCHANGE else 726
    expected_strict = 144 if atlas.equivalence is Equivalence.INTERCHANGE else 78
    if len(atlas) != expected:
        raise AssertionError(f"atlas size {len(atlas)} != {expected}")
    if len(atlas.strict_ids) != expected_strict:
        raise AssertionError(f"strict subset {len(atlas.strict_ids)} != {expected_strict}")
    if atlas.equivalence is Equivalence.INTERCHANGE:
        distinct = len(symmetric_catalog().distinct)
        if distinct != 38 or len(atlas.symmetric_ids) != 38:
            raise AssertionError("symmetric roster != 38")
