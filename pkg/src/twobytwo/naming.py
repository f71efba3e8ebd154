"""Symmetric-coordinate names and the common-name registry.

Every game is addressable as ``<row code>-<column code>``: the codes of the
symmetric games whose row and column payoff patterns it combines (a symmetric
game names itself, e.g. Prisoner's Dilemma is ``sd-sd``).  Because high-tie
and double-tie patterns only cover part of their classes, naming may have to
read the game through an interchanged orientation; the chosen transform is
kept on the result so displays can flag it.

Common names ("Chicken", "Moral Hazard", ...) live in a plain-text registry
shipped with the package, one line per coordinate name, so researchers can
extend it without touching code.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .atlas import symmetric_catalog
from .core import (
    INTERCHANGE_TRANSFORMS,
    Game,
    OrientationTransform,
    apply_transform,
    canonical_game,
    format_game,
    pattern,
)


class UnknownCode(KeyError):
    """Raised when a coordinate name uses a code not in the catalog."""


@dataclass(frozen=True)
class CoordinateName:
    row_code: str
    column_code: str
    orientation: OrientationTransform

    @property
    def text(self) -> str:
        return f"{self.row_code}-{self.column_code}"

    @property
    def interchanged(self) -> bool:
        return self.orientation is not OrientationTransform.IDENTITY

    @property
    def marked_text(self) -> str:
        """Name with a prime marker when an interchange was needed to match."""
        return self.text + ("'" if self.interchanged else "")


@dataclass(frozen=True)
class CommonNameEntry:
    coordinate: str
    names: tuple[str, ...]
    tags: tuple[str, ...]


@lru_cache(maxsize=1)
def _display_maps():
    row_map: dict[tuple[int, ...], tuple[int, str]] = {}
    col_map: dict[tuple[int, ...], tuple[int, str]] = {}
    for entry in symmetric_catalog().entries:
        row_map.setdefault(entry.row_ranks, (entry.index, entry.code))
        col_map.setdefault(entry.col_ranks, (entry.index, entry.code))
    return row_map, col_map


def coordinate_name(g: Game) -> CoordinateName:
    """Locate the game's row and column patterns in the symmetric catalog."""
    row_map, col_map = _display_maps()
    base = canonical_game(g)
    candidates = []
    for order, t in enumerate(INTERCHANGE_TRANSFORMS):
        variant = apply_transform(base, t)
        row_hit = row_map.get(variant.row.ranks)
        col_hit = col_map.get(variant.column.ranks)
        if row_hit and col_hit:
            # Prefer a self-naming (symmetric) reading, then the least
            # interchanged orientation, then catalog order.
            symmetric_form = 0 if row_hit[1] == col_hit[1] else 1
            candidates.append(
                (symmetric_form, order, row_hit[0], col_hit[0], row_hit[1], col_hit[1], t)
            )
    if not candidates:
        raise AssertionError(f"no coordinate name for {format_game(g)}")
    _, _, _, _, row_code, col_code, t = min(candidates)
    return CoordinateName(row_code, col_code, t)


def parse_name(text: str) -> Game:
    """Coordinate name -> canonical game.  Accepts a trailing prime marker."""
    cleaned = text.strip().rstrip("'′")
    parts = cleaned.split("-")
    if len(parts) != 2:
        raise UnknownCode(f"{text!r} is not of the form <code>-<code>")
    catalog = symmetric_catalog()
    try:
        row_entry = catalog.by_code(parts[0])
        col_entry = catalog.by_code(parts[1])
    except KeyError:
        raise UnknownCode(f"unknown symmetric-game code in {text!r}") from None
    return canonical_game(Game(pattern(row_entry.row_ranks), pattern(col_entry.col_ranks)))


# ---------------------------------------------------------------------------
# Common-name registry


def _read_registry_lines() -> list[str]:
    data = resources.files("twobytwo.data").joinpath("common_names.tsv").read_text("utf-8")
    return [line for line in data.splitlines() if line.strip() and not line.startswith("#")]


@lru_cache(maxsize=1)
def _registry() -> tuple[tuple[CommonNameEntry, ...], dict[str, tuple[CommonNameEntry, ...]]]:
    entries = []
    by_encoding: dict[str, list[CommonNameEntry]] = {}
    for line in _read_registry_lines():
        coordinate, names_field, tags_field = (line.split("\t") + ["", ""])[:3]
        names = tuple(n.strip() for n in names_field.split(";") if n.strip())
        tags = tuple(t.strip() for t in tags_field.split(";") if t.strip())
        entry = CommonNameEntry(coordinate.strip(), names, tags)
        entries.append(entry)
        enc = format_game(parse_name(entry.coordinate))
        by_encoding.setdefault(enc, []).append(entry)
    return tuple(entries), {k: tuple(v) for k, v in by_encoding.items()}


def registry_entries() -> tuple[CommonNameEntry, ...]:
    return _registry()[0]


def common_names(g: Game) -> tuple[CommonNameEntry, ...]:
    """Registry entries for this game; empty for unnamed games."""
    return _registry()[1].get(format_game(canonical_game(g)), ())


def display_name(g: Game) -> str:
    """Primary human-readable label: first common name, else the coordinates."""
    entries = common_names(g)
    if entries and entries[0].names:
        return entries[0].names[0]
    return coordinate_name(g).text


@lru_cache(maxsize=1)
def _name_lookup() -> dict[str, str]:
    # First registry line wins for ambiguous names like plain "Coordination".
    lookup: dict[str, str] = {}
    for entry in registry_entries():
        enc = format_game(parse_name(entry.coordinate))
        for name in entry.names:
            lookup.setdefault(name.lower(), enc)
    return lookup


def lookup_common_name(name: str) -> Game | None:
    """Find a game by one of its common names (case-insensitive)."""
    from .core import parse_game

    enc = _name_lookup().get(name.strip().lower())
    return parse_game(enc) if enc else None
