"""Core model for 2x2 ordinal games.

A game is a pair of player patterns, one for the row player and one for the
column player.  Each pattern assigns an ordinal rank to the four cells of the
payoff matrix (1 = worst ... 4 = best, 0 only in the all-indifferent Zero
pattern).  Ties are allowed and every weak order over the four cells is
normalized to one of eight canonical rank multisets, so each distinct
preference structure has exactly one encoding.

The module also provides the group of orientation transforms (relabeling
rows/columns and reflecting the players), the canonical form used to identify
games up to row/column interchange, and the text encoding used everywhere
else: ``"rrrr/cccc"`` with cell order UL, UR, DL, DR.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum, IntEnum
from functools import lru_cache
from typing import Iterable, Sequence


class InvalidPayoff(ValueError):
    """Raised when payoff values are not finite numbers."""


class InvalidPattern(ValueError):
    """Raised when a rank assignment is not one of the canonical patterns."""


class ParseError(ValueError):
    """Raised when a game string cannot be parsed."""


class CellIndex(IntEnum):
    """Cell of the 2x2 matrix: row strategy up/down x column strategy left/right."""

    UL = 0
    UR = 1
    DL = 2
    DR = 3

    @property
    def row(self) -> int:
        return 0 if self in (CellIndex.UL, CellIndex.UR) else 1

    @property
    def column(self) -> int:
        return 0 if self in (CellIndex.UL, CellIndex.DL) else 1


UL, UR, DL, DR = CellIndex.UL, CellIndex.UR, CellIndex.DL, CellIndex.DR

#: Cells in the fixed serialization order.
CELLS: tuple[CellIndex, ...] = (UL, UR, DL, DR)

#: Right column and up row, used by the canonical orientation rule.
RIGHT_COLUMN = (UR, DR)
UP_ROW = (UL, UR)


class TieClass(Enum):
    """The eight preference classes a player's four ranks can form."""

    STRICT = "strict"
    LOW_TIES = "low"
    MIDDLE_TIES = "middle"
    HIGH_TIES = "high"
    TRIPLE = "triple"
    DOUBLE = "double"
    BASIC = "basic"
    ZERO = "zero"

    @property
    def multiset(self) -> tuple[int, ...]:
        return _CLASS_MULTISET[self]

    @property
    def rank_count(self) -> int:
        """Number of distinct rank levels in the class."""
        return len(set(self.multiset)) if self is not TieClass.ZERO else 1


_CLASS_MULTISET: dict[TieClass, tuple[int, ...]] = {
    TieClass.STRICT: (1, 2, 3, 4),
    TieClass.LOW_TIES: (1, 1, 3, 4),
    TieClass.MIDDLE_TIES: (1, 3, 3, 4),
    TieClass.HIGH_TIES: (1, 2, 4, 4),
    TieClass.TRIPLE: (1, 4, 4, 4),
    TieClass.DOUBLE: (1, 1, 4, 4),
    TieClass.BASIC: (1, 1, 1, 4),
    TieClass.ZERO: (0, 0, 0, 0),
}

_MULTISET_CLASS = {tuple(sorted(m)): c for c, m in _CLASS_MULTISET.items()}

# Canonical rank values per level, keyed by the sizes of the levels from
# worst to best.  This is the "lowest = 1, highest = 4, middle ties = 3" rule
# extended to every level-size signature.
_LEVEL_VALUES: dict[tuple[int, ...], tuple[int, ...]] = {
    (1, 1, 1, 1): (1, 2, 3, 4),
    (2, 1, 1): (1, 3, 4),
    (1, 2, 1): (1, 3, 4),
    (1, 1, 2): (1, 2, 4),
    (2, 2): (1, 4),
    (3, 1): (1, 4),
    (1, 3): (1, 4),
    (4,): (0,),
}


@dataclass(frozen=True, order=True)
class PlayerPattern:
    """One player's ordinal payoff assignment over the four cells."""

    ranks: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        key = tuple(sorted(self.ranks))
        if key not in _MULTISET_CLASS:
            raise InvalidPattern(f"rank multiset {key} is not a canonical class multiset")

    @property
    def tie_class(self) -> TieClass:
        return _MULTISET_CLASS[tuple(sorted(self.ranks))]

    def rank(self, cell: CellIndex) -> int:
        return self.ranks[cell]

    def cells_with(self, rank: int) -> tuple[CellIndex, ...]:
        return tuple(c for c in CELLS if self.ranks[c] == rank)

    def levels(self) -> list[tuple[int, tuple[CellIndex, ...]]]:
        """Distinct rank values from worst to best with their cells."""
        values = sorted(set(self.ranks))
        return [(v, self.cells_with(v)) for v in values]

    def encode(self) -> str:
        return "".join(str(r) for r in self.ranks)


def pattern(ranks: Iterable[int]) -> PlayerPattern:
    return PlayerPattern(tuple(ranks))  # type: ignore[arg-type]


@dataclass(frozen=True, order=True)
class Game:
    """A 2x2 ordinal game: a row pattern and a column pattern."""

    row: PlayerPattern
    column: PlayerPattern

    @property
    def is_strict(self) -> bool:
        return (
            self.row.tie_class is TieClass.STRICT
            and self.column.tie_class is TieClass.STRICT
        )

    def payoffs(self, cell: CellIndex) -> tuple[int, int]:
        return (self.row.ranks[cell], self.column.ranks[cell])

    def encode(self) -> str:
        return format_game(self)


def game(row_ranks: Iterable[int], column_ranks: Iterable[int]) -> Game:
    return Game(pattern(row_ranks), pattern(column_ranks))


# ---------------------------------------------------------------------------
# Payoff normalization


def normalize_payoffs(values: Sequence[float], tolerance: float = 0.0) -> PlayerPattern:
    """Ordinalize four real payoffs (cell order UL, UR, DL, DR) into a pattern.

    Values within ``tolerance`` of each other (chained) are tied.  The result
    uses the canonical multiset of the induced tie class, so any strictly
    monotone transformation of the inputs yields the same pattern (for exact
    ties; a positive tolerance is sensitive to the payoff scale by nature).
    """
    if len(values) != 4:
        raise InvalidPayoff(f"expected 4 payoffs, got {len(values)}")
    if tolerance < 0:
        raise InvalidPayoff("tolerance must be nonnegative")
    vals = []
    for v in values:
        f = float(v)
        if not math.isfinite(f):
            raise InvalidPayoff(f"payoff {v!r} is not finite")
        vals.append(f)

    order = sorted(range(4), key=lambda i: vals[i])
    level_of = [0] * 4
    level = 0
    for prev, cur in zip(order, order[1:]):
        if vals[cur] - vals[prev] > tolerance:
            level += 1
        level_of[cur] = level
    sizes = tuple(level_of.count(k) for k in range(level + 1))
    rank_values = _LEVEL_VALUES[sizes]
    return pattern(rank_values[level_of[i]] for i in range(4))


def renormalize_levels(level_of: Sequence[int]) -> PlayerPattern:
    """Build the canonical pattern whose cells sit at the given weak-order levels."""
    n_levels = max(level_of) + 1
    sizes = tuple(list(level_of).count(k) for k in range(n_levels))
    rank_values = _LEVEL_VALUES[sizes]
    return pattern(rank_values[lv] for lv in level_of)


# ---------------------------------------------------------------------------
# Orientation transforms

# A transform is a permutation telling each new cell which old cell it reads,
# plus a flag for whether the players' roles are exchanged.
_PERM_IDENTITY = (0, 1, 2, 3)
_PERM_SWAP_ROWS = (2, 3, 0, 1)
_PERM_SWAP_COLUMNS = (1, 0, 3, 2)
_PERM_ROTATE_180 = (3, 2, 1, 0)
_PERM_TRANSPOSE = (0, 2, 1, 3)


def _compose_perm(p1: tuple[int, ...], p2: tuple[int, ...]) -> tuple[int, ...]:
    # Applying p1 first and then p2 reads old cell p1[p2[i]] into new cell i.
    return tuple(p1[p2[i]] for i in range(4))


class OrientationTransform(Enum):
    """The dihedral group acting on a game's presentation.

    The four interchange transforms relabel strategies; the four
    transpose-composed ones also exchange the players.
    """

    IDENTITY = (_PERM_IDENTITY, False)
    SWAP_ROWS = (_PERM_SWAP_ROWS, False)
    SWAP_COLUMNS = (_PERM_SWAP_COLUMNS, False)
    ROTATE_180 = (_PERM_ROTATE_180, False)
    TRANSPOSE = (_PERM_TRANSPOSE, True)
    TRANSPOSE_SWAP_ROWS = (_compose_perm(_PERM_TRANSPOSE, _PERM_SWAP_ROWS), True)
    TRANSPOSE_SWAP_COLUMNS = (_compose_perm(_PERM_TRANSPOSE, _PERM_SWAP_COLUMNS), True)
    TRANSPOSE_ROTATE_180 = (_compose_perm(_PERM_TRANSPOSE, _PERM_ROTATE_180), True)

    @property
    def perm(self) -> tuple[int, ...]:
        return self.value[0]

    @property
    def swaps_players(self) -> bool:
        return self.value[1]

    def compose(self, other: "OrientationTransform") -> "OrientationTransform":
        """The transform equal to applying ``self`` first, then ``other``."""
        perm = _compose_perm(self.perm, other.perm)
        swap = self.swaps_players != other.swaps_players
        return _TRANSFORM_BY_VALUE[(perm, swap)]

    def inverse(self) -> "OrientationTransform":
        # Payoff-pair swapping is per cell, so it commutes with the cell
        # permutation; the inverse keeps the swap flag and inverts the perm.
        inv = [0] * 4
        for i, p in enumerate(self.perm):
            inv[p] = i
        return _TRANSFORM_BY_VALUE[(tuple(inv), self.swaps_players)]


_TRANSFORM_BY_VALUE = {t.value: t for t in OrientationTransform}

INTERCHANGE_TRANSFORMS: tuple[OrientationTransform, ...] = (
    OrientationTransform.IDENTITY,
    OrientationTransform.SWAP_ROWS,
    OrientationTransform.SWAP_COLUMNS,
    OrientationTransform.ROTATE_180,
)

ALL_TRANSFORMS: tuple[OrientationTransform, ...] = tuple(OrientationTransform)


def permute_pattern(p: PlayerPattern, perm: tuple[int, ...]) -> PlayerPattern:
    return pattern(p.ranks[perm[i]] for i in range(4))


def apply_transform(g: Game, t: OrientationTransform) -> Game:
    """Apply an orientation transform to a game."""
    if not t.swaps_players:
        return Game(permute_pattern(g.row, t.perm), permute_pattern(g.column, t.perm))
    # Player roles exchange: the new row player's payoffs are the old column
    # player's, read through the cell permutation.
    return Game(permute_pattern(g.column, t.perm), permute_pattern(g.row, t.perm))


# ---------------------------------------------------------------------------
# Canonical form


@dataclass(frozen=True)
class CanonicalKey:
    """A game's canonical representative and the transform that reached it."""

    game: Game
    applied: OrientationTransform


def orientation_score(g: Game) -> int:
    """How well a presentation satisfies "Row's 4 right, Column's 4 up"."""
    score = 0
    score += sum(1 for c in RIGHT_COLUMN if g.row.ranks[c] == 4)
    score += sum(1 for c in UP_ROW if g.column.ranks[c] == 4)
    return score


def interchange_orbit(g: Game) -> list[tuple[OrientationTransform, Game]]:
    return [(t, apply_transform(g, t)) for t in INTERCHANGE_TRANSFORMS]


@lru_cache(maxsize=65536)
def _canonicalize_ranks(
    row: tuple[int, ...], col: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[int, ...], OrientationTransform]:
    g = Game(PlayerPattern(row), PlayerPattern(col))
    best: tuple[int, str] | None = None
    best_game = g
    best_t = OrientationTransform.IDENTITY
    for t, variant in interchange_orbit(g):
        key = (-orientation_score(variant), format_game(variant))
        if best is None or key < best:
            best = key
            best_game = variant
            best_t = t
    return best_game.row.ranks, best_game.column.ranks, best_t


def canonicalize(g: Game) -> CanonicalKey:
    """Deterministic representative of the game's interchange orbit.

    The representative maximizes the "Row's 4 in the right column, Column's 4
    in the up row" orientation rule (which pins strict games uniquely) and
    breaks any remaining ambiguity among tie games by lexicographically least
    encoding.  Reflections are not quotiented.
    """
    row, col, t = _canonicalize_ranks(g.row.ranks, g.column.ranks)
    return CanonicalKey(Game(PlayerPattern(row), PlayerPattern(col)), t)


def canonical_game(g: Game) -> Game:
    return canonicalize(g).game


def reflection_orbit(g: Game) -> list[tuple[OrientationTransform, Game]]:
    return [(t, apply_transform(g, t)) for t in ALL_TRANSFORMS]


def canonical_game_with_reflection(g: Game) -> Game:
    """Representative when reflections are also treated as equivalent."""
    best_key: tuple[int, str] | None = None
    best_game = g
    for _, variant in reflection_orbit(g):
        key = (-orientation_score(variant), format_game(variant))
        if best_key is None or key < best_key:
            best_key = key
            best_game = variant
    return best_game


def is_symmetric(g: Game) -> bool:
    """True iff some interchange variant gives both players literally the same
    payoff function (column payoff at (i, j) equals row payoff at (j, i))."""
    for _, variant in interchange_orbit(g):
        if permute_pattern(variant.row, _PERM_TRANSPOSE) == variant.column:
            return True
    return False


# ---------------------------------------------------------------------------
# Text encoding


def format_game(g: Game) -> str:
    return f"{g.row.encode()}/{g.column.encode()}"


def parse_game(text: str) -> Game:
    """Parse ``"rrrr/cccc"`` (digits 0-4, cell order UL UR DL DR)."""
    parts = text.strip().split("/")
    if len(parts) != 2 or len(parts[0]) != 4 or len(parts[1]) != 4:
        raise ParseError(f"{text!r} does not match <rrrr>/<cccc>")
    patterns = []
    for name, chunk in zip(("row", "column"), parts):
        if not all(ch in "01234" for ch in chunk):
            raise ParseError(f"{name} ranks {chunk!r} contain digits outside 0-4")
        ranks = tuple(int(ch) for ch in chunk)
        try:
            patterns.append(PlayerPattern(ranks))
        except InvalidPattern:
            raise ParseError(
                f"{name} multiset {tuple(sorted(ranks))} is not a canonical class multiset"
            ) from None
    return Game(patterns[0], patterns[1])
