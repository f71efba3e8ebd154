"""twobytwo: the complete topology of 2x2 ordinal games.

Enumeration and classification of every 2x2 ordinal game (with and without
ties), the payoff-swap neighbor structure between them, symmetric-coordinate
naming, deterministic chart rendering, and search for transformation paths
from social dilemmas to win-win games.
"""

from .core import (
    CellIndex,
    Game,
    OrientationTransform,
    ParseError,
    PlayerPattern,
    TieClass,
    apply_transform,
    canonical_game,
    canonicalize,
    format_game,
    game,
    is_symmetric,
    normalize_payoffs,
    parse_game,
    pattern,
)

__all__ = [
    "CellIndex",
    "Game",
    "OrientationTransform",
    "ParseError",
    "PlayerPattern",
    "TieClass",
    "apply_transform",
    "canonical_game",
    "canonicalize",
    "format_game",
    "game",
    "is_symmetric",
    "normalize_payoffs",
    "parse_game",
    "pattern",
]

__version__ = "0.1.0"
