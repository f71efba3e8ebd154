"""Equilibria, dominance, Pareto structure, payoff families, and the census.

Equilibrium notions: a cell is a weak Nash equilibrium when neither player
strictly gains by a unilateral deviation, and a strict one when both
deviations strictly lose.  Family assignment uses weak equilibria, so it
extends to games with ties; when both players have dominant strategies the
dominance-solved cell is the one judged (this only matters for tie games,
where weakly dominant play can be trapped below a better equilibrium).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np

from .core import (
    CELLS,
    CellIndex,
    DL,
    DR,
    Game,
    PlayerPattern,
    TieClass,
    UL,
    UR,
    is_symmetric,
)


class NoInteriorEquilibrium(ValueError):
    """Raised when the mixed-strategy indifference system is singular."""


class Player(Enum):
    ROW = "row"
    COLUMN = "column"

    @property
    def other(self) -> "Player":
        return Player.COLUMN if self is Player.ROW else Player.ROW


class Dominance(Enum):
    STRICT = "strict"
    WEAK = "weak"
    NONE = "none"


class Inducement(Enum):
    """Sign of the externality a player's own improving switches impose."""

    ALWAYS_POSITIVE = "always-positive"
    ALWAYS_NEGATIVE = "always-negative"
    MIXED = "mixed"


class Family(Enum):
    WIN_WIN = "win-win"
    BIASED = "biased"
    SECOND_BEST = "second-best"
    UNFAIR = "unfair"
    PD_FAMILY = "pd-family"
    CYCLIC = "cyclic"
    INDETERMINATE = "indeterminate"


class Subfamily(Enum):
    HARMONIOUS = "harmonious"
    STAG_HUNT = "stag-hunt"
    ALTRUISTIC = "altruistic"
    ALTRUISTIC_SELF_SERVING = "altruistic-self-serving"
    SELF_SERVING = "self-serving"
    BATTLE_OF_THE_SEXES = "battle-of-the-sexes"
    SECOND_BEST = "second-best"
    CHICKEN = "chicken"
    WINNER = "winner"
    WIN_LOSE = "win-lose"
    LOSER = "loser"
    PRISONERS_DILEMMA = "prisoners-dilemma"
    ALIBI = "alibi"
    TRAGIC = "tragic"
    CYCLIC = "cyclic"
    INDETERMINATE = "indeterminate"


# Strategies are indices: row player picks the row (0 = up, 1 = down),
# column player picks the column (0 = left, 1 = right).
STRATEGY_NAMES = {
    Player.ROW: ("up", "down"),
    Player.COLUMN: ("left", "right"),
}


def _cell(row_strategy: int, col_strategy: int) -> CellIndex:
    return CellIndex(row_strategy * 2 + col_strategy)


def _own_rank(g: Game, player: Player, cell: CellIndex) -> int:
    return g.row.ranks[cell] if player is Player.ROW else g.column.ranks[cell]


def _deviation(cell: CellIndex, player: Player) -> CellIndex:
    """The cell reached if ``player`` unilaterally switches strategy."""
    if player is Player.ROW:
        return _cell(1 - cell.row, cell.column)
    return _cell(cell.row, 1 - cell.column)


@dataclass(frozen=True)
class PlayerFacts:
    dominance: Dominance
    dominant_strategy: int | None
    maximin: tuple[int, ...]
    degenerate: bool
    inducement: Inducement


@dataclass(frozen=True)
class Classification:
    game: Game
    nash_strict: frozenset[CellIndex]
    nash_weak: frozenset[CellIndex]
    row: PlayerFacts
    column: PlayerFacts
    pareto_optimal: frozenset[CellIndex]
    mutually_pareto_optimal: frozenset[CellIndex]
    fixed_rank_sum: bool
    family: Family
    subfamily: Subfamily

    def facts(self, player: Player) -> PlayerFacts:
        return self.row if player is Player.ROW else self.column

    @property
    def best_equilibrium(self) -> CellIndex | None:
        return _best_equilibrium(self.game, self.nash_weak)


def _dominance(g: Game, player: Player) -> tuple[Dominance, int | None]:
    ranks = g.row.ranks if player is Player.ROW else g.column.ranks
    for mine in (0, 1):
        diffs = []
        for theirs in (0, 1):
            if player is Player.ROW:
                own, other = _cell(mine, theirs), _cell(1 - mine, theirs)
            else:
                own, other = _cell(theirs, mine), _cell(theirs, 1 - mine)
            diffs.append(ranks[own] - ranks[other])
        if all(d > 0 for d in diffs):
            return Dominance.STRICT, mine
        if all(d >= 0 for d in diffs) and any(d > 0 for d in diffs):
            return Dominance.WEAK, mine
    return Dominance.NONE, None


def _maximin(g: Game, player: Player) -> tuple[int, ...]:
    ranks = g.row.ranks if player is Player.ROW else g.column.ranks
    worst = {}
    for mine in (0, 1):
        cells = (
            (_cell(mine, 0), _cell(mine, 1))
            if player is Player.ROW
            else (_cell(0, mine), _cell(1, mine))
        )
        worst[mine] = min(ranks[c] for c in cells)
    best = max(worst.values())
    return tuple(s for s in (0, 1) if worst[s] == best)


def _degenerate(g: Game, player: Player) -> bool:
    ranks = g.row.ranks if player is Player.ROW else g.column.ranks
    if player is Player.ROW:
        return ranks[UL] == ranks[DL] and ranks[UR] == ranks[DR]
    return ranks[UL] == ranks[UR] and ranks[DL] == ranks[DR]


def _inducement(g: Game, player: Player) -> Inducement:
    """Externality sign over the player's strictly improving switches."""
    own = g.row.ranks if player is Player.ROW else g.column.ranks
    other = g.column.ranks if player is Player.ROW else g.row.ranks
    effects = []
    for fixed in (0, 1):
        if player is Player.ROW:
            a, b = _cell(0, fixed), _cell(1, fixed)
        else:
            a, b = _cell(fixed, 0), _cell(fixed, 1)
        if own[a] == own[b]:
            continue
        lo, hi = (a, b) if own[a] < own[b] else (b, a)
        effects.append(other[hi] - other[lo])
    if effects and all(e > 0 for e in effects):
        return Inducement.ALWAYS_POSITIVE
    if effects and all(e < 0 for e in effects):
        return Inducement.ALWAYS_NEGATIVE
    return Inducement.MIXED


def _nash_sets(g: Game) -> tuple[frozenset[CellIndex], frozenset[CellIndex]]:
    weak, strict = [], []
    for cell in CELLS:
        gains, losses = [], []
        for player in Player:
            dev = _deviation(cell, player)
            delta = _own_rank(g, player, dev) - _own_rank(g, player, cell)
            gains.append(delta > 0)
            losses.append(delta < 0)
        if not any(gains):
            weak.append(cell)
            if all(losses):
                strict.append(cell)
    return frozenset(strict), frozenset(weak)


def _pareto_sets(g: Game) -> tuple[frozenset[CellIndex], frozenset[CellIndex]]:
    optimal, mutual = [], []
    for cell in CELLS:
        p = g.payoffs(cell)
        dominated = mutually_dominated = False
        for alt in CELLS:
            if alt == cell:
                continue
            q = g.payoffs(alt)
            if q[0] >= p[0] and q[1] >= p[1] and q != p:
                dominated = True
            if q[0] > p[0] and q[1] > p[1]:
                mutually_dominated = True
        if not dominated:
            optimal.append(cell)
        if not mutually_dominated:
            mutual.append(cell)
    return frozenset(optimal), frozenset(mutual)


def _sorted_pair(g: Game, cell: CellIndex) -> tuple[int, int]:
    a, b = g.payoffs(cell)
    return (max(a, b), min(a, b))


def _best_equilibrium(g: Game, nash_weak: frozenset[CellIndex]) -> CellIndex | None:
    if not nash_weak:
        return None
    return max(nash_weak, key=lambda c: (_sorted_pair(g, c), -int(c)))


def _improvement_cycle(g: Game) -> bool:
    """True when strict best-response moves chase each other around all 4 cells."""
    visited = set()
    cell = UL
    for _ in range(8):
        if cell in visited:
            return len(visited) == 4
        visited.add(cell)
        for player in Player:
            dev = _deviation(cell, player)
            if _own_rank(g, player, dev) > _own_rank(g, player, cell):
                cell = dev
                break
        else:
            return False
    return len(visited) == 4


def _family(g: Game, nash_weak, row_facts: PlayerFacts, col_facts: PlayerFacts):
    zero = g.row.tie_class is TieClass.ZERO and g.column.tie_class is TieClass.ZERO
    if zero:
        return Family.INDETERMINATE, Subfamily.INDETERMINATE
    if not nash_weak:
        if _improvement_cycle(g):
            return Family.CYCLIC, Subfamily.CYCLIC
        return Family.INDETERMINATE, Subfamily.INDETERMINATE

    judged = _best_equilibrium(g, nash_weak)
    # Dominance-solved games are judged where joint dominant play lands;
    # for strict games this coincides with the unique equilibrium.
    if row_facts.dominant_strategy is not None and col_facts.dominant_strategy is not None:
        solved = _cell(row_facts.dominant_strategy, col_facts.dominant_strategy)
        if solved in nash_weak:
            judged = solved
    hi, lo = _sorted_pair(g, judged)

    if (hi, lo) == (4, 4):
        sub = Subfamily.STAG_HUNT if len(nash_weak) > 1 else Subfamily.HARMONIOUS
        return Family.WIN_WIN, sub
    if (hi, lo) == (4, 3):
        if len(nash_weak) > 1:
            return Family.BIASED, Subfamily.BATTLE_OF_THE_SEXES
        return Family.BIASED, _biased_subfamily(g, judged, row_facts, col_facts)
    if (hi, lo) == (3, 3):
        return Family.SECOND_BEST, Subfamily.SECOND_BEST
    if hi == 4:
        if len(nash_weak) > 1:
            return Family.UNFAIR, Subfamily.CHICKEN
        return Family.UNFAIR, _unfair_subfamily(g, judged, row_facts, col_facts)
    pareto_optimal, _ = _pareto_sets(g)
    if hi <= 2:
        return Family.PD_FAMILY, Subfamily.PRISONERS_DILEMMA
    deficient = all(c not in pareto_optimal for c in nash_weak)
    return Family.PD_FAMILY, Subfamily.ALIBI if deficient else Subfamily.TRAGIC


def _dominant_payoffs(g: Game, cell, row_facts, col_facts) -> list[int]:
    payoffs = []
    if row_facts.dominant_strategy is not None:
        payoffs.append(g.row.ranks[cell])
    if col_facts.dominant_strategy is not None:
        payoffs.append(g.column.ranks[cell])
    return payoffs


def _biased_subfamily(g, cell, row_facts, col_facts) -> Subfamily:
    """Split single-equilibrium biased games by whose dominance drives them.

    Both dominant: altruistic and self-serving at once.  One dominant: the
    game is self-serving when the dominant player takes their own best payoff
    at equilibrium, altruistic when their dominance hands the other player
    the best payoff.
    """
    payoffs = _dominant_payoffs(g, cell, row_facts, col_facts)
    if len(payoffs) == 2:
        return Subfamily.ALTRUISTIC_SELF_SERVING
    if payoffs and payoffs[0] == 4:
        return Subfamily.SELF_SERVING
    return Subfamily.ALTRUISTIC


def _unfair_subfamily(g, cell, row_facts, col_facts) -> Subfamily:
    payoffs = _dominant_payoffs(g, cell, row_facts, col_facts)
    if len(payoffs) == 2:
        return Subfamily.WIN_LOSE
    if payoffs and payoffs[0] == 4:
        return Subfamily.WINNER
    return Subfamily.LOSER


@lru_cache(maxsize=16384)
def _classify_cached(row_ranks, col_ranks) -> Classification:
    g = Game(PlayerPattern(row_ranks), PlayerPattern(col_ranks))
    nash_strict, nash_weak = _nash_sets(g)
    facts = {}
    for player in Player:
        dom, strategy = _dominance(g, player)
        facts[player] = PlayerFacts(
            dominance=dom,
            dominant_strategy=strategy,
            maximin=_maximin(g, player),
            degenerate=_degenerate(g, player),
            inducement=_inducement(g, player),
        )
    pareto_optimal, mutual = _pareto_sets(g)
    sums = {g.row.ranks[c] + g.column.ranks[c] for c in CELLS}
    family, subfamily = _family(g, nash_weak, facts[Player.ROW], facts[Player.COLUMN])
    return Classification(
        game=g,
        nash_strict=nash_strict,
        nash_weak=nash_weak,
        row=facts[Player.ROW],
        column=facts[Player.COLUMN],
        pareto_optimal=pareto_optimal,
        mutually_pareto_optimal=mutual,
        fixed_rank_sum=len(sums) == 1,
        family=family,
        subfamily=subfamily,
    )


def classify(g: Game) -> Classification:
    return _classify_cached(g.row.ranks, g.column.ranks)


# ---------------------------------------------------------------------------
# Census


#: Table row order: family, subfamily (None rolls the family total up).
CENSUS_ROWS: tuple[tuple[Family, Subfamily | None], ...] = (
    (Family.WIN_WIN, None),
    (Family.WIN_WIN, Subfamily.HARMONIOUS),
    (Family.WIN_WIN, Subfamily.STAG_HUNT),
    (Family.BIASED, None),
    (Family.BIASED, Subfamily.ALTRUISTIC),
    (Family.BIASED, Subfamily.ALTRUISTIC_SELF_SERVING),
    (Family.BIASED, Subfamily.SELF_SERVING),
    (Family.BIASED, Subfamily.BATTLE_OF_THE_SEXES),
    (Family.SECOND_BEST, None),
    (Family.UNFAIR, None),
    (Family.UNFAIR, Subfamily.CHICKEN),
    (Family.UNFAIR, Subfamily.WINNER),
    (Family.UNFAIR, Subfamily.WIN_LOSE),
    (Family.UNFAIR, Subfamily.LOSER),
    (Family.PD_FAMILY, None),
    (Family.PD_FAMILY, Subfamily.PRISONERS_DILEMMA),
    (Family.PD_FAMILY, Subfamily.ALIBI),
    (Family.PD_FAMILY, Subfamily.TRAGIC),
    (Family.CYCLIC, None),
    (Family.INDETERMINATE, None),
)


@dataclass(frozen=True)
class FamilyCensus:
    counts: Mapping[tuple[Family, Subfamily], tuple[int, int, int]]

    def family_total(self, family: Family) -> tuple[int, int, int]:
        sym = asym = 0
        for (f, _), (s, a, _) in self.counts.items():
            if f is family:
                sym, asym = sym + s, asym + a
        return sym, asym, sym + asym

    def grand_total(self) -> int:
        return sum(t for _, _, t in self.counts.values())


def census(universe: Iterable[Game]) -> FamilyCensus:
    counts: dict[tuple[Family, Subfamily], list[int]] = {}
    for g in universe:
        c = classify(g)
        slot = counts.setdefault((c.family, c.subfamily), [0, 0, 0])
        if is_symmetric(g):
            slot[0] += 1
        else:
            slot[1] += 1
        slot[2] += 1
    return FamilyCensus({k: tuple(v) for k, v in counts.items()})


def render_census(c: FamilyCensus) -> str:
    """Aligned text table in the standard row order."""
    header = f"{'family / subfamily':<28}{'sym':>5}{'asym':>6}{'total':>7}"
    lines = [header, "-" * len(header)]
    for family, sub in CENSUS_ROWS:
        if sub is None:
            sym, asym, total = c.family_total(family)
            if total == 0 and family in (Family.INDETERMINATE,):
                continue
            lines.append(f"{family.value:<28}{sym:>5}{asym:>6}{total:>7}")
        else:
            sym, asym, total = c.counts.get((family, sub), (0, 0, 0))
            if total == 0:
                continue
            lines.append(f"  {sub.value:<26}{sym:>5}{asym:>6}{total:>7}")
    lines.append("-" * len(header))
    lines.append(f"{'total':<28}{'':>5}{'':>6}{c.grand_total():>7}")
    return "\n".join(lines)


def census_records(c: FamilyCensus) -> list[dict]:
    records = []
    for family, sub in CENSUS_ROWS:
        if sub is None:
            sym, asym, total = c.family_total(family)
            if total == 0:
                continue
            records.append(
                {"family": family.value, "subfamily": None, "symmetric": sym,
                 "asymmetric": asym, "total": total}
            )
        else:
            sym, asym, total = c.counts.get((family, sub), (0, 0, 0))
            if total == 0:
                continue
            records.append(
                {"family": family.value, "subfamily": sub.value, "symmetric": sym,
                 "asymmetric": asym, "total": total}
            )
    return records


# ---------------------------------------------------------------------------
# Named special sets


def _is_jekyll_hyde(c: Classification) -> bool:
    """One player's incentives always help the other, the second player's
    always harm the first, with both locked in by dominant strategies."""
    signs = {c.row.inducement, c.column.inducement}
    both_dominant = (
        c.row.dominant_strategy is not None and c.column.dominant_strategy is not None
    )
    return signs == {Inducement.ALWAYS_POSITIVE, Inducement.ALWAYS_NEGATIVE} and both_dominant


def _is_pure_conflict(c: Classification) -> bool:
    """Every improving move hurts the other player, or the game's only
    dominant strategy belongs to a player whose moves always do; in the
    latter case the dominated player's favorable responses are forced
    self-defense rather than cooperation."""
    signs = (c.row.inducement, c.column.inducement)
    if signs == (Inducement.ALWAYS_NEGATIVE, Inducement.ALWAYS_NEGATIVE):
        return True
    dominants = [
        f.inducement
        for f in (c.row, c.column)
        if f.dominant_strategy is not None
    ]
    return (
        set(signs) == {Inducement.ALWAYS_POSITIVE, Inducement.ALWAYS_NEGATIVE}
        and dominants == [Inducement.ALWAYS_NEGATIVE]
    )


def special_sets(universe: Iterable[Game]) -> dict[str, set[Game]]:
    out: dict[str, set[Game]] = {
        "fixed_rank_sum": set(),
        "pure_conflict": set(),
        "pure_cooperation": set(),
        "jekyll_hyde_type": set(),
        "pareto_deficient_equilibrium": set(),
        "ne_at_least_second_best": set(),
    }
    for g in universe:
        c = classify(g)
        signs = (c.row.inducement, c.column.inducement)
        if c.fixed_rank_sum:
            out["fixed_rank_sum"].add(g)
        if _is_pure_conflict(c):
            out["pure_conflict"].add(g)
        if signs == (Inducement.ALWAYS_POSITIVE, Inducement.ALWAYS_POSITIVE):
            out["pure_cooperation"].add(g)
        if _is_jekyll_hyde(c):
            out["jekyll_hyde_type"].add(g)
        if c.nash_weak and not (c.nash_weak & c.pareto_optimal):
            out["pareto_deficient_equilibrium"].add(g)
        if any(min(g.payoffs(cell)) >= 3 for cell in c.nash_weak):
            out["ne_at_least_second_best"].add(g)
    return out


# ---------------------------------------------------------------------------
# Mixed strategies


@dataclass(frozen=True)
class MixedEquilibrium:
    """Interior mixed equilibrium, treating ranks as cardinal values.

    Ordinal ranks carry no intensity information, so these numbers describe
    the game only under the explicit reading of ranks as utilities.
    """

    p_up: Fraction
    q_left: Fraction
    expected: tuple[Fraction, Fraction]
    cardinal_caveat: bool = True


def mixed_equilibrium(g: Game) -> MixedEquilibrium:
    r, c = g.row.ranks, g.column.ranks
    denom_q = (r[UL] - r[DL]) - (r[UR] - r[DR])
    denom_p = (c[UL] - c[UR]) - (c[DL] - c[DR])
    if denom_q == 0 or denom_p == 0:
        raise NoInteriorEquilibrium("indifference system is singular")
    q = Fraction(r[DR] - r[UR], denom_q)
    p = Fraction(c[DR] - c[DL], denom_p)
    if not (0 < p < 1 and 0 < q < 1):
        raise NoInteriorEquilibrium("indifference point is not interior")
    expected_row = q * r[UL] + (1 - q) * r[UR]
    expected_col = p * c[UL] + (1 - p) * c[DL]
    return MixedEquilibrium(p_up=p, q_left=q, expected=(expected_row, expected_col))


# ---------------------------------------------------------------------------
# Random sampling

# Cell permutations of the four interchange transforms, laid out for the
# vectorized sampler: new cell i reads old cell perm[i].
_INTERCHANGE_PERMS = np.array(
    [[0, 1, 2, 3], [2, 3, 0, 1], [1, 0, 3, 2], [3, 2, 1, 0]]
)


def sample_random_games(n: int, seed: int) -> Counter:
    """Sample games from 8 continuous-uniform payoffs and count canonical forms.

    Continuous draws are strict with probability one, so canonicalization is
    the pure orientation rule: put Row's best payoff in the right column and
    Column's best in the up row.  Returns a Counter over canonical encodings.
    """
    if n <= 0:
        raise ValueError("n must be positive")
    rng = np.random.default_rng(seed)
    payoffs = rng.random((2, n, 4))
    ranks = payoffs.argsort(axis=2).argsort(axis=2) + 1
    row_ranks, col_ranks = ranks[0], ranks[1]

    row4 = row_ranks.argmax(axis=1)
    col4 = col_ranks.argmax(axis=1)
    need_col_swap = (row4 == 0) | (row4 == 2)  # Row's 4 in the left column
    need_row_swap = (col4 == 2) | (col4 == 3)  # Column's 4 in the down row
    variant = need_row_swap * 1 + need_col_swap * 2  # index into perm table
    perms = _INTERCHANGE_PERMS[variant]
    rows = np.take_along_axis(row_ranks, perms, axis=1)
    cols = np.take_along_axis(col_ranks, perms, axis=1)

    digits = np.concatenate([rows, cols], axis=1)
    keys = (digits * (10 ** np.arange(7, -1, -1))).sum(axis=1)
    unique, counts = np.unique(keys, return_counts=True)
    out: Counter = Counter()
    for key, count in zip(unique.tolist(), counts.tolist()):
        text = str(key).zfill(8)
        out[f"{text[:4]}/{text[4:]}"] = int(count)
    return out
