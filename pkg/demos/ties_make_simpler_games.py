"""Half swaps: ties as borderlines between games.

Makes ties step by step -- Prisoner's Dilemma down to the Basic Dilemma and
the Avatamsaka game, Chicken into Volunteer's Dilemma, a principal-agent
contract into Moral Hazard, and the cyclic corridor from Fixed Cycle to
Matching Pennies.  Run: python demos/ties_make_simpler_games.py
"""

from twobytwo.classify import Player, classify
from twobytwo.core import CellIndex, parse_game
from twobytwo.naming import coordinate_name, display_name, parse_name
from twobytwo.topology import TieLevel, break_tie, make_tie, apply_swap, SwapMove, MoveKind


def show(g, note=""):
    c = classify(g)
    ne = ",".join(cell.name for cell in sorted(c.nash_weak)) or "none"
    print(f"  {g.encode():<11} {coordinate_name(g).text:<7} {display_name(g):<22}"
          f" NE={ne:<12} {c.family.value}{'  ' + note if note else ''}")


pd = parse_game("1324/4321")
print("Low half swaps simplify the dilemma:")
show(pd)
low = make_tie(make_tie(pd, Player.ROW, TieLevel.LOW), Player.COLUMN, TieLevel.LOW)
show(low, "between PD and Chicken")
basic = make_tie(make_tie(low, Player.ROW, TieLevel.LOW), Player.COLUMN, TieLevel.LOW)
show(basic, "the archetype of the whole discord layer")
print()

print("Breaking Low Dilemma's row tie either way recovers a strict game:")
show(break_tie(low, Player.ROW, TieLevel.LOW, CellIndex.UL))
show(break_tie(low, Player.ROW, TieLevel.LOW, CellIndex.DL))
print()

print("High half swaps produce the trap between PD and Stag Hunt:")
high = make_tie(make_tie(pd, Player.ROW, TieLevel.HIGH), Player.COLUMN, TieLevel.HIGH)
show(high, "win-win equilibrium, but weak dominance says defect")
ava = make_tie(make_tie(high, Player.ROW, TieLevel.LOW), Player.COLUMN, TieLevel.LOW)
show(ava, "the Golden Rule game: degenerate for both")
print()

print("Chicken destabilizes into Volunteer's Dilemma:")
chicken = parse_game("2314/4312")
vd = make_tie(make_tie(chicken, Player.ROW, TieLevel.MID), Player.COLUMN, TieLevel.MID)
show(chicken)
show(vd)
print()

print("A contract turns into Moral Hazard with one high swap for the agent:")
contract = parse_name("mu-ln")
show(contract)
show(apply_swap(contract, SwapMove(Player.COLUMN, MoveKind.HIGH34)))
print()

print("The cyclic corridor stays cyclic no matter how indifferent players get:")
g = parse_name("sa-sr")
show(g)
for player, level in (
    (Player.COLUMN, TieLevel.LOW),
    (Player.ROW, TieLevel.LOW),
    (Player.ROW, TieLevel.HIGH),
    (Player.COLUMN, TieLevel.HIGH),
):
    g = make_tie(g, player, level)
    show(g)
