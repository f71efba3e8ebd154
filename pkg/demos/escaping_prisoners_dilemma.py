"""Escape routes from Prisoner's Dilemma.

Walks the neighborhood of PD one payoff swap at a time, then asks the
search for the cheapest routes to a win-win game under different cost
assumptions.  Run: python demos/escaping_prisoners_dilemma.py
"""

from twobytwo.classify import Player, classify
from twobytwo.core import parse_game
from twobytwo.naming import display_name
from twobytwo.topology import (
    ALL_MOVES,
    CostModel,
    Goal,
    MoveKind,
    SwapMove,
    format_path,
    neighbors,
    shortest_path,
)

pd = parse_game("1324/4321")
print("Prisoner's Dilemma:", pd.encode())
print("equilibrium:", sorted(c.name for c in classify(pd).nash_weak),
      "family:", classify(pd).family.value)
print()

print("Each adjacent payoff swap lands somewhere different:")
for move, g in neighbors(pd):
    c = classify(g)
    print(f"  {str(move):<14} -> {g.encode()}  {display_name(g):<22} ({c.family.value})")
print()

print("The nearest win-win game (uniform costs):")
path = shortest_path(pd, Goal("family", "win-win"))
print(format_path(path))
print("...a precarious Stag Hunt: trust helps, risk-aversion bites.")
print()

print("Deadlock is one middle swap for each player -- stable but mediocre:")
path = shortest_path(pd, Goal("game", "1234/4231"))
print(format_path(path))
print()

print("With half swaps allowed and graded costs, ties open cheaper doors:")
path = shortest_path(
    pd, Goal("family", "win-win"), move_set=ALL_MOVES, cost_model=CostModel.graded()
)
print(format_path(path))
print()

print("How far is win-win from everywhere? (strict games, adjacent swaps)")
from collections import Counter

from twobytwo.atlas import build_atlas
from twobytwo.topology import escape_map

distances = escape_map(Goal("family", "win-win"), universe=build_atlas().strict_games())
histogram = Counter(int(d) for d in distances.values())
for d in sorted(histogram):
    print(f"  {d} swaps: {histogram[d]:>3} games")
print("The six games needing three swaps are exactly the fixed rank-sum games.")
