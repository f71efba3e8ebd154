"""The distribution of 2x2 games.

Reproduces the payoff-family census over the 144 strict games, the named
special sets (fixed rank-sum, pure conflict/cooperation, Jekyll-Hyde), and
checks that random continuous payoffs land uniformly on the strict games.
Run: python demos/census_of_games.py
"""

from twobytwo.atlas import build_atlas
from twobytwo.classify import census, render_census, sample_random_games, special_sets
from twobytwo.naming import display_name
from twobytwo.core import parse_game

atlas = build_atlas()
strict = atlas.strict_games()

print(render_census(census(strict)))
print()

sets = special_sets(strict)
for name in ("fixed_rank_sum", "pure_conflict", "pure_cooperation", "jekyll_hyde_type"):
    members = sorted(g.encode() for g in sets[name])
    print(f"{name} ({len(members)}):")
    for enc in members:
        print(f"   {enc}  {display_name(parse_game(enc))}")
    print()

print("Pareto-deficient equilibria (the dilemmas proper):",
      len(sets["pareto_deficient_equilibrium"]), "games --",
      f"{len(sets['pareto_deficient_equilibrium']) / 144:.1%} of the strict universe.")
print("Games where both players can reach at least second best:",
      len(sets["ne_at_least_second_best"]),
      f"({len(sets['ne_at_least_second_best']) / 144:.0%}).")
print()

n = 14_400
freq = sample_random_games(n, seed=7)
expected = n / 144
worst = max(freq.items(), key=lambda kv: abs(kv[1] - expected))
print(f"{n} random-payoff games cover {len(freq)} strict games;")
print(f"largest deviation from uniform: {worst[0]} at {worst[1]} (expected {expected:.0f}).")
