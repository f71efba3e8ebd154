"""Acceptance suite: every primary criterion at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -s`` to see one line per
criterion.  All checks are exact except the random-sampling criterion,
whose tolerance is five binomial standard deviations under a fixed seed.
"""

from twobytwo.atlas import (
    Equivalence,
    build_atlas,
    enumerate_games,
    enumerate_patterns,
    orbit_count_oracle,
    raw_games,
    symmetric_catalog,
)
from twobytwo.chart import layout_strict, render_dot, render_svg
from twobytwo.classify import (
    Family,
    Subfamily,
    census,
    classify,
    sample_random_games,
    special_sets,
)
from twobytwo.core import (
    INTERCHANGE_TRANSFORMS,
    OrientationTransform,
    TieClass,
    apply_transform,
    canonical_game,
    canonicalize,
    format_game,
    is_symmetric,
    normalize_payoffs,
    parse_game,
)
from twobytwo.naming import coordinate_name, parse_name
from twobytwo.topology import (
    ADJACENT_SWAPS,
    Goal,
    MoveKind,
    Player,
    SwapMove,
    TieLevel,
    apply_swap,
    neighbors,
    shortest_path,
)

PD = parse_game("1324/4321")
WIN_WIN = Goal("family", Family.WIN_WIN.value)


def report(line: str) -> None:
    print(f"ACCEPTANCE PASS: {line}")


def test_strict_enumeration():
    strict = (TieClass.STRICT, TieClass.STRICT)
    games = enumerate_games(strict)
    assert len(games) == 144
    symmetric = [g for g in games if is_symmetric(g)]
    assert len(symmetric) == 12
    assert len(games) - len(symmetric) == 132
    assert len(enumerate_games(strict, Equivalence.INTERCHANGE_REFLECTION)) == 78
    assert len(raw_games(strict)) == 576
    assert sum(len(v) for v in enumerate_patterns().values()) == 75
    report("strict enumeration: 144 canonical (12 sym + 132 asym), 78 reflected, 576 raw, 75 patterns")


def test_complete_set_counts_and_burnside():
    assert len(enumerate_games()) == 1413
    assert len(enumerate_games(None, Equivalence.INTERCHANGE_REFLECTION)) == 726
    assert orbit_count_oracle(Equivalence.INTERCHANGE) == 1413
    assert orbit_count_oracle(Equivalence.INTERCHANGE_REFLECTION) == 726
    report("complete set: 1413 interchange / 726 reflected, Burnside oracle agrees on both")


def test_symmetric_catalog():
    cat = symmetric_catalog()
    assert len(cat.entries) == 47
    assert len(cat.distinct) == 38
    assert len([e for e in cat.distinct if e.code != "ze"]) == 37
    pennies = parse_game("1441/4114")
    reflected = canonical_game(apply_transform(pennies, OrientationTransform.TRANSPOSE))
    assert reflected == pennies and not is_symmetric(pennies)
    catalog_games = {format_game(e.game) for e in cat.entries}
    assert format_game(pennies) not in catalog_games
    report("symmetric catalog: 38 distinct (37 + Zero), 47 listed, Matching Pennies excluded")


def test_table_1_census():
    c = census(build_atlas().strict_games())
    expected_families = {
        Family.WIN_WIN: (6, 30, 36),
        Family.BIASED: (2, 42, 44),
        Family.SECOND_BEST: (2, 10, 12),
        Family.UNFAIR: (1, 18, 19),
        Family.PD_FAMILY: (1, 14, 15),
        Family.CYCLIC: (0, 18, 18),
    }
    for family, expected in expected_families.items():
        assert c.family_total(family) == expected, family
    expected_subfamilies = {
        (Family.WIN_WIN, Subfamily.HARMONIOUS): (3, 24, 27),
        (Family.WIN_WIN, Subfamily.STAG_HUNT): (3, 6, 9),
        (Family.BIASED, Subfamily.ALTRUISTIC): (0, 12, 12),
        (Family.BIASED, Subfamily.ALTRUISTIC_SELF_SERVING): (0, 12, 12),
        (Family.BIASED, Subfamily.SELF_SERVING): (0, 12, 12),
        (Family.BIASED, Subfamily.BATTLE_OF_THE_SEXES): (2, 6, 8),
        (Family.UNFAIR, Subfamily.CHICKEN): (1, 0, 1),
        (Family.UNFAIR, Subfamily.WINNER): (0, 6, 6),
        (Family.UNFAIR, Subfamily.WIN_LOSE): (0, 6, 6),
        (Family.UNFAIR, Subfamily.LOSER): (0, 6, 6),
        (Family.PD_FAMILY, Subfamily.PRISONERS_DILEMMA): (1, 2, 3),
        (Family.PD_FAMILY, Subfamily.ALIBI): (0, 4, 4),
        (Family.PD_FAMILY, Subfamily.TRAGIC): (0, 8, 8),
    }
    for key, expected in expected_subfamilies.items():
        assert c.counts[key] == expected, key
    assert c.grand_total() == 144
    report("census: every family and subfamily cell matches (36/44/12/19/15/18, sym 6/2/2/1/1/0)")


def test_special_sets():
    sets = special_sets(build_atlas().strict_games())
    expected = {
        "fixed_rank_sum": 6,
        "pure_conflict": 16,
        "pure_cooperation": 14,
        "jekyll_hyde_type": 8,
        "pareto_deficient_equilibrium": 7,
        "ne_at_least_second_best": 92,
    }
    for key, count in expected.items():
        assert len(sets[key]) == count, key
    assert sets["fixed_rank_sum"] <= sets["pure_conflict"]
    report("special sets: fixed-sum 6, conflict 16, cooperation 14, Jekyll-Hyde 8, deficient 7, >=2nd-best 92")


def test_path_lengths():
    pd_path = shortest_path(PD, WIN_WIN)
    assert len(pd_path) == 2
    assert format_game(pd_path.end) == "1423/3421"
    assert classify(pd_path.end).subfamily is Subfamily.STAG_HUNT

    leader = parse_name("sb-sb")
    assert len(shortest_path(leader, WIN_WIN)) == 1

    chicken = parse_game("2314/4312")
    to_no_conflict = shortest_path(chicken, Goal("game", "2413/3412"))
    assert len(to_no_conflict) == 2

    fixed = special_sets(build_atlas().strict_games())["fixed_rank_sum"]
    distances = [len(shortest_path(g, WIN_WIN)) for g in fixed]
    assert min(distances) == 3
    report("paths: PD->win-win 2 (Stag Hunt), Leader 1, Chicken->No Conflict 2, fixed-sum minimum 3")


def _walk(game, *moves):
    out = [canonical_game(game)]
    for m in moves:
        out.append(apply_swap(out[-1], m))
    return out


def test_transformation_walkthroughs():
    row, col = Player.ROW, Player.COLUMN
    low, mid, high = MoveKind.LOW12, MoveKind.MID23, MoveKind.HIGH34

    def mv(player, kind):
        return SwapMove(player, kind)

    # PD -> Asymmetric Dilemma -> Alibi -> Revelation, all Pareto-deficient.
    decay = _walk(PD, mv(row, high), mv(row, mid), mv(row, low))
    assert [format_game(g) for g in decay[1:]] == ["1423/4321", "1432/4321", "2431/4321"]
    assert all(
        not (classify(g).nash_weak & classify(g).pareto_optimal) for g in decay[1:]
    )

    # PD -> Total Conflict (fixed rank-sum) -> Tragedy.
    conflict = _walk(PD, mv(row, mid), mv(row, low))
    assert classify(conflict[1]).fixed_rank_sum
    assert [format_game(g) for g in conflict[1:]] == ["1234/4321", "2134/4321"]

    # PD -> Called Bluff -> Chicken -> asymmetric battle -> Leader.
    battles = _walk(PD, mv(row, low), mv(col, low), mv(row, mid), mv(col, mid))
    assert [format_game(g) for g in battles[1:]] == [
        "2314/4321", "2314/4312", "3214/4312", "3214/4213",
    ]
    assert classify(battles[2]).subfamily is Subfamily.CHICKEN
    assert classify(battles[4]).subfamily is Subfamily.BATTLE_OF_THE_SEXES

    # PD -> Asymmetric PD -> Stag Hunt -> Privileged Hunt -> No Conflict.
    taming = _walk(PD, mv(row, high), mv(col, high), mv(row, low), mv(col, low))
    assert [coordinate_name(g).text for g in taming] == [
        "sd-sd", "su-sd", "su-su", "sn-su", "sn-sn",
    ]
    assert classify(taming[2]).subfamily is Subfamily.STAG_HUNT
    assert classify(taming[4]).family is Family.WIN_WIN

    # Chicken -> Hegemony -> No Conflict.
    hegemony = _walk(parse_game("2314/4312"), mv(row, high), mv(col, high))
    assert classify(hegemony[1]).family is Family.UNFAIR
    assert format_game(hegemony[2]) == "2413/3412"

    # Leader -> Pure Coordination -> Privileged (dominance solvable).
    coordination = _walk(parse_name("sb-sb"), mv(row, high), mv(row, mid))
    assert coordinate_name(coordination[1]).text == "so-sa"
    privileged = classify(coordination[2])
    assert privileged.family is Family.WIN_WIN and len(privileged.nash_weak) == 1

    # Samaritan's Dilemma -> two Pure Aligned win-win games.
    samaritan = parse_name("sh-sc")
    escapes = {
        format_game(apply_swap(samaritan, mv(row, high))),
        format_game(apply_swap(samaritan, mv(col, high))),
    }
    assert escapes == {"3421/3421", "3412/3412"}

    # The expanded PD tile: cell values verbatim.
    tile = {
        "sd-sc": "1324/4312", "sd-ld": "1324/4311", "sd-sd": "1324/4321",
        "ld-sc": "1314/4312", "ld-ld": "1314/4311", "ld-sd": "1314/4321",
        "sc-sc": "2314/4312", "sc-ld": "2314/4311", "sc-sd": "2314/4321",
    }
    for name, encoding in tile.items():
        g = parse_name(name)
        assert format_game(g) == encoding, name
        assert coordinate_name(g).text == name

    # Low half swaps: PD -> Low Dilemma -> Basic Dilemma.
    lows = _walk(
        PD,
        SwapMove(row, MoveKind.MAKE_TIE, TieLevel.LOW),
        SwapMove(col, MoveKind.MAKE_TIE, TieLevel.LOW),
        SwapMove(row, MoveKind.MAKE_TIE, TieLevel.LOW),
        SwapMove(col, MoveKind.MAKE_TIE, TieLevel.LOW),
    )
    assert format_game(lows[2]) == "1314/4311"
    assert format_game(lows[4]) == "1114/4111"

    # High half swaps to High Dilemma, then low ones to Avatamsaka.
    highs = _walk(
        PD,
        SwapMove(row, MoveKind.MAKE_TIE, TieLevel.HIGH),
        SwapMove(col, MoveKind.MAKE_TIE, TieLevel.HIGH),
        SwapMove(row, MoveKind.MAKE_TIE, TieLevel.LOW),
        SwapMove(col, MoveKind.MAKE_TIE, TieLevel.LOW),
    )
    assert format_game(highs[2]) == "1424/4421"
    high_dilemma = classify(highs[2])
    assert len(high_dilemma.nash_weak) == 2
    assert format_game(highs[4]) == "1414/4411"
    avatamsaka = classify(highs[4])
    assert avatamsaka.row.degenerate and avatamsaka.column.degenerate

    # Chicken -> Volunteer's Dilemma by middle half swaps.
    volunteer = _walk(
        parse_game("2314/4312"),
        SwapMove(row, MoveKind.MAKE_TIE, TieLevel.MID),
        SwapMove(col, MoveKind.MAKE_TIE, TieLevel.MID),
    )
    assert coordinate_name(volunteer[2]).text == "mb-mb"

    # Principal-Agent -> Moral Hazard by a high swap for the agent.
    hazard = _walk(parse_name("mu-ln"), mv(col, high))
    assert format_game(hazard[1]) == "1433/4311"
    moral_hazard = classify(hazard[1])
    assert moral_hazard.family is Family.PD_FAMILY
    assert not (moral_hazard.nash_weak & moral_hazard.pareto_optimal)

    # Fixed Cycle -> Right Cycle -> Matching Pennies, cyclic throughout.
    cycles = _walk(
        parse_name("sa-sr"),
        SwapMove(col, MoveKind.MAKE_TIE, TieLevel.LOW),
        SwapMove(row, MoveKind.MAKE_TIE, TieLevel.LOW),
        SwapMove(row, MoveKind.MAKE_TIE, TieLevel.HIGH),
        SwapMove(col, MoveKind.MAKE_TIE, TieLevel.HIGH),
    )
    assert [coordinate_name(g).text for g in cycles] == [
        "sa-sr", "sa-lb", "lo-lb", "do-lb", "do-db",
    ]
    assert all(classify(g).family is Family.CYCLIC for g in cycles)
    report("walkthroughs: the classic transformation sequences replay move-by-move onto the stated games")


def test_property_suites():
    atlas = build_atlas()

    # Swap involution over every game and applicable swap.
    swap_kinds = ADJACENT_SWAPS | {MoveKind.X13, MoveKind.X24, MoveKind.X14}
    for g in atlas.games:
        for move, h in neighbors(g, swap_kinds):
            assert apply_swap(h, move) == g, (format_game(g), str(move))

    # Canonicalization idempotence and orbit stability over all raw pairs.
    for g in raw_games():
        key = canonicalize(g)
        again = canonicalize(key.game)
        assert again.game == key.game
        assert again.applied is OrientationTransform.IDENTITY
    for g in atlas.games[::7]:
        for t in INTERCHANGE_TRANSFORMS:
            assert canonical_game(apply_transform(g, t)) == g

    # Monotone normalization invariance (seeded sweep).
    import random

    rng = random.Random(2012)
    for _ in range(500):
        vals = [rng.randint(-20, 20) for _ in range(4)]
        base = normalize_payoffs(vals)
        assert normalize_payoffs([v * 5 + 3 for v in vals]) == base
        assert normalize_payoffs([v**3 for v in vals]) == base

    # 6-regular connectivity of the strict adjacent-swap graph.
    strict = atlas.strict_games()
    seen = {strict[0]}
    frontier = [strict[0]]
    while frontier:
        g = frontier.pop()
        ns = neighbors(g)
        assert len(ns) == 6
        for _, h in ns:
            if h not in seen:
                seen.add(h)
                frontier.append(h)
    assert len(seen) == 144

    # Conservation laws: low swaps keep the tile, low/mid keep the layer,
    # high swaps always change it.
    from twobytwo.topology import layer_of, tile_of

    for g in strict:
        for move, h in neighbors(g, ADJACENT_SWAPS):
            if move.kind is MoveKind.LOW12:
                assert tile_of(h) == tile_of(g)
            if move.kind in (MoveKind.LOW12, MoveKind.MID23):
                assert layer_of(h) is layer_of(g)
            else:
                assert layer_of(h) is not layer_of(g)

    # Make-tie / break-tie inversion: every merge is undone by one of the
    # enumerated break moves, except the two-and-two collapse of a Double
    # pattern into Zero, which no single break can split back.
    for g in atlas.games:
        for move, merged in neighbors(g, frozenset({MoveKind.MAKE_TIE})):
            p = g.row if move.player is Player.ROW else g.column
            sizes = sorted(len(cells) for _, cells in p.levels())
            double_to_zero = sizes == [2, 2]
            restored = {
                h
                for back, h in neighbors(merged, frozenset({MoveKind.BREAK_TIE}))
                if back.player is move.player
            }
            if double_to_zero:
                assert g not in restored, format_game(g)
            else:
                assert g in restored, (format_game(g), str(move))

    # Name round trip over the full atlas.
    for g in atlas.games:
        assert parse_name(coordinate_name(g).text) == g

    # Encoding round trip over all 5,625 raw pairs.
    count = 0
    for g in raw_games():
        assert parse_game(format_game(g)) == g
        count += 1
    assert count == 5625
    report("property suites: involution, idempotence, monotone invariance, 6-regularity, "
           "conservation, tie inversion, name and encoding round trips")


def test_random_distribution():
    n = 144_000
    freq = sample_random_games(n, seed=20120608)
    assert sum(freq.values()) == n
    strict_encodings = {format_game(g) for g in build_atlas().strict_games()}
    assert set(freq) <= strict_encodings  # ties have measure zero
    assert len(freq) == 144
    sigma = (n * (1 / 144) * (143 / 144)) ** 0.5
    for encoding, count in freq.items():
        assert abs(count - 1000) <= 5 * sigma, (encoding, count)
    assert freq == sample_random_games(n, seed=20120608)
    report(f"random sampling: all 144 strict games within 5 sigma of n/144 (sigma={sigma:.1f}), no ties")


def test_chart_determinism():
    atlas = build_atlas()
    layout = layout_strict(atlas)
    svg = render_svg(layout)
    assert svg.count("<g id=") == 144
    diagonal = {g for g, p in layout.cells.items() if p.x == p.y}
    assert all(is_symmetric(atlas.games[i]) for i in diagonal)
    assert len(diagonal) == 12
    dot = render_dot(layout)
    assert sum(1 for line in dot.splitlines() if "--" in line) == 432
    assert sum(1 for line in dot.splitlines()
               if line.strip().startswith('"') and "--" not in line) == 144
    assert svg == render_svg(layout_strict(atlas))
    assert dot == render_dot(layout_strict(atlas))
    report("charts: 144 SVG cells with the symmetric diagonal, 144/432 DOT graph, byte-stable")
