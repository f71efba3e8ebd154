"""Moves, neighbor structure, tiles/layers/links, and path search."""

import pytest

from twobytwo.atlas import build_atlas
from twobytwo.classify import Family, Player, Subfamily, classify
from twobytwo.core import CellIndex, canonical_game, format_game, parse_game
from twobytwo.naming import coordinate_name, parse_name
from twobytwo.topology import (
    ADJACENT_SWAPS,
    ALL_MOVES,
    DEFAULT_MOVES,
    HALF_SWAPS,
    NON_ADJACENT_SWAPS,
    CostModel,
    Goal,
    InvalidTarget,
    Layer,
    LinkKind,
    MoveKind,
    MoveNotApplicable,
    NoPath,
    SwapMove,
    TieLevel,
    apply_swap,
    break_tie,
    escape_map,
    goal_from_text,
    high_tile_of,
    layer_of,
    layer_set,
    make_tie,
    neighbors,
    parse_move,
    shortest_path,
    tile_links,
    tile_of,
)

PD = parse_game("1324/4321")
CHICKEN = parse_game("2314/4312")
LEADER = parse_game("3214/4213")
UL, UR, DL, DR = CellIndex

ROW_HIGH = SwapMove(Player.ROW, MoveKind.HIGH34)
COL_HIGH = SwapMove(Player.COLUMN, MoveKind.HIGH34)
ROW_MID = SwapMove(Player.ROW, MoveKind.MID23)
COL_MID = SwapMove(Player.COLUMN, MoveKind.MID23)
ROW_LOW = SwapMove(Player.ROW, MoveKind.LOW12)
COL_LOW = SwapMove(Player.COLUMN, MoveKind.LOW12)


def walk(game, *moves):
    out = [game]
    for move in moves:
        out.append(apply_swap(out[-1], move))
    return out


class TestSwaps:
    def test_pd_high_row_gives_asymmetric_dilemma(self):
        g = apply_swap(PD, ROW_HIGH)
        assert format_game(g) == "1423/4321"
        c = classify(g)
        assert c.nash_weak == {DL}
        assert not (c.nash_weak & c.pareto_optimal)

    def test_pd_mid_row_gives_total_conflict(self):
        g = apply_swap(PD, ROW_MID)
        assert format_game(g) == "1234/4321"
        assert classify(g).fixed_rank_sum

    def test_pd_low_row_gives_called_bluff(self):
        g = apply_swap(PD, ROW_LOW)
        assert format_game(g) == "2314/4321"

    def test_adjacent_swaps_are_involutions(self):
        for g in build_atlas().strict_games()[:24]:
            for move, h in neighbors(g, ADJACENT_SWAPS):
                assert apply_swap(h, move) == g

    def test_swap_requires_single_occurrences(self):
        low_tied = parse_game("1314/4311")
        with pytest.raises(MoveNotApplicable):
            apply_swap(low_tied, ROW_LOW)
        # High ranks are unique in a low-tie pattern, so high swaps work.
        apply_swap(low_tied, ROW_HIGH)


class TestHalfSwaps:
    def test_pd_to_low_dilemma(self):
        g = make_tie(PD, Player.ROW, TieLevel.LOW)
        assert format_game(g) == "1314/4321"
        g = make_tie(g, Player.COLUMN, TieLevel.LOW)
        assert format_game(g) == "1314/4311"

    def test_pd_to_high_dilemma_to_avatamsaka(self):
        steps = walk(
            PD,
            SwapMove(Player.ROW, MoveKind.MAKE_TIE, TieLevel.HIGH),
            SwapMove(Player.COLUMN, MoveKind.MAKE_TIE, TieLevel.HIGH),
            SwapMove(Player.ROW, MoveKind.MAKE_TIE, TieLevel.LOW),
            SwapMove(Player.COLUMN, MoveKind.MAKE_TIE, TieLevel.LOW),
        )
        assert format_game(steps[2]) == "1424/4421"  # High Dilemma
        assert format_game(steps[4]) == "1414/4411"  # Avatamsaka
        hd = classify(steps[2])
        assert hd.nash_weak == {UR, DL}
        ava = classify(steps[4])
        assert ava.nash_weak == {UL, UR, DL, DR}
        assert ava.row.degenerate and ava.column.degenerate

    def test_low_dilemma_break_targets(self):
        low_dilemma = parse_game("1314/4311")
        chicken_side = break_tie(low_dilemma, Player.ROW, TieLevel.LOW, UL)
        assert chicken_side.row.ranks == (2, 3, 1, 4)
        pd_side = break_tie(low_dilemma, Player.ROW, TieLevel.LOW, DL)
        assert pd_side.row.ranks == (1, 3, 2, 4)

    def test_break_tie_inverts_make_tie(self):
        for text in ("1324/4321", "2314/4312", "1423/3421"):
            g = parse_game(text)
            tied = make_tie(g, Player.ROW, TieLevel.MID)
            # The cell that held rank 3 is the one to promote back.
            target = g.row.cells_with(3)[0]
            assert break_tie(tied, Player.ROW, TieLevel.MID, target) == canonical_game(g)

    def test_break_tie_bad_target(self):
        low_dilemma = parse_game("1314/4311")
        with pytest.raises(InvalidTarget):
            break_tie(low_dilemma, Player.ROW, TieLevel.LOW, UR)

    def test_class_lattice_transitions(self):
        # strict -> low -> basic -> zero, and strict -> high -> double.
        from twobytwo.core import TieClass

        low = make_tie(PD, Player.ROW, TieLevel.LOW)
        assert low.row.tie_class is TieClass.LOW_TIES
        basic = make_tie(low, Player.ROW, TieLevel.LOW)
        assert basic.row.tie_class is TieClass.BASIC
        zero = make_tie(basic, Player.ROW, TieLevel.LOW)
        assert zero.row.tie_class is TieClass.ZERO
        high = make_tie(PD, Player.ROW, TieLevel.HIGH)
        assert high.row.tie_class is TieClass.HIGH_TIES
        double = make_tie(high, Player.ROW, TieLevel.LOW)
        assert double.row.tie_class is TieClass.DOUBLE
        triple = make_tie(high, Player.ROW, TieLevel.HIGH)
        assert triple.row.tie_class is TieClass.TRIPLE


class TestNeighbors:
    def test_strict_games_have_six_adjacent_neighbors(self):
        for g in build_atlas().strict_games():
            assert len(neighbors(g)) == 6

    def test_pd_non_adjacent_reach(self):
        found = {}
        for move, g in neighbors(PD, NON_ADJACENT_SWAPS):
            found.setdefault(move.kind, []).append(g)
        patron = parse_name("sr-sd")
        assert patron in found[MoveKind.X13]
        assert any(Layer.L2_COLUMN_ALIGNED in layer_set(g) for g in found[MoveKind.X24])
        pure_aligned = parse_name("sh-sn")
        assert pure_aligned in found[MoveKind.X14]

    def test_zero_game_has_no_swaps(self):
        zero = parse_game("0000/0000")
        assert neighbors(zero, ADJACENT_SWAPS | NON_ADJACENT_SWAPS) == []
        # Only tie-breaking applies.
        assert all(m.kind is MoveKind.BREAK_TIE for m, _ in neighbors(zero, ALL_MOVES))

    def test_graph_is_6_regular_and_connected(self):
        games = build_atlas().strict_games()
        seen = {games[0]}
        frontier = [games[0]]
        degree_sum = 0
        while frontier:
            g = frontier.pop()
            ns = neighbors(g)
            degree_sum += len(ns)
            for _, h in ns:
                if h not in seen:
                    seen.add(h)
                    frontier.append(h)
        assert len(seen) == 144
        assert degree_sum == 144 * 6


class TestLayersAndTiles:
    def test_pd_on_discord_layer(self):
        assert layer_of(PD) is Layer.L1_DISCORD

    def test_same_cell_fours_are_win_win(self):
        assert layer_of(parse_game("1423/3421")) is Layer.L3_WIN_WIN

    def test_layer_populations(self):
        counts = {}
        for g in build_atlas().strict_games():
            counts[layer_of(g)] = counts.get(layer_of(g), 0) + 1
        assert counts == {layer: 36 for layer in Layer}

    def test_pd_tile(self):
        tile = tile_of(PD)
        encodings = {format_game(g) for g in tile}
        assert encodings == {"1324/4321", "2314/4312", "1324/4312", "2314/4321"}

    def test_nine_tiles_per_layer(self):
        tiles = set()
        for g in build_atlas().strict_games():
            tiles.add(tile_of(g))
        assert len(tiles) == 36
        for tile in tiles:
            assert len(tile) == 4
            assert len({layer_of(g) for g in tile}) == 1

    def test_low_swaps_preserve_tile_mid_preserves_layer(self):
        for g in build_atlas().strict_games():
            for move, h in neighbors(g, ADJACENT_SWAPS):
                if move.kind is MoveKind.LOW12:
                    assert tile_of(h) == tile_of(g)
                if move.kind in (MoveKind.LOW12, MoveKind.MID23):
                    assert layer_of(h) is layer_of(g)
                if move.kind is MoveKind.HIGH34:
                    assert layer_of(h) is not layer_of(g)

    def test_tie_games_sit_between_layers(self):
        high_dilemma = parse_game("1424/4421")
        assert layer_set(high_dilemma) == frozenset(Layer)
        low_dilemma = parse_game("1314/4311")
        assert layer_set(low_dilemma) == {Layer.L1_DISCORD}
        zero = parse_game("0000/0000")
        assert layer_set(zero) == frozenset()

    def test_high_tile_joins_pd_and_stag_hunt(self):
        members = {format_game(g) for g in high_tile_of(PD)}
        assert members == {"1324/4321", "1423/4321", "1324/3421", "1423/3421"}


@pytest.fixture(scope="module")
def links():
    return tile_links(build_atlas().strict_games())


class TestTileLinks:

    def test_every_high_edge_classified_once(self, links):
        total_edges = sum(len(l.edges) for l in links)
        assert total_edges == 144  # 144 games x 2 high swaps / 2

    def test_hotspot_and_pipe_structure(self, links):
        hotspots = [l for l in links if l.kind is LinkKind.HOTSPOT]
        pipes = [l for l in links if l.kind is LinkKind.PIPE]
        simple = [l for l in links if l.kind is LinkKind.SIMPLE]
        assert not simple
        assert len(hotspots) * 8 + len(pipes) * 16 == 144
        for h in hotspots:
            assert len(h.tiles) == 2
            assert len(h.layers) == 2
        for p in pipes:
            assert len(p.tiles) == 4
            assert len(p.layers) == 4

    def test_battle_of_sexes_coordination_hotspot(self, links):
        leader_tile = tile_of(LEADER)
        for link in links:
            if link.kind is LinkKind.HOTSPOT and leader_tile in link.tiles:
                other = next(t for t in link.tiles if t != leader_tile)
                assert parse_name("so-sa") in other  # Pure Coordination
                return
        pytest.fail("Battle of the Sexes tile is not in any hotspot")

    def test_pd_tile_in_a_pipe(self, links):
        pd_tile = tile_of(PD)
        kinds = [l.kind for l in links if pd_tile in l.tiles]
        assert kinds == [LinkKind.PIPE]

    def test_counts_match_edge_budget(self, links):
        # Derived by exhaustive classification: six double-linked tile pairs
        # (battle/coordination, the cyclic pair, two tragic-unfair, two
        # aligned) and six four-layer pipes, exhausting the 144 high edges.
        hotspots = [l for l in links if l.kind is LinkKind.HOTSPOT]
        pipes = [l for l in links if l.kind is LinkKind.PIPE]
        assert len(hotspots) == 6
        assert len(pipes) == 6

    def test_cyclic_hotspot_links_side_layers(self, links):
        cyclic = [
            l
            for l in links
            if l.kind is LinkKind.HOTSPOT
            and all(classify(g).family is Family.CYCLIC for t in l.tiles for g in t)
        ]
        assert len(cyclic) == 1
        assert set(cyclic[0].layers) == {Layer.L2_COLUMN_ALIGNED, Layer.L4_ROW_ALIGNED}


class TestSearch:
    def test_pd_to_win_win_two_high_swaps_into_stag_hunt(self):
        path = shortest_path(PD, Goal("family", Family.WIN_WIN.value))
        assert len(path) == 2
        assert all(m.kind is MoveKind.HIGH34 for m, _ in path.steps)
        assert format_game(path.end) == "1423/3421"  # Stag Hunt
        assert classify(path.end).subfamily is Subfamily.STAG_HUNT

    def test_leader_to_win_win_single_swap(self):
        path = shortest_path(LEADER, Goal("family", Family.WIN_WIN.value))
        assert len(path) == 1

    def test_harmony_already_win_win(self):
        harmony = parse_name("sh-sh")
        path = shortest_path(harmony, Goal("family", Family.WIN_WIN.value))
        assert len(path) == 0
        assert path.end == harmony

    def test_chicken_to_no_conflict_via_hegemony(self):
        goal = goal_from_text("game:sn-sn")
        path = shortest_path(CHICKEN, goal)
        assert len(path) == 2
        middle = path.steps[0][1]
        assert coordinate_name(middle).text in ("sn-sc", "sc-sn")  # Hegemony
        assert format_game(path.end) == "2413/3412"

    def test_fixed_rank_sum_games_need_three_swaps(self):
        from twobytwo.classify import special_sets

        atlas = build_atlas()
        goal = Goal("family", Family.WIN_WIN.value)
        fixed = special_sets(atlas.strict_games())["fixed_rank_sum"]
        distances = {g: len(shortest_path(g, goal)) for g in fixed}
        assert min(distances.values()) == 3

    def test_escape_map_agrees_with_shortest_path(self):
        atlas = build_atlas()
        strict = atlas.strict_games()
        goal = Goal("family", Family.WIN_WIN.value)
        dist = escape_map(goal, universe=strict)
        assert set(dist) == set(strict)
        assert max(dist.values()) == 3
        for g in strict:
            assert dist[g] == shortest_path(g, goal).cost

    def test_goal_its_own_family_distance_zero(self):
        goal = Goal("family", Family.CYCLIC.value)
        dist = escape_map(goal, universe=build_atlas().strict_games())
        zeros = [g for g, d in dist.items() if d == 0]
        assert len(zeros) == 18

    def test_unreachable_goal(self):
        # Adjacent swaps alone never leave the strict class.
        goal = goal_from_text("game:ld-ld")
        with pytest.raises(NoPath) as err:
            shortest_path(PD, goal)
        assert err.value.explored == 144

    def test_path_replay(self):
        path = shortest_path(PD, goal_from_text("game:sn-sn"), ALL_MOVES)
        assert path.replay() == path.end

    def test_graded_costs_prefer_cheap_swaps(self):
        graded = CostModel.graded()
        path = shortest_path(PD, goal_from_text("game:sc-sc"), cost_model=graded)
        assert path.cost == 2  # two low swaps through Called Bluff
        assert all(m.kind is MoveKind.LOW12 for m, _ in path.steps)


class TestNamedTransformations:
    def test_pd_decays_through_asymmetric_dilemma_alibi_revelation(self):
        steps = walk(PD, ROW_HIGH, ROW_MID, ROW_LOW)
        assert [format_game(g) for g in steps[1:]] == [
            "1423/4321",
            "1432/4321",
            "2431/4321",
        ]
        for g in steps[1:]:
            c = classify(g)
            assert not (c.nash_weak & c.pareto_optimal)
            assert c.family is Family.PD_FAMILY

    def test_pd_to_total_conflict_then_tragedy(self):
        steps = walk(PD, ROW_MID, ROW_LOW)
        total_conflict, tragedy = steps[1], steps[2]
        assert classify(total_conflict).fixed_rank_sum
        assert format_game(tragedy) == "2134/4321"
        assert classify(tragedy).subfamily is Subfamily.TRAGIC

    def test_pd_to_leader_through_called_bluff_and_chicken(self):
        steps = walk(PD, ROW_LOW, COL_LOW, ROW_MID, COL_MID)
        assert [format_game(g) for g in steps[1:]] == [
            "2314/4321",
            "2314/4312",
            "3214/4312",
            "3214/4213",
        ]
        assert classify(steps[2]).subfamily is Subfamily.CHICKEN
        assert classify(steps[4]).subfamily is Subfamily.BATTLE_OF_THE_SEXES

    def test_pd_to_no_conflict_through_stag_hunt(self):
        steps = walk(PD, ROW_HIGH, COL_HIGH, ROW_LOW, COL_LOW)
        names = [coordinate_name(g).text for g in steps]
        assert names == ["sd-sd", "su-sd", "su-su", "sn-su", "sn-sn"]
        stag_hunt = steps[2]
        assert classify(stag_hunt).subfamily is Subfamily.STAG_HUNT
        privileged_hunt = steps[3]
        c = classify(privileged_hunt)
        assert c.nash_weak == {UR}
        assert c.family is Family.WIN_WIN
        no_conflict = steps[4]
        assert classify(no_conflict).nash_weak == {UR}

    def test_chicken_to_no_conflict_through_hegemony(self):
        steps = walk(CHICKEN, ROW_HIGH, COL_HIGH)
        hegemony = steps[1]
        c = classify(hegemony)
        assert c.family is Family.UNFAIR
        # The dominant player is the one stuck with the worse payoff.
        assert c.row.dominant_strategy is not None
        assert format_game(steps[2]) == "2413/3412"

    def test_leader_to_privileged_through_pure_coordination(self):
        steps = walk(LEADER, ROW_HIGH, ROW_MID)
        pure_coordination = steps[1]
        assert coordinate_name(pure_coordination).text == "so-sa"
        cells = [pure_coordination.payoffs(c) for c in CellIndex]
        assert all(r == c for r, c in cells)
        privileged = steps[2]
        c = classify(privileged)
        assert c.nash_weak == {UR}
        assert c.family is Family.WIN_WIN
        assert (c.row.dominant_strategy is None) != (c.column.dominant_strategy is None)

    def test_samaritans_dilemma_two_pure_aligned_escapes(self):
        samaritan = parse_name("sh-sc")
        c = classify(samaritan)
        assert c.family is Family.BIASED
        row_escape = apply_swap(samaritan, ROW_HIGH)
        col_escape = apply_swap(samaritan, COL_HIGH)
        assert {format_game(row_escape), format_game(col_escape)} == {
            "3421/3421",
            "3412/3412",
        }
        for g in (row_escape, col_escape):
            assert g.row.ranks == g.column.ranks  # pure aligned
            assert classify(g).family is Family.WIN_WIN

    def test_chicken_to_volunteers_dilemma(self):
        steps = walk(
            CHICKEN,
            SwapMove(Player.ROW, MoveKind.MAKE_TIE, TieLevel.MID),
            SwapMove(Player.COLUMN, MoveKind.MAKE_TIE, TieLevel.MID),
        )
        assert coordinate_name(steps[2]).text == "mb-mb"
        c = classify(steps[2])
        assert len(c.nash_weak) == 2

    def test_principal_agent_to_moral_hazard(self):
        principal_agent = parse_name("mu-ln")
        assert classify(principal_agent).family is Family.WIN_WIN
        moral_hazard = apply_swap(principal_agent, COL_HIGH)
        assert format_game(moral_hazard) == "1433/4311"
        c = classify(moral_hazard)
        assert c.family is Family.PD_FAMILY
        assert not (c.nash_weak & c.pareto_optimal)

    def test_fixed_cycle_to_matching_pennies(self):
        fixed_cycle = parse_name("sa-sr")
        steps = walk(
            fixed_cycle,
            SwapMove(Player.COLUMN, MoveKind.MAKE_TIE, TieLevel.LOW),
            SwapMove(Player.ROW, MoveKind.MAKE_TIE, TieLevel.LOW),
            SwapMove(Player.ROW, MoveKind.MAKE_TIE, TieLevel.HIGH),
            SwapMove(Player.COLUMN, MoveKind.MAKE_TIE, TieLevel.HIGH),
        )
        names = [coordinate_name(g).text for g in steps]
        assert names == ["sa-sr", "sa-lb", "lo-lb", "do-lb", "do-db"]
        for g in steps:
            assert classify(g).family is Family.CYCLIC
        assert format_game(steps[4]) == "1441/4114"  # Matching Pennies


class TestMoveText:
    def test_round_trip(self):
        for text in ("low12:row", "high34:column", "tie-low:row", "break-low:row:UL",
                     "break-high:column:DR:down"):
            move = parse_move(text)
            assert parse_move(str(move)) == move

    def test_bad_moves(self):
        with pytest.raises(MoveNotApplicable):
            parse_move("frob:row")
        with pytest.raises(MoveNotApplicable):
            parse_move("low12:nobody")
