"""Tests for the proper interval solver.

Expected move counts were computed with the brute-force BFS oracle
before the solver existed; the wide path example is checked against
per-token distance sums and full sequence validation.
"""

import pytest

from tokenslide.generate import (
    enumerate_independent_sets,
    enumerate_proper_representations,
    gen_instance,
    path_representation,
    quadratic_path_instance,
)
from tokenslide.graphs import Graph, find_strong_twins, validate_sequence
from tokenslide.intervals import parse_representation
from tokenslide.oracle import SlideSpace, bfs
from tokenslide.proper import (
    block_order,
    build_string,
    canonical_order,
    compute_heights,
    partition_blocks,
    solve_proper,
    token_path,
    token_schedule,
)
from tokenslide.results import SolverInputError

# Path on 36 vertices with nine tokens per side, chosen so the colored
# string splits into four runs between zeroes of the height profile.
WIDE_N = 36
WIDE_BLUE = (2, 4, 10, 18, 22, 26, 30, 32, 34)
WIDE_RED = (6, 8, 12, 14, 16, 20, 24, 28, 36)


def wide_rep():
    return path_representation(WIDE_N)


class TestCanonicalOrder:
    def test_path_is_identity(self):
        assert canonical_order(path_representation(5)) == (1, 2, 3, 4, 5)

    def test_relabeled_path(self):
        rep = parse_representation("L2 L3 R2 L1 R3 R1")
        assert canonical_order(rep) == (2, 3, 1)

    def test_relabeled_edge(self):
        rep = parse_representation("L2 L1 R2 R1")
        assert canonical_order(rep) == (2, 1)

    def test_rejects_nested(self):
        rep = parse_representation("L1 L2 R2 R1")
        with pytest.raises(SolverInputError) as exc:
            canonical_order(rep)
        assert exc.value.kind == "NOT_PROPER"

    def test_rejects_disconnected(self):
        rep = parse_representation("L1 R1 L2 R2")
        with pytest.raises(SolverInputError) as exc:
            canonical_order(rep)
        assert exc.value.kind == "DISCONNECTED"


class TestBuildString:
    def test_single_vertex_both_colors(self):
        """A vertex in both sets contributes blue before red."""
        rep = parse_representation("L1 R1")
        s = build_string(canonical_order(rep), (1,), (1,))
        assert s.entries == ((1, "B"), (1, "R"))

    def test_orders_by_position(self):
        rep = path_representation(4)
        s = build_string(canonical_order(rep), (1, 3), (2, 4))
        assert s.entries == ((1, "B"), (2, "R"), (3, "B"), (4, "R"))

    def test_relabeled_positions(self):
        rep = parse_representation("L2 L3 R2 L1 R3 R1")
        s = build_string(canonical_order(rep), (1,), (2,))
        assert s.entries == ((2, "R"), (1, "B"))

    def test_empty(self):
        s = build_string(canonical_order(path_representation(3)), (), ())
        assert s.entries == ()

    def test_cardinality_mismatch(self):
        rep = path_representation(4)
        with pytest.raises(ValueError):
            build_string(canonical_order(rep), (1,), (2, 4))


class TestHeights:
    def test_alternating(self):
        rep = path_representation(4)
        s = build_string(canonical_order(rep), (1, 3), (2, 4))
        assert compute_heights(s) == (0, 1, 0, 1, 0)

    def test_wide_example_returns_to_zero_four_times(self):
        s = build_string(canonical_order(wide_rep()), WIDE_BLUE, WIDE_RED)
        h = compute_heights(s)
        assert len(h) == 19
        assert h[0] == 0 and h[-1] == 0
        assert [i for i in range(1, 19) if h[i] == 0] == [4, 6, 16, 18]

    def test_red_start_goes_negative(self):
        rep = path_representation(2)
        s = build_string(canonical_order(rep), (2,), (1,))
        assert compute_heights(s) == (0, -1, 0)


class TestBlocks:
    def test_wide_example_spans(self):
        s = build_string(canonical_order(wide_rep()), WIDE_BLUE, WIDE_RED)
        blocks = partition_blocks(s, compute_heights(s))
        assert [b.span for b in blocks] == [(1, 4), (5, 6), (7, 16), (17, 18)]
        assert [b.tokens for b in blocks] == [(1, 2), (3, 3), (4, 8), (9, 9)]
        assert [b.start_color for b in blocks] == ["B", "B", "R", "B"]

    def test_single_token_block(self):
        rep = path_representation(2)
        s = build_string(canonical_order(rep), (2,), (1,))
        blocks = partition_blocks(s, compute_heights(s))
        assert len(blocks) == 1
        assert blocks[0].span == (1, 2)
        assert blocks[0].start_color == "R"

    def test_no_tokens_no_blocks(self):
        rep = path_representation(3)
        s = build_string(canonical_order(rep), (), ())
        assert partition_blocks(s, compute_heights(s)) == ()


class TestBlockOrder:
    def test_wide_example(self):
        """Only the red/blue boundary between the first two runs binds."""
        s = build_string(canonical_order(wide_rep()), WIDE_BLUE, WIDE_RED)
        blocks = partition_blocks(s, compute_heights(s))
        assert block_order(blocks, s) == (1, 0, 2, 3)

    def test_swap_on_path(self):
        rep = path_representation(4)
        s = build_string(canonical_order(rep), (1, 3), (2, 4))
        blocks = partition_blocks(s, compute_heights(s))
        assert block_order(blocks, s) == (1, 0)

    def test_blue_then_red_boundary_keeps_left_first(self):
        rep = path_representation(6)
        s = build_string(canonical_order(rep), (2, 6), (1, 4))
        blocks = partition_blocks(s, compute_heights(s))
        assert [b.start_color for b in blocks] == ["R", "R"]
        assert block_order(blocks, s) == (0, 1)


class TestTokenPath:
    def test_same_vertex_empty(self):
        assert token_path(path_representation(8), 3, 3) == ()

    def test_path_end_to_end(self):
        assert token_path(path_representation(8), 1, 8) == (1, 2, 3, 4, 5, 6, 7, 8)

    def test_leftward(self):
        assert token_path(path_representation(5), 4, 2) == (4, 3, 2)

    def test_triangle_direct_hop(self):
        rep = parse_representation("L1 L2 L3 R1 R2 R3")
        assert token_path(rep, 1, 3) == (1, 3)

    def test_skips_through_overlaps(self):
        # vertices 1,2,3 mutually adjacent, 3-4 adjacent: 1 can hop to 3
        rep = parse_representation("L1 L2 L3 R1 R2 L4 R3 R4")
        assert token_path(rep, 1, 4) == (1, 3, 4)

    def test_matches_bfs_distance(self):
        for seed in range(8):
            inst = gen_instance("proper", 14, 3, seed=seed)
            g = inst.graph
            for u in (1, 5, 9):
                for v in (2, 7, 14):
                    path = token_path(inst.rep, u, v)
                    hops = max(len(path) - 1, 0)
                    assert hops == g.distance(u, v)


class TestSchedule:
    def test_wide_example(self):
        sched = token_schedule(wide_rep(), WIDE_BLUE, WIDE_RED)
        assert sched == (
            (3, "R"),
            (2, "R"),
            (1, "R"),
            (4, "L"),
            (5, "L"),
            (6, "L"),
            (7, "L"),
            (8, "L"),
            (9, "R"),
        )

    def test_identity_tokens_stay(self):
        # red-then-blue at each boundary forces right-to-left block order
        sched = token_schedule(path_representation(5), (1, 3), (1, 3))
        assert sched == ((2, "C"), (1, "C"))

    def test_empty(self):
        assert token_schedule(path_representation(3), (), ()) == ()


class TestSolve:
    def test_wide_example_count_and_prefix(self):
        res = solve_proper(wide_rep(), WIDE_BLUE, WIDE_RED)
        assert res.yes
        assert res.move_count == 38
        assert res.moves[:6] == (
            (10, 11),
            (11, 12),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 8),
        )
        g = Graph.from_representation(wide_rep())
        check = validate_sequence(g, WIDE_BLUE, WIDE_RED, res.moves)
        assert check.ok, check.reason

    def test_single_token_along_path(self):
        res = solve_proper(path_representation(8), (1,), (8,))
        assert res.yes and res.move_count == 7
        assert res.moves == ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8))

    def test_swap_needs_right_block_first(self):
        res = solve_proper(path_representation(4), (1, 3), (2, 4))
        assert res.yes and res.moves == ((3, 4), (1, 2))

    def test_identity_zero_moves(self):
        res = solve_proper(path_representation(6), (2, 5), (2, 5))
        assert res.yes and res.move_count == 0

    def test_no_tokens(self):
        res = solve_proper(path_representation(3), (), ())
        assert res.yes and res.moves == ()

    @pytest.mark.parametrize("k,count", [(1, 7), (2, 26), (3, 57)])
    def test_quadratic_family(self, k, count):
        inst = quadratic_path_instance(k)
        res = solve_proper(inst.rep, inst.blue, inst.red)
        assert res.yes
        assert res.move_count == count
        check = validate_sequence(inst.graph, inst.blue, inst.red, res.moves)
        assert check.ok, check.reason

    def test_cardinality_mismatch_is_no(self):
        res = solve_proper(path_representation(5), (1,), (3, 5))
        assert not res.yes
        assert res.reason == "CARDINALITY_MISMATCH"

    def test_reversal_has_same_count(self):
        for seed in range(6):
            inst = gen_instance("proper", 18, 4, seed=seed)
            fwd = solve_proper(inst.rep, inst.blue, inst.red)
            bwd = solve_proper(inst.rep, inst.red, inst.blue)
            assert fwd.yes and bwd.yes
            assert fwd.move_count == bwd.move_count

    def test_random_instances_validate(self):
        for seed in range(10):
            inst = gen_instance("proper", 25, 6, seed=seed)
            res = solve_proper(inst.rep, inst.blue, inst.red)
            assert res.yes
            check = validate_sequence(inst.graph, inst.blue, inst.red, res.moves)
            assert check.ok, check.reason


class TestSolveErrors:
    def test_twins_rejected(self):
        rep = parse_representation("L1 L2 R1 R2")
        with pytest.raises(SolverInputError) as exc:
            solve_proper(rep, (1,), (2,))
        assert exc.value.kind == "STRONG_TWINS"
        assert exc.value.details == ((1, 2),)

    def test_triangle_rejected(self):
        rep = parse_representation("L1 L2 L3 R1 R2 R3")
        with pytest.raises(SolverInputError) as exc:
            solve_proper(rep, (1,), (3,))
        assert exc.value.kind == "STRONG_TWINS"

    def test_not_proper_rejected(self):
        rep = parse_representation("L1 L2 R2 R1")
        with pytest.raises(SolverInputError) as exc:
            solve_proper(rep, (2,), (2,))
        assert exc.value.kind == "NOT_PROPER"

    def test_dependent_blue_rejected(self):
        with pytest.raises(SolverInputError) as exc:
            solve_proper(path_representation(4), (1, 2), (3, 4))
        assert exc.value.kind == "NOT_INDEPENDENT"


class TestAgainstOracle:
    def test_exhaustive_small(self):
        """Move counts agree with BFS on every small twin-free instance."""
        checked = 0
        for n in range(2, 7):
            for rep in enumerate_proper_representations(n):
                if len(rep.component_segments()) > 1:
                    continue
                g = Graph.from_representation(rep)
                if find_strong_twins(g):
                    continue
                space = SlideSpace(g)
                for k in (1, 2):
                    sets = list(enumerate_independent_sets(g, k))
                    for blue in sets:
                        for red in sets:
                            res = solve_proper(rep, blue, red)
                            assert res.yes
                            dist = space.distance(blue, red)
                            assert dist == res.move_count, (
                                n,
                                rep.serialize(),
                                blue,
                                red,
                            )
                            checked += 1
        assert checked > 300

    def test_medium_path_against_oracle(self):
        g = Graph.from_representation(path_representation(9))
        blue, red = (1, 4, 7), (3, 6, 9)
        res = solve_proper(path_representation(9), blue, red)
        oracle = bfs(g, blue, red)
        assert oracle.reachable
        assert res.move_count == oracle.distance == 6
