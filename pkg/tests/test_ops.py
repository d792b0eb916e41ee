import pytest

from pathcover import (
    Cover,
    Graph,
    Path,
    apply_move,
    find_add,
    find_double_rep,
    find_extension,
    find_lookahead,
    find_recover,
    find_rep,
    generate,
    validate_cover,
)
from pathcover.instances import fixture_lower_bound_32, fixture_tight_ratio_24
from pathcover.ops import RECOVER

from _brute import (
    brute_max_cover,
    has_free_path_of_order,
    longest_extension_order,
)

ALL_FINDERS = (find_add, find_rep, find_double_rep)


def cover_of(k, n, *paths):
    return Cover(k, n, [Path(p) for p in paths])


class TestFindExtension:
    def test_stalled_24_vertex_center_has_no_long_extension(self):
        inst, terminal = fixture_tight_ratio_24()
        # vertex 2 sits mid-path; its only extensions are the free 2-chains
        assert find_extension(inst.graph, terminal, 2, min_order=3) is None
        ext = find_extension(inst.graph, terminal, 2, min_order=2)
        assert ext is not None and ext.order == 2

    def test_anchor_without_free_neighbor(self):
        g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
        c = cover_of(4, 5, [0, 1, 2, 3])
        assert find_extension(g, c, 1, min_order=1) is None

    def test_invalid_bounds_rejected(self):
        g = Graph(5, [(0, 1)])
        c = Cover(4, 5)
        with pytest.raises(ValueError):
            find_extension(g, c, 0, min_order=0)
        with pytest.raises(ValueError):
            find_extension(g, c, 0, min_order=3, max_order=2)

    def test_matches_exhaustive_enumeration_on_random_instances(self):
        # existence and returned order must agree with brute-force search
        for i in range(6):
            inst = generate(4, 12, 0.15, i)
            g = inst.graph
            c = Cover(4, 12, [inst.planted_paths[0]])
            free = set(c.free_vertices())
            for anchor in inst.planted_paths[0].vertices:
                brute_best = longest_extension_order(g, free, anchor, cap=3)
                for min_order in (1, 2, 3):
                    ext = find_extension(g, c, anchor, min_order=min_order)
                    if brute_best >= min_order:
                        assert ext is not None and ext.order == min_order
                        assert g.adjacent(ext.vertices[0], anchor)
                        assert all(not c.is_covered(v) for v in ext.vertices)
                        assert Path(ext.vertices).is_path_in(g)
                    else:
                        assert ext is None

    def test_respects_forbidden(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3)])
        c = cover_of(2, 4, [0, 1])
        assert find_extension(g, c, 1, min_order=1, max_order=1).vertices == (2,)
        ext = find_extension(g, c, 1, min_order=1, max_order=1, forbidden={2})
        assert ext is None


class TestFindAdd:
    def test_none_on_stalled_24_vertex_state(self):
        inst, terminal = fixture_tight_ratio_24()
        assert find_add(inst.graph, terminal) is None

    def test_finds_4_path_on_empty_cover(self):
        inst, _ = fixture_tight_ratio_24()
        move = find_add(inst.graph, Cover(4, 24))
        assert move is not None and move.kind == "add"
        assert move.coverage_delta == 4
        assert len(move.added) == 1 and move.added[0].order == 4
        assert move.added[0].is_path_in(inst.graph)

    def test_none_on_disjoint_triangles(self):
        g = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert find_add(g, Cover(4, 6)) is None

    def test_agrees_with_brute_force(self):
        for i in range(8):
            inst = generate(4, 13, 0.1, i)
            c = Cover(4, 13, inst.planted_paths[:1])
            free = set(c.free_vertices())
            move = find_add(inst.graph, c)
            assert (move is not None) == has_free_path_of_order(inst.graph, free, 4)


class TestFindRep:
    def test_empty_prefix_extension(self):
        # 4-path with one free vertex hanging off its head
        g = Graph(5, [(0, 1), (1, 2), (2, 3), (0, 4)])
        c = cover_of(4, 5, [0, 1, 2, 3])
        move = find_rep(g, c)
        assert move is not None
        assert move.added[0].vertices == (4, 0, 1, 2, 3)
        assert move.coverage_delta == 1

    def test_none_on_stalled_24_vertex_state(self):
        inst, terminal = fixture_tight_ratio_24()
        assert find_rep(inst.graph, terminal) is None

    def test_replaces_one_vertex_prefix_with_two_chain(self):
        # 5-path а0..a4 plus the free chain f0-f1 attached at a1
        g = Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (5, 6), (6, 1)])
        c = cover_of(4, 7, [0, 1, 2, 3, 4])
        move = find_rep(g, c)
        assert move is not None
        assert move.removed == (Path([0, 1, 2, 3, 4]),)
        assert move.added[0].vertices == (5, 6, 1, 2, 3, 4)
        assert move.coverage_delta == 1
        apply_move(c, move)
        assert validate_cover(g, c) == [] and c.coverage() == 6


class TestFindDoubleRep:
    def test_none_on_stalled_24_vertex_state(self):
        inst, terminal = fixture_tight_ratio_24()
        assert find_double_rep(inst.graph, terminal) is None

    def test_seven_path_splits_via_two_side_extensions(self):
        # free f at distance-2 head position, free g at distance-2 tail position
        g = Graph(9, [(i, i + 1) for i in range(6)] + [(2, 7), (4, 8)])
        c = cover_of(4, 9, [0, 1, 2, 3, 4, 5, 6])
        move = find_double_rep(g, c)
        assert move is not None
        assert {p.vertices for p in move.added} == {(0, 1, 2, 7), (8, 4, 5, 6)}
        assert move.coverage_delta == 1
        apply_move(c, move)
        assert validate_cover(g, c) == []
        assert not c.is_covered(3)  # the middle vertex is given up

    def test_colliding_extensions_do_not_count(self):
        # single free vertex adjacent to both positions cannot serve twice
        g = Graph(8, [(i, i + 1) for i in range(6)] + [(2, 7), (4, 7)])
        c = cover_of(4, 8, [0, 1, 2, 3, 4, 5, 6])
        assert find_double_rep(g, c) is None

    def test_none_on_bare_4_path(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3)])
        c = cover_of(4, 4, [0, 1, 2, 3])
        assert find_double_rep(g, c) is None

    def test_pruned_matches_unpruned_on_driver_states(self):
        # pruning relies on add/rep being exhausted first, as in the drivers
        for i in range(10):
            inst = generate(4, 14, 0.12, i)
            c = Cover(4, 14)
            while True:
                move = find_add(inst.graph, c) or find_rep(inst.graph, c)
                if move is None:
                    break
                apply_move(c, move)
            assert find_double_rep(inst.graph, c, prune=True) == find_double_rep(
                inst.graph, c, prune=False
            )


class TestFindRecover:
    def test_rejects_wrong_k(self):
        g = Graph(10, [(i, i + 1) for i in range(9)])
        with pytest.raises(ValueError, match="k = 4"):
            find_recover(g, Cover(5, 10, [Path(range(5)), Path(range(5, 10))]))

    def test_5_and_7_joined_head_to_head(self):
        edges = [(i, i + 1) for i in range(4)]
        edges += [(i, i + 1) for i in range(5, 11)]
        edges += [(0, 5)]
        g = Graph(12, edges)
        c = cover_of(4, 12, [0, 1, 2, 3, 4], [5, 6, 7, 8, 9, 10, 11])
        move = find_recover(g, c)
        assert move is not None and move.kind == RECOVER
        assert move.coverage_delta == 0
        assert sorted(p.order for p in move.added) == [4, 4, 4]
        before = c.path_count_of_order(4)
        apply_move(c, move)
        assert validate_cover(g, c) == []
        assert c.path_count_of_order(4) > before
        assert c.coverage() == 12

    def test_two_disconnected_5_paths_admit_nothing(self):
        edges = [(i, i + 1) for i in range(4)] + [(i, i + 1) for i in range(5, 9)]
        g = Graph(10, edges)
        c = cover_of(4, 10, [0, 1, 2, 3, 4], [5, 6, 7, 8, 9])
        assert find_recover(g, c) is None

    def test_6_and_6_joined_head_to_second(self):
        edges = [(i, i + 1) for i in range(5)]
        edges += [(i, i + 1) for i in range(6, 11)]
        edges += [(0, 7)]
        g = Graph(12, edges)
        c = cover_of(4, 12, [0, 1, 2, 3, 4, 5], [6, 7, 8, 9, 10, 11])
        move = find_recover(g, c)
        assert move is not None
        assert sorted(p.order for p in move.added) == [4, 4, 4]
        apply_move(c, move)
        assert validate_cover(g, c) == [] and c.coverage() == 12

    def test_4_paths_are_not_paired(self):
        edges = [(i, i + 1) for i in range(3)] + [(i, i + 1) for i in range(4, 9)] + [(0, 4)]
        g = Graph(10, edges)
        c = cover_of(4, 10, [0, 1, 2, 3], [4, 5, 6, 7, 8, 9])
        assert find_recover(g, c) is None  # needs two paths of order >= 5

    def test_memo_reuse_gives_same_answer(self):
        inst = generate(4, 16, 0.15, 3)
        c = Cover(4, 16, inst.planted_paths)
        memo = {}
        first = find_recover(inst.graph, c, memo=memo)
        assert find_recover(inst.graph, c, memo=memo) == first
        assert find_recover(inst.graph, c) == first


class TestFindLookahead:
    def test_rejects_wrong_k(self):
        g = Graph(5, [(0, 1)])
        with pytest.raises(ValueError, match="k = 4"):
            find_lookahead(g, Cover(5, 5))

    def test_none_on_stalled_32_vertex_state(self):
        inst, terminal = fixture_lower_bound_32()
        assert find_lookahead(inst.graph, terminal) is None

    def test_tail_swing_gadget_gains_two(self):
        # 6-path 0..5, free chain 7-6 at position 2, and 5 adjacent to 6
        g = Graph(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (6, 7), (7, 2), (5, 6)])
        c = cover_of(4, 8, [0, 1, 2, 3, 4, 5])
        move = find_lookahead(g, c)
        assert move is not None and move.coverage_delta == 2
        apply_move(c, move)
        assert validate_cover(g, c) == []
        assert c.coverage() == 8
        assert brute_max_cover(g, 4) == 8  # the move reaches the true optimum

    def test_failed_trials_leave_cover_unchanged(self):
        # an order-2 extension exists at the center but unlocks nothing
        g = Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)])
        c = cover_of(4, 7, [0, 1, 2, 3, 4])
        snapshot = c.copy()
        assert find_lookahead(g, c) is None
        assert c == snapshot and c.paths == snapshot.paths

    def test_prefix_swap_unlocks_replacement(self):
        # swapping prefix 0,1 out for the chain 8-7 frees vertex 1, which
        # then extends the second path via the (1, 5) edge
        g = Graph(11, [(0, 1), (1, 2), (2, 3), (3, 4), (8, 7), (7, 2),
                       (5, 6), (6, 9), (9, 10), (10, 0), (5, 1)])
        c = cover_of(4, 11, [0, 1, 2, 3, 4], [5, 6, 9, 10])
        assert find_add(g, c) is None and find_rep(g, c) is None
        move = find_lookahead(g, c)
        assert move is not None
        assert move.coverage_delta >= 1
        assert {p.vertices for p in move.added} == {(1, 5, 6, 9, 10), (8, 7, 2, 3, 4)}
        apply_move(c, move)
        assert validate_cover(g, c) == []


class TestApplyMove:
    def test_add_to_empty_cover(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3)])
        c = Cover(4, 4)
        move = find_add(g, c)
        apply_move(c, move)
        assert c.paths == [Path([0, 1, 2, 3])] and c.coverage() == 4

    def test_stale_move_rejected_on_second_application(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3)])
        c = Cover(4, 4)
        move = find_add(g, c)
        apply_move(c, move)
        with pytest.raises(ValueError, match="stale"):
            apply_move(c, move)

    def test_removed_path_must_be_present(self):
        g = Graph(5, [(0, 1), (1, 2), (2, 3), (0, 4)])
        c = cover_of(4, 5, [0, 1, 2, 3])
        move = find_rep(g, c)
        c.remove_path(Path([0, 1, 2, 3]))
        with pytest.raises(ValueError, match="stale"):
            apply_move(c, move)

    def test_long_added_paths_are_normalised(self):
        g = Graph(9, [(i, i + 1) for i in range(8)])
        c = Cover(4, 9)
        from pathcover.ops import _move

        move = _move("add", (), (Path(range(9)),))
        apply_move(c, move)
        assert [p.order for p in c.paths] == [4, 5]
        assert validate_cover(g, c) == []


class TestFinderProperties:
    @pytest.mark.parametrize("seed", range(6))
    def test_moves_keep_covers_valid(self, seed):
        inst = generate(4, 15, 0.12, seed)
        g = inst.graph
        c = Cover(4, 15)
        memo = {}
        for _ in range(60):
            move = (
                find_add(g, c)
                or find_rep(g, c)
                or find_double_rep(g, c)
                or find_recover(g, c, memo=memo)
                or find_lookahead(g, c)
            )
            if move is None:
                break
            if move.kind == RECOVER:
                assert move.coverage_delta == 0
                before = c.path_count_of_order(4)
                apply_move(c, move)
                assert c.path_count_of_order(4) > before
            else:
                assert move.coverage_delta >= 1
                apply_move(c, move)
            assert validate_cover(g, c) == []

    @pytest.mark.parametrize("seed", range(4))
    def test_finders_are_deterministic(self, seed):
        inst = generate(4, 14, 0.15, seed)
        c1 = Cover(4, 14, inst.planted_paths[:2])
        c2 = Cover(4, 14, inst.planted_paths[:2])
        for finder in (find_add, find_rep, find_double_rep, find_recover, find_lookahead):
            assert finder(inst.graph, c1) == finder(inst.graph, c2)

    @pytest.mark.parametrize("seed", range(5))
    def test_fixed_point_soundness(self, seed):
        # at a (add, rep)-free state, re-derive the two stall guarantees
        inst = generate(4, 13, 0.15, seed)
        g = inst.graph
        c = Cover(4, 13)
        while True:
            move = find_add(g, c) or find_rep(g, c)
            if move is None:
                break
            apply_move(c, move)
        free = set(c.free_vertices())
        assert not has_free_path_of_order(g, free, 4)
        for p in c.paths:
            L = p.order
            for pos, v in enumerate(p.vertices):
                bound = min(pos, L - 1 - pos)
                assert longest_extension_order(g, free, v, cap=4) <= bound
