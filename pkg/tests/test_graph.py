import pytest
from hypothesis import given, settings, strategies as st

from pathcover import (
    Cover,
    Graph,
    Path,
    load_graph,
    save_graph,
    split_long_path,
    validate_cover,
)
from pathcover.graph import split_pieces
from pathcover.instances import fixture_tight_ratio_24


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


class TestGraph:
    def test_adjacency_symmetric(self):
        g = Graph(4, [(0, 1), (1, 2)])
        assert g.adjacent(0, 1) and g.adjacent(1, 0)
        assert not g.adjacent(0, 2)
        assert g.m == 2

    def test_neighbors_sorted(self):
        g = Graph(5, [(2, 4), (0, 2), (2, 3), (1, 2)])
        assert g.neighbors(2) == (0, 1, 3, 4)
        assert g.degree(2) == 4

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph(3, [(1, 1)])

    def test_rejects_duplicate_edge(self):
        with pytest.raises(ValueError, match="duplicate"):
            Graph(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            Graph(3, [(0, 3)])

    def test_edges_iteration(self):
        g = Graph(4, [(2, 3), (0, 1), (0, 2)])
        assert list(g.edges()) == [(0, 1), (0, 2), (2, 3)]

    def test_adjacency_matrix(self):
        g = Graph(3, [(0, 2)])
        mat = g.adjacency_matrix()
        assert mat[0, 2] and mat[2, 0] and not mat[0, 1]


class TestPath:
    def test_rejects_repeat(self):
        with pytest.raises(ValueError):
            Path([0, 1, 0])

    @given(st.integers(min_value=1, max_value=20))
    @settings(max_examples=30)
    def test_positional_naming_round_trip(self, order):
        p = Path(range(order))
        for j in range(order):
            assert p.u(j) == p.v(order - 1 - j)

    def test_head_tail_reverse(self):
        p = Path([3, 1, 4])
        assert p.head == 3 and p.tail == 4
        assert p.reversed().vertices == (4, 1, 3)

    def test_is_path_in(self):
        g = path_graph(4)
        assert Path([0, 1, 2]).is_path_in(g)
        assert not Path([0, 2]).is_path_in(g)


class TestCover:
    def test_bookkeeping(self):
        c = Cover(4, 10, [Path([0, 1, 2, 3])])
        assert c.coverage() == 4
        assert c.is_covered(2) and not c.is_covered(4)
        assert c.free_vertices() == [4, 5, 6, 7, 8, 9]
        c.add_path(Path([4, 5, 6, 7]))
        assert c.coverage() == 8
        c.remove_path(Path([0, 1, 2, 3]))
        assert c.coverage() == 4 and not c.is_covered(0)

    def test_rejects_overlap(self):
        c = Cover(4, 10, [Path([0, 1, 2, 3])])
        with pytest.raises(ValueError, match="already covered"):
            c.add_path(Path([3, 4, 5, 6]))

    def test_replace_path_keeps_position(self):
        c = Cover(4, 12, [Path([0, 1, 2, 3]), Path([4, 5, 6, 7])])
        c.replace_path(Path([0, 1, 2, 3]), Path([8, 1, 2, 3]))
        assert c.paths[0] == Path([8, 1, 2, 3])
        assert not c.is_covered(0) and c.is_covered(8)

    def test_copy_is_independent(self):
        c = Cover(4, 8, [Path([0, 1, 2, 3])])
        c2 = c.copy()
        c2.add_path(Path([4, 5, 6, 7]))
        assert c.coverage() == 4 and c2.coverage() == 8

    def test_path_count_of_order(self):
        c = Cover(4, 12, [Path([0, 1, 2, 3]), Path([4, 5, 6, 7, 8])])
        assert c.path_count_of_order(4) == 1
        assert c.path_count_of_order(5) == 1


class TestValidateCover:
    def test_empty_cover_valid_on_any_graph(self):
        assert validate_cover(Graph(5, []), Cover(4, 5)) == []

    def test_planted_terminal_cover_valid(self):
        inst, terminal = fixture_tight_ratio_24()
        assert validate_cover(inst.graph, terminal) == []

    def test_overlap_reported(self):
        inst, _ = fixture_tight_ratio_24()
        c = Cover(4, 24)
        c.paths = [Path([0, 1, 2, 3]), Path([3, 4, 10, 8])]
        violations = validate_cover(inst.graph, c)
        assert len([v for v in violations if v.startswith("overlap")]) == 1

    def test_missing_edge_reported(self):
        g = path_graph(6)
        c = Cover(4, 6)
        c.paths = [Path([0, 1, 2, 4])]
        assert any(v.startswith("not-a-path") for v in validate_cover(g, c))

    def test_order_out_of_range_reported(self):
        g = path_graph(10)
        c = Cover(4, 10)
        c.paths = [Path([0, 1, 2])]
        assert any(v.startswith("order") for v in validate_cover(g, c))
        c.paths = [Path(range(8))]
        assert any(v.startswith("order") for v in validate_cover(g, c))


class TestSplitLongPath:
    def test_eight_path_splits_into_two_fours(self):
        g = path_graph(8)
        c = Cover(4, 8)
        c.paths = [Path(range(8))]
        c._covered = bytearray([1] * 8)
        c._coverage = 8
        split_long_path(c, Path(range(8)))
        assert [p.vertices for p in c.paths] == [(0, 1, 2, 3), (4, 5, 6, 7)]
        assert c.coverage() == 8

    def test_nine_path_splits_into_four_and_five(self):
        pieces = split_pieces(range(9), 4)
        assert [p.order for p in pieces] == [4, 5]
        assert [v for p in pieces for v in p.vertices] == list(range(9))

    def test_twelve_path_splits_repeatedly(self):
        # expected orders derived by applying the cut-at-k rule by hand twice
        pieces = split_pieces(range(12), 4)
        assert [p.order for p in pieces] == [4, 4, 4]
        covered = [v for p in pieces for v in p.vertices]
        assert covered == list(range(12)) and len(set(covered)) == 12

    def test_rejects_short_path(self):
        c = Cover(4, 8, [Path([0, 1, 2, 3])])
        with pytest.raises(ValueError, match="nothing to split"):
            split_long_path(c, Path([0, 1, 2, 3]))

    def test_rejects_absent_path(self):
        g = path_graph(8)
        c = Cover(4, 8)
        with pytest.raises(ValueError):
            split_long_path(c, Path(range(8)))

    @given(st.integers(min_value=8, max_value=40))
    @settings(max_examples=30)
    def test_split_preserves_vertex_set(self, length):
        pieces = split_pieces(range(length), 4)
        assert sorted(v for p in pieces for v in p.vertices) == list(range(length))
        assert all(4 <= p.order <= 7 for p in pieces)


class TestGraphFile:
    def test_round_trip(self, tmp_path):
        g = Graph(6, [(0, 1), (0, 5), (2, 4)])
        target = str(tmp_path / "g.graph")
        save_graph(g, target)
        g2 = load_graph(target)
        assert g2.n == 6 and sorted(g2.edges()) == sorted(g.edges())

    def test_format_contents(self, tmp_path):
        g = Graph(3, [(0, 2)])
        target = str(tmp_path / "g.graph")
        save_graph(g, target)
        assert open(target).read() == "3 1\n0 2\n"

    @pytest.mark.parametrize(
        "content, message",
        [
            ("", "header"),
            ("3 1\n2 1\n", "u < v"),
            ("3 2\n0 1\n0 1\n", "duplicate"),
            ("3 1\n0 5\n", "out of range"),
            ("3 2\n0 1\n", "expected 2 edges"),
            ("x y\n", "malformed header"),
        ],
    )
    def test_load_errors(self, tmp_path, content, message):
        target = tmp_path / "bad.graph"
        target.write_text(content)
        with pytest.raises(ValueError, match=message):
            load_graph(str(target))
