import math

import pytest

from pathcover import (
    Cover,
    Path,
    exact_max_cover,
    generate,
    load_instance,
    save_instance,
    validate_cover,
)
from pathcover.instances import (
    SplitMix64,
    fixture_lower_bound_32,
    fixture_tight_ratio_24,
    stream_seed,
)


class TestSplitMix64:
    def test_reference_stream(self):
        # published test vector for seed 0
        rng = SplitMix64(0)
        assert rng.next_u64() == 0xE220A8397B1DCDAF
        assert rng.next_u64() == 0x6E789E6AA1B965F4
        assert rng.next_u64() == 0x06C45D188009454F

    def test_shuffle_is_a_permutation(self):
        rng = SplitMix64(42)
        xs = list(range(100))
        rng.shuffle(xs)
        assert sorted(xs) == list(range(100)) and xs != list(range(100))

    def test_floats_in_unit_interval(self):
        rng = SplitMix64(7)
        assert all(0.0 <= rng.next_float() < 1.0 for _ in range(1000))

    def test_stream_seed_sensitivity(self):
        base = stream_seed(1, 4, 50, 0.01, 0)
        assert stream_seed(1, 4, 50, 0.01, 1) != base
        assert stream_seed(1, 4, 51, 0.01, 0) != base
        assert stream_seed(1, 4, 50, 0.011, 0) != base
        assert stream_seed(2, 4, 50, 0.01, 0) != base
        assert stream_seed(1, 4, 50, 0.01, 0) == base


class TestGenerate:
    @pytest.mark.parametrize("k,n", [(4, 17), (4, 50), (5, 23), (8, 40), (12, 60)])
    def test_planted_paths_partition_with_orders_in_range(self, k, n):
        inst = generate(k, n, 0.05, 3)
        seen = set()
        for p in inst.planted_paths:
            assert k <= p.order <= 2 * k - 1
            assert p.is_path_in(inst.graph)
            assert seen.isdisjoint(p.vertices)
            seen.update(p.vertices)
        assert seen == set(range(n))
        assert inst.planted_opt == n

    def test_determinism(self):
        a = generate(4, 60, 0.02, 11, master_seed=99)
        b = generate(4, 60, 0.02, 11, master_seed=99)
        assert sorted(a.graph.edges()) == sorted(b.graph.edges())
        assert [p.vertices for p in a.planted_paths] == [
            p.vertices for p in b.planted_paths
        ]

    def test_distinct_indices_differ(self):
        a = generate(4, 60, 0.02, 0)
        b = generate(4, 60, 0.02, 1)
        assert sorted(a.graph.edges()) != sorted(b.graph.edges())

    def test_zero_density_graph_is_exactly_the_planted_paths(self):
        inst = generate(4, 50, 0.0, 0)
        assert inst.graph.m == 50 - len(inst.planted_paths)
        covered, _ = exact_max_cover(
            generate(4, 14, 0.0, 0).graph, 4
        )
        assert covered == 14

    def test_small_remainder_yields_single_path(self):
        inst = generate(4, 7, 0.0, 0)
        assert [p.order for p in inst.planted_paths] == [7]

    def test_mid_remainder_yields_two_paths(self):
        # n in [2k, 3k-2] forces exactly two planted paths
        for n in (8, 9, 10):
            inst = generate(4, n, 0.0, 1)
            orders = [p.order for p in inst.planted_paths]
            assert len(orders) == 2 and sum(orders) == n
            assert all(4 <= o <= 7 for o in orders)

    def test_full_density_yields_complete_graph(self):
        inst = generate(4, 50, 1.0, 0)
        assert inst.graph.m == 50 * 49 // 2

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            generate(4, 3, 0.0, 0)
        with pytest.raises(ValueError):
            generate(3, 10, 0.0, 0)
        with pytest.raises(ValueError):
            generate(4, 10, 1.5, 0)

    def test_mean_edge_count_tracks_density(self):
        # mean over 100 draws within 3 sigma of the binomial expectation
        k, n, d = 4, 40, 0.1
        counts = []
        for i in range(100):
            inst = generate(k, n, d, i, master_seed=5)
            counts.append(inst.graph.m)
        # path counts vary per draw; compute the exact expectation per instance
        mean = sum(counts) / len(counts)
        expected = 0.0
        var = 0.0
        for i in range(100):
            inst = generate(k, n, d, i, master_seed=5)
            pe = n - len(inst.planted_paths)
            free_pairs = n * (n - 1) // 2 - pe
            expected += pe + free_pairs * d
            var += free_pairs * d * (1 - d)
        expected /= 100
        sigma_mean = math.sqrt(var) / 100
        assert abs(mean - expected) <= 3 * sigma_mean
        lighter = sum(generate(k, n, 0.05, i, master_seed=5).graph.m for i in range(100))
        assert lighter / 100 < mean


class TestFixtures:
    def test_tight_ratio_structure(self):
        inst, terminal = fixture_tight_ratio_24()
        assert inst.graph.n == 24 and inst.graph.m == 27
        assert validate_cover(inst.graph, terminal) == []
        assert terminal.coverage() == 10
        assert inst.planted_opt == 24
        covered = {v for p in inst.planted_paths for v in p.vertices}
        assert covered == set(range(24))
        assert 24 / terminal.coverage() == 2.4

    def test_lower_bound_structure(self):
        inst, terminal = fixture_lower_bound_32()
        assert inst.graph.n == 32
        assert validate_cover(inst.graph, terminal) == []
        assert terminal.coverage() == 18
        covered = {v for p in inst.planted_paths for v in p.vertices}
        assert covered == set(range(32))
        assert 32 / terminal.coverage() == pytest.approx(16 / 9)


class TestInstanceFiles:
    def test_round_trip(self, tmp_path):
        inst = generate(4, 50, 0.01, 7)
        prefix = str(tmp_path / "inst")
        save_instance(inst, prefix)
        loaded = load_instance(prefix)
        assert loaded.k == 4 and loaded.n == 50 and loaded.d == 0.01
        assert loaded.index == 7 and loaded.planted_opt == 50
        assert sorted(loaded.graph.edges()) == sorted(inst.graph.edges())
        assert [p.vertices for p in loaded.planted_paths] == [
            p.vertices for p in inst.planted_paths
        ]
        assert loaded.master_seed == inst.master_seed

    def test_fixture_file_round_trip(self, tmp_path):
        inst, _ = fixture_tight_ratio_24()
        prefix = str(tmp_path / "tight24")
        save_instance(inst, prefix)
        loaded = load_instance(prefix)
        assert loaded.graph.n == 24 and loaded.graph.m == 27

    def test_missing_planted_edge_rejected(self, tmp_path):
        inst = generate(4, 10, 0.0, 0)
        prefix = str(tmp_path / "inst")
        _, meta = save_instance(inst, prefix)
        import json

        data = json.load(open(meta))
        data["planted_paths"][0] = [0, 9] if not inst.graph.adjacent(0, 9) else [0, 5]
        json.dump(data, open(meta, "w"))
        with pytest.raises(ValueError, match="planted edge"):
            load_instance(prefix)

    def test_n_mismatch_rejected(self, tmp_path):
        inst = generate(4, 10, 0.0, 0)
        prefix = str(tmp_path / "inst")
        _, meta = save_instance(inst, prefix)
        import json

        data = json.load(open(meta))
        data["n"] = 11
        json.dump(data, open(meta, "w"))
        with pytest.raises(ValueError, match="n="):
            load_instance(prefix)

    def test_malformed_metadata_rejected(self, tmp_path):
        inst = generate(4, 10, 0.0, 0)
        prefix = str(tmp_path / "inst")
        save_instance(inst, prefix)
        (tmp_path / "inst.json").write_text("{not json")
        with pytest.raises(ValueError, match="malformed"):
            load_instance(prefix)

    def test_missing_sidecar_rejected(self, tmp_path):
        inst = generate(4, 10, 0.0, 0)
        prefix = str(tmp_path / "inst")
        save_instance(inst, prefix)
        (tmp_path / "inst.json").unlink()
        with pytest.raises(ValueError, match="sidecar"):
            load_instance(prefix)

    def test_absent_planted_paths_tolerated(self, tmp_path):
        inst = generate(4, 10, 0.0, 0)
        prefix = str(tmp_path / "inst")
        _, meta = save_instance(inst, prefix)
        import json

        data = json.load(open(meta))
        data["planted_paths"] = None
        json.dump(data, open(meta, "w"))
        loaded = load_instance(prefix)
        assert loaded.planted_paths is None
