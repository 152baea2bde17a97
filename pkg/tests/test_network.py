import collections

import numpy as np
import pytest

from provtrace.network import (
    NetworkConfig,
    PathVector,
    column_to_edge,
    edge_to_column,
    embed_provenance,
    generate_signatures,
    sample_path,
)


class TestEdgeIndexing:
    @pytest.mark.parametrize("i,j,n,expected", [(1, 2, 4, 1), (2, 1, 4, 4), (3, 4, 4, 9)])
    def test_edge_to_column_examples(self, i, j, n, expected):
        assert edge_to_column(i, j, n) == expected

    @pytest.mark.parametrize("c,n,expected", [(1, 4, (1, 2)), (9, 4, (3, 4)), (5, 4, (2, 3))])
    def test_column_to_edge_examples(self, c, n, expected):
        assert column_to_edge(c, n) == expected

    def test_round_trip_all_n(self):
        for n in range(3, 21):
            seen = set()
            for i in range(1, n):
                for j in range(1, n + 1):
                    if j == i:
                        continue
                    c = edge_to_column(i, j, n)
                    assert 1 <= c <= (n - 1) ** 2
                    assert column_to_edge(c, n) == (i, j)
                    seen.add(c)
            assert len(seen) == (n - 1) ** 2  # bijection

    def test_block_ordering_increasing_j(self):
        n = 5
        for i in range(1, n):
            dests = [j for j in range(1, n + 1) if j != i]
            cols = [edge_to_column(i, j, n) for j in dests]
            assert cols == sorted(cols)

    @pytest.mark.parametrize("i,j", [(4, 1), (2, 2), (0, 1), (1, 5), (1, 0)])
    def test_invalid_edges_rejected(self, i, j):
        with pytest.raises(ValueError):
            edge_to_column(i, j, 4)

    @pytest.mark.parametrize("c", [0, 10, -1])
    def test_invalid_columns_rejected(self, c):
        with pytest.raises(ValueError):
            column_to_edge(c, 4)


class TestSignatures:
    def test_gaussian_deterministic(self):
        cfg = NetworkConfig(n=6, h=3, m=8, seed=7)
        a = generate_signatures(cfg)
        b = generate_signatures(cfg)
        assert a.entries.shape == (8, 25)
        assert a.entries.tobytes() == b.entries.tobytes()

    def test_binary01_range(self):
        cfg = NetworkConfig(n=4, h=2, m=3, sig_dist="binary01", seed=1)
        A = generate_signatures(cfg)
        assert A.entries.shape == (3, 9)
        assert set(np.unique(A.entries)) <= {0.0, 1.0}

    def test_gaussian_sample_mean(self):
        # 200 entries, 3-sigma band ~ 0.21
        A = generate_signatures(NetworkConfig(n=6, h=3, m=8, seed=123))
        assert abs(A.entries.mean()) < 0.25


class TestSamplePath:
    def test_full_permutation_when_h_equals_n_minus_1(self):
        cfg = NetworkConfig(n=4, h=3, m=4, seed=3)
        rng = np.random.default_rng(3)
        for _ in range(20):
            p = sample_path(cfg, rng)
            interior = [e[0] for e in p.edges]
            assert sorted(interior) == [1, 2, 3]
            assert p.edges[-1][1] == 4

    def test_single_hop(self):
        cfg = NetworkConfig(n=6, h=1, m=4, seed=5)
        rng = np.random.default_rng(5)
        for _ in range(20):
            p = sample_path(cfg, rng)
            assert len(p.edges) == 1
            (i, j) = p.edges[0]
            assert 1 <= i <= 5 and j == 6

    def test_uniform_over_paths(self):
        cfg = NetworkConfig(n=6, h=3, m=4, seed=11)
        rng = np.random.default_rng(11)
        counts = collections.Counter(
            tuple(e[0] for e in sample_path(cfg, rng).edges) for _ in range(6000)
        )
        assert len(counts) == 60
        assert all(60 <= c <= 140 for c in counts.values())

    def test_sampled_paths_are_simple(self):
        cfg = NetworkConfig(n=8, h=5, m=4, seed=2)
        rng = np.random.default_rng(2)
        for _ in range(200):
            assert sample_path(cfg, rng).is_simple_path()

    def test_infeasible_hop_length_rejected(self):
        with pytest.raises(ValueError):
            NetworkConfig(n=4, h=4, m=4)


class TestEmbedding:
    def test_two_hop_sum(self):
        cfg = NetworkConfig(n=4, h=2, m=5, seed=9)
        A = generate_signatures(cfg)
        path = PathVector(edges=((1, 2), (2, 4)), n=4)
        y = embed_provenance(path, A)
        expected = A.entries[:, 0] + A.entries[:, 5]  # columns 1 and 6, 1-based
        np.testing.assert_array_equal(y.y, expected)
        assert y.hops == 2 and y.source == 1

    def test_single_edge(self):
        cfg = NetworkConfig(n=4, h=1, m=5, seed=9)
        A = generate_signatures(cfg)
        y = embed_provenance(PathVector(edges=((3, 4),), n=4), A)
        np.testing.assert_array_equal(y.y, A.column(3, 4))

    def test_matches_matrix_vector_product(self):
        cfg = NetworkConfig(n=7, h=4, m=10, seed=21)
        rng = np.random.default_rng(21)
        A = generate_signatures(cfg, rng)
        for _ in range(50):
            p = sample_path(cfg, rng)
            y = embed_provenance(p, A)
            np.testing.assert_array_equal(y.y, A.entries @ p.to_vector().astype(float))

    def test_edge_from_destination_rejected(self):
        with pytest.raises(ValueError):
            PathVector(edges=((4, 1),), n=4)
