import numpy as np
import pytest

from provtrace.numerics import (
    InfeasibleSelectionError,
    beta_argmax,
    correlations,
    project_residual,
)


class TestProjectResidual:
    def test_signal_in_span(self):
        rng = np.random.default_rng(0)
        a = rng.standard_normal(8)
        state = project_residual(a[:, None], a)
        assert np.linalg.norm(state.r) <= 1e-12 * np.linalg.norm(a)
        assert state.support_rank == 1

    def test_orthogonal_support_leaves_signal(self):
        A = np.zeros((6, 2))
        A[0, 0] = A[1, 1] = 1.0
        y = np.zeros(6)
        y[3] = 2.0
        state = project_residual(A, y)
        np.testing.assert_allclose(state.r, y, atol=1e-14)

    def test_pythagoras(self):
        rng = np.random.default_rng(1)
        for _ in range(100):
            A = rng.standard_normal((8, 3))
            y = rng.standard_normal(8)
            state = project_residual(A, y)
            proj = y - state.r
            lhs = np.linalg.norm(state.r) ** 2 + np.linalg.norm(proj) ** 2
            assert abs(lhs - np.linalg.norm(y) ** 2) <= 1e-9 * np.linalg.norm(y) ** 2

    def test_idempotent(self):
        rng = np.random.default_rng(2)
        A = rng.standard_normal((10, 4))
        y = rng.standard_normal(10)
        r1 = project_residual(A, y).r
        r2 = project_residual(A, r1).r
        np.testing.assert_allclose(r2, r1, rtol=0, atol=1e-12 * np.linalg.norm(y))

    def test_rank_deficiency_reported_not_raised(self):
        rng = np.random.default_rng(3)
        a = rng.standard_normal(8)
        A = np.column_stack([a, 2 * a])
        state = project_residual(A, rng.standard_normal(8))
        assert state.support_rank == 1

    def test_orthogonal_to_support(self):
        rng = np.random.default_rng(4)
        A = rng.standard_normal((12, 5))
        y = rng.standard_normal(12)
        state = project_residual(A, y)
        for c in range(5):
            a = A[:, c]
            assert abs(a @ state.r) <= 1e-9 * np.linalg.norm(a) * np.linalg.norm(y)

    def test_empty_support_rejected(self):
        with pytest.raises(ValueError):
            project_residual(np.zeros((4, 0)), np.zeros(4))


class TestCorrelations:
    def test_zero_residual(self):
        A = np.random.default_rng(5).standard_normal((6, 4))
        vals = correlations(A, np.zeros(6))
        assert all(v == 0.0 for _, v in vals)

    def test_orthonormal_columns(self):
        A = np.eye(4)
        vals = dict(correlations(A, A[:, 2]))
        assert vals[3] == pytest.approx(1.0)
        assert all(v == pytest.approx(0.0) for c, v in vals.items() if c != 3)

    def test_matches_per_column_dot_products(self):
        rng = np.random.default_rng(6)
        A = rng.standard_normal((7, 9))
        r = rng.standard_normal(7)
        for c, v in correlations(A, r):
            assert v == pytest.approx(A[:, c - 1] @ r)

    def test_excluded_columns_omitted(self):
        A = np.random.default_rng(7).standard_normal((5, 6))
        vals = correlations(A, np.ones(5), excluded={2, 5})
        assert [c for c, _ in vals] == [1, 3, 4, 6]

    def test_absolute_mode(self):
        A = -np.eye(3)
        vals = dict(correlations(A, np.array([1.0, 0, 0]), absolute=True))
        assert vals[1] == pytest.approx(1.0)


class TestBetaArgmax:
    def test_examples(self):
        values = [(1, 5.0), (2, 3.0), (3, 9.0)]
        assert beta_argmax(values, 2) == 1
        assert beta_argmax(values, 1) == 3

    def test_tie_broken_by_index(self):
        assert beta_argmax([(1, 7.0), (2, 7.0)], 2) == 2
        assert beta_argmax([(2, 7.0), (1, 7.0)], 1) == 1

    def test_permutation_invariant(self):
        rng = np.random.default_rng(8)
        values = [(i + 1, float(v)) for i, v in enumerate(rng.standard_normal(10))]
        expected = [beta_argmax(values, b) for b in range(1, 11)]
        for _ in range(20):
            perm = [values[i] for i in rng.permutation(10)]
            assert [beta_argmax(perm, b) for b in range(1, 11)] == expected

    def test_exhaustion_raises(self):
        with pytest.raises(InfeasibleSelectionError):
            beta_argmax([(1, 1.0)], 2)
