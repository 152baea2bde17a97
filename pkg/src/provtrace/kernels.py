"""Hot numeric kernels shared by all solvers.

The same three kernels exist in two flavours: numba @njit-compiled (default
when numba imports cleanly) and plain numpy. Set PROVTRACE_NO_NUMBA=1 to force
the numpy path; benchmarks/bench_kernels.py compares the two.
"""

from __future__ import annotations

import os

import numpy as np


def _lstsq_residual(As, y):
    """Minimum-norm least squares over the support columns.

    Returns (residual, coefficients, rank). Never forms (As^T As)^-1; the
    SVD-backed solver handles rank deficiency with the minimum-norm solution.
    """
    coef, _, rank, _ = np.linalg.lstsq(As, y, rcond=-1.0)
    r = y - As @ coef
    return r, coef, rank


def _column_correlations(A, r):
    """Signed per-column inner products a_c^T r."""
    return A.T @ r


def _select_beta(values, banned, beta):
    """Index of the beta-th largest unbanned value; ties resolve to the lower
    index. Returns -1 when fewer than beta candidates survive the ban mask."""
    k = values.shape[0]
    taken = np.zeros(k, dtype=np.bool_)
    chosen = -1
    for _ in range(beta):
        best = -1
        for idx in range(k):
            if banned[idx] or taken[idx]:
                continue
            if best < 0 or values[idx] > values[best]:
                best = idx
        if best < 0:
            return -1
        taken[best] = True
        chosen = best
    return chosen


def _numba_disabled() -> bool:
    return os.environ.get("PROVTRACE_NO_NUMBA", "").lower() in ("1", "true", "yes")


NUMBA_ENABLED = False
if not _numba_disabled():
    try:
        from numba import njit

        lstsq_residual = njit(cache=True)(_lstsq_residual)
        column_correlations = njit(cache=True)(_column_correlations)
        select_beta = njit(cache=True)(_select_beta)
        NUMBA_ENABLED = True
    except ImportError:
        pass

if not NUMBA_ENABLED:
    lstsq_residual = _lstsq_residual
    column_correlations = _column_correlations
    select_beta = _select_beta
