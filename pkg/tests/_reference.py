"""Straightforward reference implementations kept independent of the package
internals, used as oracles by the solver tests."""

import numpy as np


def reference_omp(A: np.ndarray, y: np.ndarray, h: int) -> list[int]:
    """Textbook OMP with signed correlations; returns 0-based column indices
    in selection order. Already-selected columns are excluded."""
    r = y.astype(np.float64).copy()
    cols: list[int] = []
    for _ in range(h):
        corr = A.T @ r
        corr[cols] = -np.inf
        c = int(np.argmax(corr))  # argmax takes the lowest index on ties
        cols.append(c)
        sol, _, _, _ = np.linalg.lstsq(A[:, cols], y, rcond=None)
        r = y - A[:, cols] @ sol
    return cols
