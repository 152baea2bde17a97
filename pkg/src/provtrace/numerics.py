"""Least-squares residual projection and ranked correlation selection.

These are the shared primitives of every OMP variant: project the provenance
onto the span of the selected columns, correlate the residual against the
dictionary, and pick the beta-th best candidate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .network import SignatureMatrix


class InfeasibleSelectionError(Exception):
    """Fewer candidates than the requested selection rank."""


@dataclass(frozen=True)
class ResidualState:
    r: np.ndarray
    coefficients: np.ndarray
    support_rank: int

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.r))


def _entries(A) -> np.ndarray:
    return A.entries if isinstance(A, SignatureMatrix) else np.asarray(A, dtype=np.float64)


def project_residual(A_S: np.ndarray, y: np.ndarray) -> ResidualState:
    """Residual of y after projection onto the column span of A_S."""
    A_S = np.ascontiguousarray(A_S, dtype=np.float64)
    if A_S.ndim != 2 or A_S.shape[1] < 1:
        raise ValueError(f"support matrix must be 2-D with >= 1 column, got shape {A_S.shape}")
    r, coef, rank = kernels.lstsq_residual(A_S, np.ascontiguousarray(y, dtype=np.float64))
    return ResidualState(r=r, coefficients=coef, support_rank=int(rank))


def correlations(A, r: np.ndarray, excluded=(), absolute: bool = False) -> list[tuple[int, float]]:
    """Signed (default) inner products of each dictionary column with r.

    Columns listed in `excluded` (1-based) are omitted. `absolute=True`
    switches to magnitude ranking for the gOMP-style variants.
    """
    vals = kernels.column_correlations(_entries(A), np.ascontiguousarray(r, dtype=np.float64))
    if absolute:
        vals = np.abs(vals)
    skip = set(excluded)
    return [(c + 1, float(vals[c])) for c in range(len(vals)) if c + 1 not in skip]


def beta_argmax(values, beta: int) -> int:
    """Index of the beta-th largest value; ties broken by ascending index."""
    if beta < 1:
        raise ValueError(f"beta must be >= 1, got {beta}")
    items = sorted(values, key=lambda t: (-t[1], t[0]))
    if beta > len(items):
        raise InfeasibleSelectionError(f"beta={beta} exceeds {len(items)} candidates")
    return items[beta - 1][0]
