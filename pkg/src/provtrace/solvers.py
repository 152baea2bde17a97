"""Provenance recovery solvers.

Implements the ranked-selection OMP family: single-tuple gamma-OMP, the
list-based L-OMP tree, the path-aware PL-OMP variant with missing-link
completion, generalized OMP and its list variant, plus the exhaustive
minimum-residue search over all h-hop paths used as ground truth.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .network import (
    PathVector,
    Provenance,
    SignatureMatrix,
    column_endpoints,
)
from .numerics import ResidualState
from .pathcheck import (
    MissingLinkStatus,
    complete_path,
    is_path,
    missing_link_check,
    order_edges,
)

REL_TOL = 1e-9

ALG_OMP = "omp"
ALG_L_OMP = "l_omp"
ALG_PL_OMP = "pl_omp"
ALG_GOMP = "gomp"
ALG_L_GOMP = "l_gomp"
ALG_ORACLE = "oracle"


@dataclass(frozen=True)
class GompParams:
    """Generalized-OMP knobs: v columns per iteration, branch over v-subsets
    of the top w. Defaults give list width C(3,2) = 3."""

    v: int = 2
    w: int = 3

    def __post_init__(self):
        if self.v < 2:
            raise ValueError(f"gOMP selects v >= 2 columns per iteration, got v={self.v}")
        if self.w <= self.v:
            raise ValueError(f"list width w must exceed v, got w={self.w}, v={self.v}")

    def max_iters(self, h: int, m: int) -> int:
        kappa = min(h, m // self.v)
        if kappa < 1:
            raise ValueError(f"no iterations possible with m={m}, v={self.v}")
        return kappa

    @property
    def list_width(self) -> int:
        return math.comb(self.w, self.v)


@dataclass(frozen=True)
class SupportSet:
    """Ordered selection of edges with the residual left after projection."""

    edges: tuple[tuple[int, int], ...]
    n: int
    residual: ResidualState | None
    feasible: bool

    @property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)


@dataclass(frozen=True)
class RecoveryResult:
    recovered: PathVector | None
    residue: float
    candidates_total: int
    candidates_path_feasible: int
    algorithm: str


@lru_cache(maxsize=None)
def _endpoints(n: int) -> tuple[np.ndarray, np.ndarray]:
    src, dst = column_endpoints(n)
    src.setflags(write=False)
    dst.setflags(write=False)
    return src, dst


def _signal(y) -> np.ndarray:
    v = y.y if isinstance(y, Provenance) else np.asarray(y, dtype=np.float64)
    return np.ascontiguousarray(v, dtype=np.float64)


def _residual(A: np.ndarray, cols: list[int], yv: np.ndarray) -> ResidualState:
    sub = np.ascontiguousarray(A[:, cols])
    r, coef, rank = kernels.lstsq_residual(sub, yv)
    return ResidualState(r=r, coefficients=coef, support_rank=int(rank))


def _cols_to_vector(cols, k: int) -> np.ndarray:
    x = np.zeros(k, dtype=np.int64)
    for c in cols:
        x[c] = 1
    return x


def _binary_residue(A: np.ndarray, cols, yv: np.ndarray) -> float:
    if len(cols) == 0:
        return float(np.linalg.norm(yv))
    return float(np.linalg.norm(yv - A[:, list(cols)].sum(axis=1)))


def candidate_residue(x, y, A: SignatureMatrix) -> float:
    """Euclidean norm of y - A x for a binary candidate (coefficients stay 1)."""
    yv = _signal(y)
    xv = x.to_vector() if isinstance(x, PathVector) else np.asarray(x)
    return float(np.linalg.norm(yv - A.entries @ xv.astype(np.float64)))


def gamma_omp(y, A: SignatureMatrix, gamma, path_aware: bool = False,
              absolute: bool = False) -> SupportSet:
    """One OMP run where iteration eta keeps the gamma[eta]-th best correlated
    feasible column instead of the best. gamma = (1,...,1) without path
    awareness is vanilla OMP."""
    yv = _signal(y)
    src, dst = _endpoints(A.n)
    k = A.entries.shape[1]
    cols: list[int] = []
    used_src: set[int] = set()
    used_dst: set[int] = set()
    r = yv
    state: ResidualState | None = None
    for alpha in gamma:
        vals = kernels.column_correlations(A.entries, r)
        if absolute:
            vals = np.abs(vals)
        banned = np.zeros(k, dtype=np.bool_)
        banned[cols] = True
        if path_aware and cols:
            banned |= np.isin(src, list(used_src)) | np.isin(dst, list(used_dst))
        c = int(kernels.select_beta(vals, banned, int(alpha)))
        if c < 0:
            edges = tuple((int(src[ci]), int(dst[ci])) for ci in cols)
            return SupportSet(edges=edges, n=A.n, residual=state, feasible=False)
        cols.append(c)
        used_src.add(int(src[c]))
        used_dst.add(int(dst[c]))
        state = _residual(A.entries, cols, yv)
        r = state.r
    edges = tuple((int(src[ci]), int(dst[ci])) for ci in cols)
    return SupportSet(edges=edges, n=A.n, residual=state, feasible=True)


def _expand_tree(yv: np.ndarray, A: np.ndarray, n: int, depth: int, L: int,
                 path_aware: bool, absolute: bool) -> list[tuple[int, ...]]:
    """Depth-first enumeration of all L^depth rank tuples, sharing residual
    work across common prefixes. Leaves arrive in lexicographic tuple order,
    matching a naive per-tuple rerun exactly."""
    src, dst = _endpoints(n)
    k = A.shape[1]
    leaves: list[tuple[int, ...]] = []

    def rec(cols: list[int], r: np.ndarray, used_src: set[int], used_dst: set[int],
            level: int) -> None:
        if level == depth:
            leaves.append(tuple(cols))
            return
        vals = kernels.column_correlations(A, r)
        if absolute:
            vals = np.abs(vals)
        banned = np.zeros(k, dtype=np.bool_)
        banned[cols] = True
        if path_aware and cols:
            banned |= np.isin(src, list(used_src)) | np.isin(dst, list(used_dst))
        for alpha in range(1, L + 1):
            c = int(kernels.select_beta(vals, banned, alpha))
            if c < 0:
                continue  # branch infeasible: fewer than alpha candidates
            nxt = cols + [c]
            state = _residual(A, nxt, yv)
            rec(nxt, state.r, used_src | {int(src[c])}, used_dst | {int(dst[c])},
                level + 1)

    rec([], yv, set(), set(), 0)
    return leaves


def _dedupe(supports) -> list[tuple[int, ...]]:
    seen: set[frozenset[int]] = set()
    uniq = []
    for cols in supports:
        key = frozenset(cols)
        if key not in seen:
            seen.add(key)
            uniq.append(cols)
    return uniq


def _pick_min_residue(candidates, A: np.ndarray, yv: np.ndarray, h: int, n: int,
                      algorithm: str, total: int) -> RecoveryResult:
    """Path-filter deduplicated supports and keep the minimum binary residue;
    ties resolve to enumeration order."""
    k = A.shape[1]
    best_cols = None
    best_res = math.inf
    feasible = 0
    for cols in candidates:
        xv = _cols_to_vector(cols, k)
        if is_path(xv, h, n) is None:
            continue
        feasible += 1
        res = _binary_residue(A, cols, yv)
        if res < best_res:
            best_res = res
            best_cols = cols
    if best_cols is None:
        return RecoveryResult(None, math.inf, total, 0, algorithm)
    src, dst = _endpoints(n)
    path = order_edges([(int(src[c]), int(dst[c])) for c in best_cols], n)
    return RecoveryResult(path, best_res, total, feasible, algorithm)


def vanilla_omp(y, A: SignatureMatrix, h: int, absolute: bool = False) -> RecoveryResult:
    """Plain OMP, path-checked only at the end."""
    support = gamma_omp(y, A, (1,) * h, path_aware=False, absolute=absolute)
    yv = _signal(y)
    col_idx = tuple(_edge_col(e, A.n) for e in support.edges)
    candidates = [col_idx] if support.feasible else []
    return _pick_min_residue(candidates, A.entries, yv, h, A.n, ALG_OMP, 1)


@lru_cache(maxsize=None)
def _edge_col_map(n: int) -> dict[tuple[int, int], int]:
    src, dst = _endpoints(n)
    return {(int(src[c]), int(dst[c])): c for c in range(len(src))}


def _edge_col(edge: tuple[int, int], n: int) -> int:
    return _edge_col_map(n)[edge]


def l_omp(y, A: SignatureMatrix, h: int, L: int, absolute: bool = False) -> RecoveryResult:
    """List OMP: enumerate all L^h rank tuples, path-filter, keep min residue."""
    if L < 1:
        raise ValueError(f"list width must be >= 1, got {L}")
    yv = _signal(y)
    leaves = _expand_tree(yv, A.entries, A.n, h, L, path_aware=False, absolute=absolute)
    return _pick_min_residue(_dedupe(leaves), A.entries, yv, h, A.n, ALG_L_OMP,
                             len(leaves))


def l_omp_reference(y, A: SignatureMatrix, h: int, L: int,
                    absolute: bool = False) -> RecoveryResult:
    """Naive L-OMP that reruns gamma-OMP for every tuple; semantically equal to
    the tree version and kept as its oracle."""
    leaves = []
    for gamma in itertools.product(range(1, L + 1), repeat=h):
        support = gamma_omp(y, A, gamma, path_aware=False, absolute=absolute)
        if support.feasible:
            leaves.append(tuple(_edge_col(e, A.n) for e in support.edges))
    yv = _signal(y)
    return _pick_min_residue(_dedupe(leaves), A.entries, yv, h, A.n, ALG_L_OMP,
                             len(leaves))


def pl_omp(y: Provenance, A: SignatureMatrix, h: int, L: int,
           absolute: bool = False) -> RecoveryResult:
    """Path-aware list OMP: h-1 constrained iterations, then missing-link
    detection and deterministic completion."""
    if L < 1:
        raise ValueError(f"list width must be >= 1, got {L}")
    yv = _signal(y)
    n = A.n
    s = y.source
    if h == 1:
        cols = (_edge_col((s, n), n),)
        res = _binary_residue(A.entries, cols, yv)
        path = PathVector(edges=((s, n),), n=n)
        return RecoveryResult(path, res, 1, 1, ALG_PL_OMP)
    leaves = _expand_tree(yv, A.entries, n, h - 1, L, path_aware=True,
                          absolute=absolute)
    k = A.entries.shape[1]
    completed = []
    for cols in _dedupe(leaves):
        xv = _cols_to_vector(cols, k)
        check = missing_link_check(xv, s, h, n)
        if check.status is not MissingLinkStatus.MISSING_LINK:
            continue
        full = complete_path(xv, check.link, n)
        completed.append(tuple(int(c) for c in np.flatnonzero(full)))
    best_cols = None
    best_res = math.inf
    feasible = 0
    for cols in _dedupe(completed):
        feasible += 1
        res = _binary_residue(A.entries, cols, yv)
        if res < best_res:
            best_res = res
            best_cols = cols
    if best_cols is None:
        return RecoveryResult(None, math.inf, len(leaves), 0, ALG_PL_OMP)
    src, dst = _endpoints(n)
    path = order_edges([(int(src[c]), int(dst[c])) for c in best_cols], n)
    return RecoveryResult(path, best_res, len(leaves), feasible, ALG_PL_OMP)


def _gomp_output_step(A: np.ndarray, cols, yv: np.ndarray, h: int) -> tuple[int, ...]:
    """Least squares over the accumulated support, keep the h coefficients of
    largest magnitude, binarize."""
    state = _residual(A, list(cols), yv)
    mags = np.abs(state.coefficients)
    order = sorted(range(len(cols)), key=lambda idx: (-mags[idx], cols[idx]))
    return tuple(sorted(cols[idx] for idx in order[:h]))


def g_omp(y, A: SignatureMatrix, h: int, params: GompParams | None = None,
          absolute: bool = False) -> RecoveryResult:
    """Generalized OMP: v best-correlated columns per iteration, truncated to
    an h-sparse binary candidate at the end, path-checked."""
    params = params or GompParams()
    yv = _signal(y)
    kappa = params.max_iters(h, A.m)
    k = A.entries.shape[1]
    ynorm = float(np.linalg.norm(yv))
    cols: list[int] = []
    r = yv
    for _ in range(kappa):
        if float(np.linalg.norm(r)) <= REL_TOL * ynorm:
            break
        vals = kernels.column_correlations(A.entries, r)
        if absolute:
            vals = np.abs(vals)
        banned = np.zeros(k, dtype=np.bool_)
        banned[cols] = True
        picked = []
        for beta in range(1, params.v + 1):
            c = int(kernels.select_beta(vals, banned, beta))
            if c < 0:
                break
            picked.append(c)
        if not picked:
            break
        cols.extend(picked)
        r = _residual(A.entries, cols, yv).r
    if not cols:
        return RecoveryResult(None, math.inf, 1, 0, ALG_GOMP)
    xhat = _gomp_output_step(A.entries, cols, yv, h)
    return _pick_min_residue([xhat], A.entries, yv, h, A.n, ALG_GOMP, 1)


def l_gomp(y, A: SignatureMatrix, h: int, params: GompParams | None = None,
           absolute: bool = False) -> RecoveryResult:
    """List gOMP: branch over all C(w,v) v-subsets of the top-w correlated
    columns at every iteration, then run the gOMP output step per branch."""
    params = params or GompParams()
    yv = _signal(y)
    kappa = params.max_iters(h, A.m)
    k = A.entries.shape[1]
    ynorm = float(np.linalg.norm(yv))
    leaves: list[tuple[int, ...]] = []

    def rec(cols: list[int], r: np.ndarray, level: int) -> None:
        if level == kappa or float(np.linalg.norm(r)) <= REL_TOL * ynorm:
            leaves.append(tuple(cols))
            return
        vals = kernels.column_correlations(A.entries, r)
        if absolute:
            vals = np.abs(vals)
        banned = np.zeros(k, dtype=np.bool_)
        banned[cols] = True
        top = []
        for beta in range(1, params.w + 1):
            c = int(kernels.select_beta(vals, banned, beta))
            if c < 0:
                break
            top.append(c)
        if len(top) < params.v:
            leaves.append(tuple(cols))
            return
        for subset in itertools.combinations(top, params.v):
            nxt = cols + list(subset)
            state = _residual(A.entries, nxt, yv)
            rec(nxt, state.r, level + 1)

    rec([], yv, 0)
    outputs = [_gomp_output_step(A.entries, cols, yv, h) for cols in leaves if cols]
    return _pick_min_residue(_dedupe(outputs), A.entries, yv, h, A.n, ALG_L_GOMP,
                             len(leaves))


def exhaustive_oracle(y, A: SignatureMatrix, h: int,
                      max_candidates: int = 10_000_000) -> RecoveryResult:
    """Minimum-residue search over every h-hop path; ground truth at desk scale."""
    n = A.n
    count = math.perm(n - 1, h)
    if count > max_candidates:
        raise ValueError(f"{count} candidate paths exceed the enumeration guard "
                         f"({max_candidates})")
    yv = _signal(y)
    best_nodes = None
    best_res = math.inf
    for interior in itertools.permutations(range(1, n), h):
        nodes = list(interior) + [n]
        cols = [_edge_col((a, b), n) for a, b in zip(nodes, nodes[1:])]
        res = _binary_residue(A.entries, cols, yv)
        if res < best_res:
            best_res = res
            best_nodes = interior
    path = PathVector.from_nodes(list(best_nodes), n)
    return RecoveryResult(path, best_res, count, count, ALG_ORACLE)
