"""Path-structure checks on sparse edge vectors.

Everything here runs in exact integer arithmetic: edge vectors are lifted to
n^2-length vectors, reshaped into adjacency matrices, and walk counts are read
off integer matrix powers. A brute-force traversal oracle is kept alongside
the algebraic check so the two can be swept against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .network import PathVector, column_to_edge, edge_to_column


class AmbiguousChainError(Exception):
    """Raised when more than one row of a reach matrix matches the probe;
    the candidate is not a simple chain."""


class MissingLinkStatus(Enum):
    MISSING_LINK = "missing_link"
    NOT_MISSING_LINK = "not_missing_link"
    DEGENERATE_REJECT = "degenerate_reject"


@dataclass(frozen=True)
class MissingLinkResult:
    status: MissingLinkStatus
    a: int = 0
    b: int = 0
    node_a: int | None = None
    node_b: int | None = None

    @property
    def link(self) -> tuple[int, int] | None:
        if self.status is not MissingLinkStatus.MISSING_LINK:
            return None
        return (self.node_a, self.node_b)


@dataclass(frozen=True)
class ReachMatrices:
    """Column t (1-based) of S is row s of W^t; column t of D is column n of W^t."""

    S: np.ndarray
    D: np.ndarray


def as_edge_vector(x, n: int) -> np.ndarray:
    """Coerce a PathVector or array-like into an int64 vector of length (n-1)^2."""
    if isinstance(x, PathVector):
        return x.to_vector()
    arr = np.asarray(x, dtype=np.int64)
    if arr.shape != ((n - 1) ** 2,):
        raise ValueError(f"expected edge vector of length {(n - 1) ** 2}, got shape {arr.shape}")
    return arr


def lift(x, n: int) -> np.ndarray:
    """Expand an (n-1)^2 edge vector to length n^2 with self-loop slots and the
    destination block zeroed, so that entry (i-1)*n + j flags edge (i, j)."""
    xv = as_edge_vector(x, n)
    out = np.zeros(n * n, dtype=np.int64)
    blocks = xv.reshape(n - 1, n - 1)
    for i in range(1, n):
        row = blocks[i - 1]
        # re-insert the zero at the self-loop slot j == i
        out[(i - 1) * n : (i - 1) * n + (i - 1)] = row[: i - 1]
        out[(i - 1) * n + i : i * n] = row[i - 1 :]
    return out


def adjacency(x, n: int) -> np.ndarray:
    """n x n integer adjacency matrix of the subgraph selected by x."""
    return lift(x, n).reshape(n, n)


def kron_adjacency(x, n: int) -> np.ndarray:
    """Adjacency via the product B . diag(lift(x)) . C with B = I_n (x) 1^T and
    C = 1 (x) I_n. Redundant with :func:`adjacency`; kept as a cross-check."""
    ones = np.ones((n, 1), dtype=np.int64)
    B = np.kron(np.eye(n, dtype=np.int64), ones.T)
    C = np.kron(ones, np.eye(n, dtype=np.int64))
    V = np.diag(lift(x, n))
    return B @ V @ C


def check_path(x, h: int, n: int) -> tuple[int | None, bool]:
    """Algebraic path test. Returns (source, sparsity_ok).

    source is the unique node i <= n-1 with exactly one h-length walk to n and
    no shorter walk; None when no such node exists, when several do (not a
    unique path), or when the sparsity is not h.
    """
    xv = as_edge_vector(x, n)
    if int(xv.sum()) != h:
        return None, False
    W = adjacency(xv, n)
    power = np.eye(n, dtype=np.int64)
    shorter_walks = np.zeros(n, dtype=np.int64)  # walk counts to node n, lengths 1..h-1
    for _ in range(h - 1):
        power = power @ W
        shorter_walks += power[:, n - 1]
    power = power @ W
    hits = [
        i
        for i in range(1, n)
        if power[i - 1, n - 1] == 1 and shorter_walks[i - 1] == 0
    ]
    if len(hits) != 1:
        return None, True
    return hits[0], True


def is_path(x, h: int, n: int) -> int | None:
    """Source node of the candidate if it passes the walk-count path test."""
    source, _ = check_path(x, h, n)
    return source


def brute_force_path_oracle(x, h: int, n: int) -> bool:
    """Direct traversal test for membership in the h-hop path set; no linear
    algebra, used as the independent ground truth."""
    xv = as_edge_vector(x, n)
    cols = np.flatnonzero(xv)
    if len(cols) != h:
        return False
    edges = [column_to_edge(int(c) + 1, n) for c in cols]
    succ: dict[int, int] = {}
    for i, j in edges:
        if i in succ:
            return False  # duplicate out-edge
        succ[i] = j
    dests = {j for _, j in edges}
    starts = [i for i in succ if i not in dests]
    if len(starts) != 1:
        return False
    node = starts[0]
    visited = {node}
    for _ in range(h):
        if node not in succ:
            return False
        node = succ[node]
        if node in visited:
            return False
        visited.add(node)
    return node == n and len(visited) == h + 1


def order_edges(edge_set, n: int) -> PathVector | None:
    """Arrange an edge set into a PathVector when it forms a simple path to n."""
    edges = sorted(edge_set)
    succ = {}
    for i, j in edges:
        if i in succ:
            return None
        succ[i] = j
    dests = {j for _, j in edges}
    starts = [i for i in succ if i not in dests]
    if len(starts) != 1:
        return None
    ordered = []
    node = starts[0]
    seen = {node}
    for _ in range(len(edges)):
        if node not in succ:
            return None
        nxt = succ[node]
        ordered.append((node, nxt))
        if nxt in seen:
            return None
        seen.add(nxt)
        node = nxt
    if node != n:
        return None
    return PathVector(edges=tuple(ordered), n=n)


def reach_matrices(W: np.ndarray, s: int, h: int) -> ReachMatrices:
    """Stack source-row and destination-column slices of W^t for t = 1..h-1."""
    n = W.shape[0]
    S = np.zeros((n, h - 1), dtype=np.int64)
    D = np.zeros((n, h - 1), dtype=np.int64)
    power = np.eye(n, dtype=np.int64)
    for t in range(h - 1):
        power = power @ W
        S[:, t] = power[s - 1, :]
        D[:, t] = power[:, n - 1]
    return ReachMatrices(S=S, D=D)


def find_length(Q: np.ndarray) -> tuple[int, int | None]:
    """Walk the probe [1,0,...,0] down the rows of Q, counting how far the
    chain extends and which node it ends at. Returns (0, None) when no row
    matches the initial probe."""
    n, width = Q.shape
    q = np.zeros(width, dtype=np.int64)
    q[0] = 1
    length = 0
    node: int | None = None
    for _ in range(width):
        matches = [i for i in range(1, n) if np.array_equal(Q[i - 1, :], q)]
        if len(matches) > 1:
            raise AmbiguousChainError(f"{len(matches)} rows match probe {q.tolist()}")
        if not matches:
            break
        length += 1
        node = matches[0]
        q = np.roll(q, 1)
        q[0] = 0
    return length, node


def missing_link_check(x, s: int, h: int, n: int) -> MissingLinkResult:
    """Decide whether an (h-1)-sparse candidate is two disjoint chains anchored
    at the source and destination, joinable by a single edge."""
    if h == 1:
        return MissingLinkResult(
            status=MissingLinkStatus.MISSING_LINK, a=0, b=0, node_a=s, node_b=n
        )
    xv = as_edge_vector(x, n)
    if int(xv.sum()) != h - 1:
        raise ValueError(f"missing-link check needs sparsity h-1={h - 1}, got {int(xv.sum())}")
    W = adjacency(xv, n)
    if (W.sum(axis=1) > 1).any() or (W.sum(axis=0) > 1).any():
        return MissingLinkResult(status=MissingLinkStatus.NOT_MISSING_LINK)
    reach = reach_matrices(W, s, h)
    try:
        a, node_a = find_length(reach.S)
        b, node_b = find_length(reach.D)
    except AmbiguousChainError:
        return MissingLinkResult(status=MissingLinkStatus.DEGENERATE_REJECT)
    if node_a is None:
        node_a = s
    if node_b is None:
        node_b = n
    if a + b != h - 1:
        return MissingLinkResult(status=MissingLinkStatus.NOT_MISSING_LINK, a=a, b=b)
    # Chain-end guards: without them a cycle through the source (e.g. s->u->s
    # plus no edge into n) can satisfy a+b = h-1 while the completed vector is
    # not a path. The joining endpoints must be genuine chain ends.
    if node_a == node_b or W[node_a - 1, :].sum() != 0 or W[:, node_b - 1].sum() != 0:
        return MissingLinkResult(status=MissingLinkStatus.NOT_MISSING_LINK, a=a, b=b)
    return MissingLinkResult(
        status=MissingLinkStatus.MISSING_LINK, a=a, b=b, node_a=node_a, node_b=node_b
    )


def complete_path(x, link: tuple[int, int], n: int) -> np.ndarray:
    """Set the bit for `link` in a copy of x."""
    xv = as_edge_vector(x, n).copy()
    c = edge_to_column(link[0], link[1], n) - 1
    if xv[c]:
        raise ValueError(f"link {link} already present in candidate")
    xv[c] = 1
    return xv
