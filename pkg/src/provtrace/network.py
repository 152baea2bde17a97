"""Edge-identity model: column indexing, signature generation, path sampling,
and the additive provenance embedding performed by forwarding nodes.

Nodes are numbered 1..n with node n the destination. Every directed edge
(i, j) with i != n owns an m-length signature; a forwarding node adds its
outgoing edge's signature into the packet's provenance field, so the
destination receives the plain sum of the traversed columns.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

SIG_GAUSSIAN = "gaussian"
SIG_BINARY01 = "binary01"
_SIG_DISTS = (SIG_GAUSSIAN, SIG_BINARY01)


@dataclass(frozen=True)
class NetworkConfig:
    """Simulation-level parameters for one network instance."""

    n: int
    h: int
    m: int
    sig_dist: str = SIG_GAUSSIAN
    seed: int = 0

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"need n >= 3 nodes, got {self.n}")
        if not 1 <= self.h <= self.n - 1:
            raise ValueError(f"hop length h={self.h} outside [1, {self.n - 1}]")
        if self.m < 1:
            raise ValueError(f"signature length m={self.m} must be >= 1")
        if self.sig_dist not in _SIG_DISTS:
            raise ValueError(f"unknown sig_dist {self.sig_dist!r}, expected one of {_SIG_DISTS}")

    @property
    def num_columns(self) -> int:
        return (self.n - 1) ** 2


def edge_to_column(i: int, j: int, n: int) -> int:
    """1-based dictionary column of directed edge (i, j).

    Block i holds the n-1 edges leaving node i, ordered by increasing j with
    the self-loop slot skipped; edges leaving the destination do not exist.
    """
    if not (1 <= i <= n - 1):
        raise ValueError(f"edge source {i} outside [1, {n - 1}]")
    if not (1 <= j <= n) or j == i:
        raise ValueError(f"edge destination {j} invalid for source {i}, n={n}")
    jp = j if j < i else j - 1
    return (i - 1) * (n - 1) + jp


def column_to_edge(c: int, n: int) -> tuple[int, int]:
    """Inverse of :func:`edge_to_column` (1-based column index)."""
    if not (1 <= c <= (n - 1) ** 2):
        raise ValueError(f"column {c} outside [1, {(n - 1) ** 2}]")
    c0 = c - 1
    i = c0 // (n - 1) + 1
    jp = c0 % (n - 1) + 1
    j = jp if jp < i else jp + 1
    return i, j


def column_endpoints(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-column (source, destination) node arrays, 1-based, length (n-1)^2."""
    k = (n - 1) ** 2
    src = np.empty(k, dtype=np.int64)
    dst = np.empty(k, dtype=np.int64)
    for c in range(1, k + 1):
        i, j = column_to_edge(c, n)
        src[c - 1] = i
        dst[c - 1] = j
    return src, dst


@dataclass(frozen=True)
class SignatureMatrix:
    """The m x (n-1)^2 dictionary of edge signatures."""

    entries: np.ndarray
    n: int

    def __post_init__(self):
        k = (self.n - 1) ** 2
        if self.entries.ndim != 2 or self.entries.shape[1] != k:
            raise ValueError(f"expected shape (m, {k}), got {self.entries.shape}")

    @property
    def m(self) -> int:
        return self.entries.shape[0]

    def column(self, i: int, j: int) -> np.ndarray:
        return self.entries[:, edge_to_column(i, j, self.n) - 1]


@dataclass(frozen=True)
class PathVector:
    """Ordered edge list plus its implied binary indicator vector."""

    edges: tuple[tuple[int, int], ...]
    n: int

    def __post_init__(self):
        for i, j in self.edges:
            edge_to_column(i, j, self.n)  # validates ranges, rejects source n

    @property
    def hops(self) -> int:
        return len(self.edges)

    @property
    def source(self) -> int:
        return self.edges[0][0]

    @property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def to_vector(self) -> np.ndarray:
        x = np.zeros((self.n - 1) ** 2, dtype=np.int64)
        for i, j in self.edges:
            x[edge_to_column(i, j, self.n) - 1] = 1
        return x

    def is_simple_path(self) -> bool:
        """True when the edges chain i_1 -> ... -> i_h -> n over distinct nodes."""
        if not self.edges:
            return False
        if self.edges[-1][1] != self.n:
            return False
        nodes = [self.edges[0][0]]
        for (a, b), (c, _) in zip(self.edges, self.edges[1:]):
            if b != c:
                return False
            nodes.append(b)
        nodes.append(self.n)
        return len(set(nodes)) == len(nodes)

    @classmethod
    def from_nodes(cls, interior: list[int] | tuple[int, ...], n: int) -> "PathVector":
        """Build the path interior[0] -> ... -> interior[-1] -> n."""
        hops = list(interior) + [n]
        edges = tuple(zip(hops, hops[1:]))
        return cls(edges=edges, n=n)


@dataclass(frozen=True)
class Provenance:
    """What the destination sees: the summed signatures, the hop counter, and
    the source id carried in the packet header."""

    y: np.ndarray
    hops: int
    source: int


def generate_signatures(config: NetworkConfig, rng: np.random.Generator | None = None) -> SignatureMatrix:
    """Draw the full dictionary; deterministic given the config seed."""
    if rng is None:
        rng = np.random.default_rng(config.seed)
    shape = (config.m, config.num_columns)
    if config.sig_dist == SIG_GAUSSIAN:
        entries = rng.standard_normal(shape)
    else:
        # {0,1} signatures; the distribution is i.i.d. Bernoulli(0.5).
        entries = rng.integers(0, 2, size=shape).astype(np.float64)
    entries.setflags(write=False)
    return SignatureMatrix(entries=entries, n=config.n)


def sample_path(config: NetworkConfig, rng: np.random.Generator | None = None) -> PathVector:
    """Uniform ordered h-tuple of distinct relay nodes, terminated at node n."""
    if rng is None:
        rng = np.random.default_rng(config.seed)
    if config.h > config.n - 1:
        raise ValueError(f"cannot route {config.h} hops through {config.n - 1} candidate nodes")
    interior = rng.choice(config.n - 1, size=config.h, replace=False) + 1
    return PathVector.from_nodes([int(v) for v in interior], config.n)


def embed_provenance(path: PathVector, A: SignatureMatrix) -> Provenance:
    """Noiseless sum of the traversed edges' signature columns, computed as
    A x so it matches the recovery side's matrix-vector product bit for bit."""
    y = A.entries @ path.to_vector().astype(np.float64)
    return Provenance(y=y, hops=path.hops, source=path.source)
