"""Monte Carlo experiment driver, complexity formula evaluation, and CSV I/O.

Each (m, trial) pair gets its own PRNG substream derived from the master seed,
so every algorithm sees the identical dictionary/path/provenance instance at a
given trial index; that pairing is what makes the error-count comparisons
between algorithms meaningful.
"""

from __future__ import annotations

import csv
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import solvers
from .network import NetworkConfig, embed_provenance, generate_signatures, sample_path
from .solvers import (
    ALG_GOMP,
    ALG_L_GOMP,
    ALG_L_OMP,
    ALG_OMP,
    ALG_ORACLE,
    ALG_PL_OMP,
    GompParams,
    RecoveryResult,
)

ALL_ALGORITHMS = (ALG_OMP, ALG_L_OMP, ALG_PL_OMP, ALG_GOMP, ALG_L_GOMP, ALG_ORACLE)

ERROR_RATE_HEADER = "algorithm,n,h,m,L,v,w,trials,errors,error_rate,seed,elapsed_ms"
COMPLEXITY_HEADER = "n,h,L,m,lomp_ops,plomp_ops,savings"


@dataclass(frozen=True)
class ExperimentSpec:
    algorithms: tuple[str, ...]
    n: int
    h: int
    m_values: tuple[int, ...]
    trials: int
    seed: int = 0
    L: int = 3
    v: int = 2
    w: int = 3
    sig_dist: str = "gaussian"

    def __post_init__(self):
        unknown = [a for a in self.algorithms if a not in ALL_ALGORITHMS]
        if unknown:
            raise ValueError(f"unknown algorithms {unknown}; choose from {ALL_ALGORITHMS}")
        if not self.algorithms:
            raise ValueError("at least one algorithm required")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if not self.m_values or list(self.m_values) != sorted(set(self.m_values)):
            raise ValueError(f"m_values must be non-empty and strictly ascending, got {self.m_values}")
        if self.h > self.n - 1:
            raise ValueError(f"h={self.h} infeasible with n={self.n}")


@dataclass(frozen=True)
class ErrorRateRow:
    algorithm: str
    n: int
    h: int
    m: int
    L: int
    v: int
    w: int
    trials: int
    errors: int
    seed: int
    elapsed_ms: float

    @property
    def error_rate(self) -> float:
        return self.errors / self.trials


@dataclass(frozen=True)
class ErrorRateReport:
    rows: tuple[ErrorRateRow, ...]


@dataclass(frozen=True)
class ComplexityEstimate:
    n: int
    h: int
    L: int
    m: int
    lomp_ops: int
    plomp_ops: int

    @property
    def savings(self) -> int:
        return self.lomp_ops - self.plomp_ops


def _recover(algorithm: str, y, A, spec: ExperimentSpec) -> RecoveryResult:
    if algorithm == ALG_OMP:
        return solvers.vanilla_omp(y, A, spec.h)
    if algorithm == ALG_L_OMP:
        return solvers.l_omp(y, A, spec.h, spec.L)
    if algorithm == ALG_PL_OMP:
        return solvers.pl_omp(y, A, spec.h, spec.L)
    if algorithm == ALG_GOMP:
        return solvers.g_omp(y, A, spec.h, GompParams(spec.v, spec.w))
    if algorithm == ALG_L_GOMP:
        return solvers.l_gomp(y, A, spec.h, GompParams(spec.v, spec.w))
    if algorithm == ALG_ORACLE:
        return solvers.exhaustive_oracle(y, A, spec.h)
    raise ValueError(f"unknown algorithm {algorithm!r}")


def worker_count() -> int:
    raw = os.environ.get("PROVTRACE_THREADS", "")
    if raw:
        return max(1, int(raw))
    return os.cpu_count() or 1


def _run_one_trial(spec: ExperimentSpec, m_index: int, m: int,
                   trial: int) -> dict[str, tuple[bool, float]]:
    ss = np.random.SeedSequence(entropy=spec.seed, spawn_key=(m_index, trial))
    rng = np.random.default_rng(ss)
    config = NetworkConfig(n=spec.n, h=spec.h, m=m, sig_dist=spec.sig_dist)
    A = generate_signatures(config, rng)
    path = sample_path(config, rng)
    y = embed_provenance(path, A)
    truth = path.edge_set
    out = {}
    for algorithm in spec.algorithms:
        t0 = time.perf_counter()
        result = _recover(algorithm, y, A, spec)
        elapsed = (time.perf_counter() - t0) * 1000.0
        error = result.recovered is None or result.recovered.edge_set != truth
        out[algorithm] = (error, elapsed)
    return out


def run_trials(spec: ExperimentSpec) -> ErrorRateReport:
    """Run the full experiment grid; rows come back grouped by algorithm in
    spec order, with m ascending inside each group."""
    errors: dict[tuple[str, int], int] = {}
    elapsed: dict[tuple[str, int], float] = {}
    for m_index, m in enumerate(spec.m_values):
        trial_fn = lambda t: _run_one_trial(spec, m_index, m, t)
        workers = worker_count()
        if workers > 1 and spec.trials > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(trial_fn, range(spec.trials)))
        else:
            results = [trial_fn(t) for t in range(spec.trials)]
        for algorithm in spec.algorithms:
            errors[(algorithm, m)] = sum(res[algorithm][0] for res in results)
            elapsed[(algorithm, m)] = sum(res[algorithm][1] for res in results)
    rows = tuple(
        ErrorRateRow(
            algorithm=algorithm, n=spec.n, h=spec.h, m=m, L=spec.L, v=spec.v,
            w=spec.w, trials=spec.trials, errors=errors[(algorithm, m)],
            seed=spec.seed, elapsed_ms=elapsed[(algorithm, m)],
        )
        for algorithm in spec.algorithms
        for m in spec.m_values
    )
    return ErrorRateReport(rows=rows)


def complexity_estimate(n: int, h: int, L: int, m: int) -> ComplexityEstimate:
    """Operation-count estimates for the L-OMP and PL-OMP tails (asymptotic
    expressions evaluated with unit constants), in exact integer arithmetic."""
    if min(n, h, L, m) < 1:
        raise ValueError("all complexity inputs must be >= 1")
    plomp = n * h * L ** (h - 1) + (h - 1) * n**3 * L ** (h - 1)
    lomp = (h * L**h + h * n**3 * L**h
            + L ** (h - 1) * ((n - 1) ** 2 * m + m * h + m * h**2 + h**3))
    return ComplexityEstimate(n=n, h=h, L=L, m=m, lomp_ops=lomp, plomp_ops=plomp)


def write_csv(report, path: str) -> None:
    """Write an ErrorRateReport or a list of ComplexityEstimate rows."""
    if isinstance(report, ErrorRateReport):
        header = ERROR_RATE_HEADER
        lines = [
            f"{r.algorithm},{r.n},{r.h},{r.m},{r.L},{r.v},{r.w},{r.trials},"
            f"{r.errors},{r.error_rate:.6f},{r.seed},{r.elapsed_ms:.3f}"
            for r in report.rows
        ]
    else:
        header = COMPLEXITY_HEADER
        lines = [
            f"{r.n},{r.h},{r.L},{r.m},{r.lomp_ops},{r.plomp_ops},{r.savings}"
            for r in report
        ]
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(header + "\n")
            for line in lines:
                fh.write(line + "\n")
    except OSError as exc:
        raise OSError(f"failed writing CSV to {path}: {exc}") from exc


def read_error_rate_csv(path: str) -> ErrorRateReport:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        rows = tuple(
            ErrorRateRow(
                algorithm=rec["algorithm"], n=int(rec["n"]), h=int(rec["h"]),
                m=int(rec["m"]), L=int(rec["L"]), v=int(rec["v"]), w=int(rec["w"]),
                trials=int(rec["trials"]), errors=int(rec["errors"]),
                seed=int(rec["seed"]), elapsed_ms=float(rec["elapsed_ms"]),
            )
            for rec in reader
        )
    return ErrorRateReport(rows=rows)


def read_complexity_csv(path: str) -> list[ComplexityEstimate]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        return [
            ComplexityEstimate(
                n=int(rec["n"]), h=int(rec["h"]), L=int(rec["L"]), m=int(rec["m"]),
                lomp_ops=int(rec["lomp_ops"]), plomp_ops=int(rec["plomp_ops"]),
            )
            for rec in reader
        ]
