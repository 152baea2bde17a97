"""Compare the numba-compiled kernels against the pure-numpy fallback.

Runs a fixed batch of L-OMP and PL-OMP solves twice: once in-process (numba
unless PROVTRACE_NO_NUMBA is set) and once in a subprocess with the fallback
forced. Usage: python benchmarks/bench_kernels.py [--trials N]
"""

import argparse
import os
import subprocess
import sys
import time


def run_batch(trials: int) -> float:
    import numpy as np

    from provtrace import kernels
    from provtrace.network import NetworkConfig, embed_provenance, generate_signatures, sample_path
    from provtrace.solvers import l_omp, pl_omp

    cfg_seed = 1234
    # warm-up compiles the jitted kernels outside the timed region
    cfg = NetworkConfig(n=6, h=3, m=8, seed=cfg_seed)
    rng = np.random.default_rng(cfg_seed)
    A = generate_signatures(cfg, rng)
    y = embed_provenance(sample_path(cfg, rng), A)
    l_omp(y, A, 3, 3)
    pl_omp(y, A, 3, 3)

    t0 = time.perf_counter()
    for trial in range(trials):
        rng = np.random.default_rng((cfg_seed, trial))
        A = generate_signatures(cfg, rng)
        y = embed_provenance(sample_path(cfg, rng), A)
        l_omp(y, A, 3, 3)
        pl_omp(y, A, 3, 3)
    elapsed = time.perf_counter() - t0
    label = "numba" if kernels.NUMBA_ENABLED else "numpy fallback"
    print(f"{label:15s} {trials} trials in {elapsed:.3f}s "
          f"({1000 * elapsed / trials:.2f} ms/trial)", flush=True)
    return elapsed


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--trials", type=int, default=300)
    parser.add_argument("--inner", action="store_true",
                        help="run one batch and exit (used for the subprocess leg)")
    args = parser.parse_args()
    run_batch(args.trials)
    if args.inner:
        return 0
    env = dict(os.environ, PROVTRACE_NO_NUMBA="1")
    return subprocess.call(
        [sys.executable, os.path.abspath(__file__), "--trials", str(args.trials), "--inner"],
        env=env,
    )


if __name__ == "__main__":
    sys.exit(main())
