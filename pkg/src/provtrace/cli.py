"""Command-line interface: simulate | complexity | oracle-check | demo."""

from __future__ import annotations

import argparse
import itertools
import sys

import numpy as np

from . import solvers
from .harness import (
    ALL_ALGORITHMS,
    ExperimentSpec,
    complexity_estimate,
    run_trials,
    write_csv,
)
from .network import (
    NetworkConfig,
    column_to_edge,
    embed_provenance,
    generate_signatures,
    sample_path,
)
from .pathcheck import brute_force_path_oracle, is_path


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _alg_list(text: str) -> tuple[str, ...]:
    algs = tuple(tok.strip() for tok in text.split(","))
    bad = [a for a in algs if a not in ALL_ALGORITHMS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown algorithms {bad}; choose from {ALL_ALGORITHMS}")
    return algs


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="provtrace",
        description="Provenance recovery for network-coded edge embedding: "
                    "path-aware OMP simulations and complexity estimates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="Monte Carlo error-rate experiment")
    sim.add_argument("--nodes", type=int, required=True)
    sim.add_argument("--hops", type=int, required=True)
    sim.add_argument("--sig-len-list", type=_int_list, required=True,
                     help="comma-separated list of signature lengths m")
    sim.add_argument("--list-size", type=int, default=3)
    sim.add_argument("--gomp-v", type=int, default=2)
    sim.add_argument("--gomp-w", type=int, default=3)
    sim.add_argument("--algorithms", type=_alg_list, default=ALL_ALGORITHMS[:-1],
                     help=f"comma-separated subset of {','.join(ALL_ALGORITHMS)}")
    sim.add_argument("--trials", type=int, default=10_000)
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--sig-dist", choices=("gaussian", "binary01"), default="gaussian")
    sim.add_argument("--out", required=True)

    comp = sub.add_parser("complexity", help="L-OMP vs PL-OMP operation-count grid")
    comp.add_argument("--nodes", type=int, default=15)
    comp.add_argument("--sig-len", type=int, default=8)
    comp.add_argument("--list-max", type=int, default=4)
    comp.add_argument("--hops-max", type=int, default=5)
    comp.add_argument("--out", required=True)

    orc = sub.add_parser("oracle-check",
                         help="exhaustive sweep: algebraic path test vs traversal oracle")
    orc.add_argument("--nodes", type=int, default=5)
    orc.add_argument("--hops-max", type=int, default=4)

    demo = sub.add_parser("demo", help="single verbose trial trace")
    demo.add_argument("--nodes", type=int, default=6)
    demo.add_argument("--hops", type=int, default=3)
    demo.add_argument("--sig-len", type=int, default=8)
    demo.add_argument("--list-size", type=int, default=3)
    demo.add_argument("--seed", type=int, default=0)
    return parser


def _cmd_simulate(args) -> int:
    spec = ExperimentSpec(
        algorithms=args.algorithms, n=args.nodes, h=args.hops,
        m_values=args.sig_len_list, trials=args.trials, seed=args.seed,
        L=args.list_size, v=args.gomp_v, w=args.gomp_w, sig_dist=args.sig_dist,
    )
    report = run_trials(spec)
    write_csv(report, args.out)
    for row in report.rows:
        print(f"{row.algorithm:8s} m={row.m:3d} errors={row.errors}/{row.trials} "
              f"rate={row.error_rate:.6f}")
    print(f"wrote {len(report.rows)} rows to {args.out}")
    return 0


def _cmd_complexity(args) -> int:
    grid = [
        complexity_estimate(args.nodes, h, L, args.sig_len)
        for L in range(1, args.list_max + 1)
        for h in range(2, args.hops_max + 1)
    ]
    write_csv(grid, args.out)
    print(f"wrote {len(grid)} rows to {args.out}")
    return 0


def _cmd_oracle_check(args) -> int:
    n = args.nodes
    k = (n - 1) ** 2
    worst = 0
    for h in range(2, args.hops_max + 1):
        agree = 0
        algebraic_only = 0
        oracle_only = 0
        accepted = 0
        for cols in itertools.combinations(range(k), h):
            x = np.zeros(k, dtype=np.int64)
            x[list(cols)] = 1
            alg = is_path(x, h, n) is not None
            orc = brute_force_path_oracle(x, h, n)
            if alg and not orc:
                algebraic_only += 1
            elif orc and not alg:
                oracle_only += 1
            else:
                agree += 1
            accepted += alg and orc
        total = agree + algebraic_only + oracle_only
        print(f"n={n} h={h}: {total} candidates, {accepted} paths, "
              f"{agree} agreements, {algebraic_only} algebraic-only, "
              f"{oracle_only} oracle-only")
        worst += algebraic_only + oracle_only
    if worst:
        print(f"DISAGREEMENT: {worst} candidates split the two checks", file=sys.stderr)
        return 1
    print("path test and traversal oracle agree on every candidate")
    return 0


def _cmd_demo(args) -> int:
    config = NetworkConfig(n=args.nodes, h=args.hops, m=args.sig_len, seed=args.seed)
    rng = np.random.default_rng(config.seed)
    A = generate_signatures(config, rng)
    path = sample_path(config, rng)
    y = embed_provenance(path, A)
    print(f"network: n={config.n}, h={config.h}, m={config.m}, seed={config.seed}")
    print(f"true path: {' -> '.join(str(e[0]) for e in path.edges)} -> {config.n}")
    print(f"provenance y (first 6 entries): {np.round(y.y[:6], 4).tolist()}")
    runs = [
        ("omp", solvers.vanilla_omp(y, A, config.h)),
        ("l_omp", solvers.l_omp(y, A, config.h, args.list_size)),
        ("pl_omp", solvers.pl_omp(y, A, config.h, args.list_size)),
        ("gomp", solvers.g_omp(y, A, config.h)),
        ("l_gomp", solvers.l_gomp(y, A, config.h)),
        ("oracle", solvers.exhaustive_oracle(y, A, config.h)),
    ]
    for name, result in runs:
        if result.recovered is None:
            verdict = "no path recovered"
        else:
            nodes = [str(e[0]) for e in result.recovered.edges] + [str(config.n)]
            hit = "correct" if result.recovered.edge_set == path.edge_set else "WRONG"
            verdict = f"{' -> '.join(nodes)} ({hit})"
        print(f"{name:8s} residue={result.residue:.3e} "
              f"candidates={result.candidates_path_feasible}/{result.candidates_total} "
              f"recovered: {verdict}")
    return 0


def cli_main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "simulate": _cmd_simulate,
        "complexity": _cmd_complexity,
        "oracle-check": _cmd_oracle_check,
        "demo": _cmd_demo,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
