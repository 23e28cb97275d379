"""Command line entry point: ``rigclique generate | solve | bench``."""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

import numpy as np

from .algorithms import (
    NEIGHBORHOODS,
    SpectralConfig,
    exact_max_clique,
    greedy_clique,
    maximum_clique_bt06,
    mono_clique,
    spectral_max_clique,
)
from .bench import ALGORITHMS, ExperimentConfig, default_trials, emit_plot_script, p_grid, run_sweep
from .errors import DegenerateTrialError, InputError, SpectralError
from .graph import read_edge_list, write_edge_list
from .model import RigParams, Seed, heaviest_label, is_dense_regime, read_labels, round_half_up, sample_rig, write_labels


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.replace(",", " ").split()]


def cmd_generate(args) -> int:
    params = RigParams(args.n, args.alpha, args.p)
    graph, rep = sample_rig(params, Seed(args.seed, args.trial))
    out = Path(args.out)
    write_edge_list(graph, out)
    print(f"wrote {out} (n={graph.n}, m={params.m}, edges={graph.edge_count}, dense_regime={is_dense_regime(params)})")
    if args.with_labels:
        labels_path = out.with_name(out.name + ".labels")
        write_labels(rep, labels_path)
        lab, members = heaviest_label(rep) if rep.label_sizes.any() else (None, np.empty(0))
        print(f"wrote {labels_path} (heaviest label {lab}, size {members.size})")
    return 0


def cmd_solve(args) -> int:
    graph = read_edge_list(args.graph)
    seed_set = _int_list(args.seed_set) if args.seed_set else None
    t = args.t
    if args.labels:
        rep = read_labels(args.labels)
        if rep.n != graph.n:
            raise InputError(f"label file covers {rep.n} vertices but the graph has {graph.n}")
        if seed_set is None and args.algo in ("spectral", "bt06"):
            _, members = heaviest_label(rep)
            seed_set = members[: args.k].tolist()
        if t is None:
            # mean label size estimates n*p
            t = round_half_up(float(rep.label_sizes.mean()))
    if seed_set is not None and len(seed_set) != args.k:
        raise InputError(f"--seed-set has {len(seed_set)} vertices but --k is {args.k}")

    if args.algo == "spectral":
        if t is None:
            raise InputError("spectral needs --t (or --labels to estimate it)")
        res = spectral_max_clique(graph, SpectralConfig(
            k=args.k, t=max(t, args.k), seeded_set=seed_set, max_candidates=args.candidate_cap,
            neighborhood=args.neighborhood,
        ))
    elif args.algo == "bt06":
        res = maximum_clique_bt06(
            graph, args.k, seeded_set=seed_set,
            include_witness=args.bt06_output == "union", max_candidates=args.candidate_cap,
        )
    elif args.algo == "greedy":
        res = greedy_clique(graph)
    elif args.algo == "mono":
        res = mono_clique(graph)
    else:
        res = exact_max_clique(graph)

    print(" ".join([args.algo, str(res.size), *map(str, res.vertices)]))
    print(f"verified {'yes' if res.verified else 'no'}")
    if args.dump_spectrum and "lambda1" in res.info:
        print(f"lambda1 {res.info['lambda1']:.12g}")
        print(f"lambda2 {res.info['lambda2']:.12g}")
        print(f"residual {res.info['residual']:.3e}")
    return 0 if res.verified else 1


def cmd_bench(args) -> int:
    out_dir = Path(args.out)
    if args.config:
        cfg = ExperimentConfig.from_json(args.config)
        if cfg.output_path is None:
            cfg = dataclasses.replace(cfg, output_path=out_dir / "curves.csv")
    else:
        missing = [f for f in ("alpha", "n", "k", "p_start", "p_end") if getattr(args, f) is None]
        if missing:
            raise InputError("missing bench options: " + ", ".join("--" + m.replace("_", "-") for m in missing))
        cfg = ExperimentConfig(
            alpha=args.alpha, n=args.n, k=args.k,
            p_grid=p_grid(args.p_start, args.p_end, args.p_step),
            trials_per_point=args.trials or default_trials(args.k),
            algorithms=tuple(args.algos.split(",")),
            master_seed=args.seed,
            output_path=out_dir / "curves.csv",
            spectral_neighborhood=args.spectral_neighborhood,
        )

    def report(points):
        for pt in points:
            print(f"p={pt.p:.4g} {pt.algorithm:8s} failure_rate={pt.failure_rate:.3f} "
                  f"mean_fraction={pt.mean_fraction:.3f}", file=sys.stderr, flush=True)

    table = run_sweep(cfg, workers=args.workers, progress=None if args.quiet else report)
    script = emit_plot_script(table, cfg.output_path.with_suffix(".gp"), cfg.output_path.name)
    print(f"wrote {cfg.output_path}")
    print(f"wrote {script}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rigclique", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="sample a random intersection graph")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--alpha", type=float, required=True)
    gen.add_argument("--p", type=float, required=True)
    gen.add_argument("--seed", type=int, default=0, help="master seed")
    gen.add_argument("--trial", type=int, default=0, help="trial index")
    gen.add_argument("--out", required=True, help="edge-list output file")
    gen.add_argument("--with-labels", action="store_true", help="also write OUT.labels")
    gen.set_defaults(func=cmd_generate)

    solve = sub.add_parser("solve", help="run one clique algorithm on an edge-list file")
    solve.add_argument("--graph", required=True, help="edge-list file")
    solve.add_argument("--algo", choices=("spectral", "greedy", "mono", "bt06", "exact"), default="spectral")
    solve.add_argument("--k", type=int, default=1, help="witness clique size")
    solve.add_argument("--t", type=int, default=None, help="target size; defaults to the mean label size with --labels")
    solve.add_argument("--seed-set", default=None, help="comma-separated witness clique")
    solve.add_argument("--labels", default=None, help="label file; seeds from the heaviest label")
    solve.add_argument("--candidate-cap", type=int, default=None, help="max witnesses when enumerating")
    solve.add_argument("--bt06-output", choices=("union", "z"), default="union", help="record Z with or without the witness")
    solve.add_argument("--neighborhood", choices=NEIGHBORHOODS, default="union",
                       help="spectral subgraph around the witness: union or common neighbourhood")
    solve.add_argument("--dump-spectrum", action="store_true", help="print lambda1, lambda2 and the eigen residual")
    solve.set_defaults(func=cmd_solve)

    bench = sub.add_parser("bench", help="sweep p and write failure/fraction curves")
    bench.add_argument("--config", default=None, help="JSON file with ExperimentConfig fields")
    bench.add_argument("--alpha", type=float)
    bench.add_argument("--n", type=int)
    bench.add_argument("--k", type=int)
    bench.add_argument("--p-start", type=float)
    bench.add_argument("--p-end", type=float)
    bench.add_argument("--p-step", type=float, default=0.01)
    bench.add_argument("--trials", type=int, default=None, help="trials per point; default depends on k")
    bench.add_argument("--algos", default="spectral,bt06", help=f"subset of {','.join(ALGORITHMS)}")
    bench.add_argument("--spectral-neighborhood", choices=NEIGHBORHOODS, default="union")
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--workers", type=int, default=1)
    bench.add_argument("--out", default="bench_out", help="directory for curves.csv and curves.gp")
    bench.add_argument("--quiet", action="store_true", help="no per-point progress lines")
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, SpectralError, DegenerateTrialError, OSError) as exc:
        print(f"rigclique {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
