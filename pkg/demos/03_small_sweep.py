"""A small failure-probability sweep, written as CSV plus a gnuplot script.

Runs in about a minute. The full-size version of this experiment is the
``bench`` subcommand, e.g.

    rigclique bench --alpha 0.3333333333 --n 1000 --k 6 --p-start 0.1 \\
        --p-end 0.4 --trials 200 --out bench_out

    python3 demos/03_small_sweep.py [OUTDIR]
"""

import sys
from pathlib import Path

from rigclique import ExperimentConfig, emit_plot_script, run_sweep
from rigclique.bench import onset_p, p_grid, saturation_p

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_sweep")
out.mkdir(parents=True, exist_ok=True)
cfg = ExperimentConfig(
    alpha=1 / 3,
    n=300,
    k=4,
    p_grid=p_grid(0.10, 0.40, 0.05),
    trials_per_point=20,
    algorithms=("spectral", "bt06", "greedy", "mono"),
    master_seed=1,
    output_path=out / "curves.csv",
)


def report(points):
    for pt in points:
        print(f"p={pt.p:.2f} {pt.algorithm:>8} fail={pt.failure_rate:.2f} fraction={pt.mean_fraction:.3f}")


table = run_sweep(cfg, progress=report)
emit_plot_script(table, out / "curves.gp", "curves.csv")

for algo in cfg.algorithms:
    print(f"{algo:>8}: onset {onset_p(table, algo)}  saturation {saturation_p(table, algo)}")
print(f"wrote {out / 'curves.csv'} and {out / 'curves.gp'} (render with: cd {out} && gnuplot curves.gp)")
