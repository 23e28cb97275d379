"""Monte Carlo harness: failure-rate and clique-fraction curves over a ``p`` grid.

Each trial samples one ``G(n, m, p)``, reads off the heaviest label as the
reference maximum clique, seeds the witness-based algorithms with the ``k``
smallest members of that label, and hands every algorithm the graph alone.
A trial succeeds only if the returned clique is at least as large as the
heaviest label.

All randomness comes from ``(master_seed, trial_index)``, so the CSV does
not depend on how trials are spread over worker processes.
"""

from __future__ import annotations

import csv
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from os import PathLike
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .algorithms import (
    NEIGHBORHOODS,
    SpectralConfig,
    greedy_clique,
    maximum_clique_bt06,
    mono_clique,
    spectral_max_clique,
)
from .errors import DegenerateTrialError, InputError
from .model import RigParams, Seed, heaviest_label, round_half_up, sample_rig

__all__ = [
    "ALGORITHMS",
    "CSV_COLUMNS",
    "ExperimentConfig",
    "TrialOutcome",
    "CurvePoint",
    "CurveTable",
    "default_trials",
    "p_grid",
    "run_trial",
    "run_sweep",
    "emit_plot_script",
    "onset_p",
    "saturation_p",
]

ALGORITHMS = ("spectral", "bt06", "greedy", "mono")
CSV_COLUMNS = (
    "alpha", "n", "m", "p", "k", "algorithm", "trials",
    "failures", "failure_rate", "mean_fraction", "fraction_std",
)
MAX_ATTEMPTS = 100
_PUBLISHED_TRIALS = {4: 1600, 5: 1400, 6: 800, 7: 700, 8: 500}


def default_trials(k: int) -> int:
    """Trials per grid point used for the published curves at witness size ``k``."""
    if k <= 3:
        return 2000
    return _PUBLISHED_TRIALS.get(k, 500)


def p_grid(start: float, end: float, step: float) -> tuple[float, ...]:
    """Inclusive uniform grid, rounded to absorb float drift (``0.1 + 0.01*i``)."""
    if step <= 0:
        raise InputError(f"p step must be positive, got {step}")
    count = int(math.floor((end - start) / step + 1e-9)) + 1
    return tuple(round(start + i * step, 10) for i in range(count))


def _fmt(x: float) -> str:
    return format(x, ".10g")


@dataclass(frozen=True)
class ExperimentConfig:
    alpha: float
    n: int
    k: int
    p_grid: tuple[float, ...]
    trials_per_point: int
    algorithms: tuple[str, ...] = ("spectral", "bt06")
    master_seed: int = 0
    output_path: Path | None = None
    bt06_include_witness: bool = True
    spectral_neighborhood: str = "union"

    def __post_init__(self):
        grid = tuple(float(p) for p in self.p_grid)
        object.__setattr__(self, "p_grid", grid)
        object.__setattr__(self, "algorithms", tuple(self.algorithms))
        if self.output_path is not None:
            object.__setattr__(self, "output_path", Path(self.output_path))
        if not grid:
            raise InputError("p_grid is empty")
        if any(not 0 <= p <= 1 for p in grid):
            raise InputError("p_grid values must lie in [0, 1]")
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise InputError("p_grid must be strictly increasing")
        if self.trials_per_point < 1:
            raise InputError("trials_per_point must be at least 1")
        if self.k < 1:
            raise InputError("k must be positive")
        if not self.algorithms:
            raise InputError("no algorithms selected")
        unknown = set(self.algorithms) - set(ALGORITHMS)
        if unknown:
            raise InputError(f"unknown algorithms: {sorted(unknown)}")
        if len(set(self.algorithms)) != len(self.algorithms):
            raise InputError("algorithms listed twice")
        if self.spectral_neighborhood not in NEIGHBORHOODS:
            raise InputError(f"spectral_neighborhood must be one of {NEIGHBORHOODS}")
        RigParams(self.n, self.alpha, grid[0])

    @property
    def m(self) -> int:
        return RigParams(self.n, self.alpha, self.p_grid[0]).m

    @classmethod
    def from_json(cls, path: str | PathLike) -> "ExperimentConfig":
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        unknown = set(data) - {f for f in cls.__dataclass_fields__}
        if unknown:
            raise InputError(f"{path}: unknown config fields {sorted(unknown)}")
        return cls(**data)

    def to_json(self) -> str:
        d = asdict(self)
        d["output_path"] = str(self.output_path) if self.output_path else None
        d["p_grid"] = list(self.p_grid)
        d["algorithms"] = list(self.algorithms)
        return json.dumps(d, indent=2)


@dataclass(frozen=True)
class TrialOutcome:
    p: float
    algorithm: str
    found_size: int
    truth_size: int
    elapsed: float = field(default=0.0, compare=False)
    verified: bool = True

    @property
    def success(self) -> bool:
        return self.found_size >= self.truth_size

    @property
    def fraction(self) -> float:
        return self.found_size / self.truth_size


@dataclass(frozen=True)
class CurvePoint:
    alpha: float
    n: int
    m: int
    k: int
    p: float
    algorithm: str
    trials: int
    failures: int
    mean_fraction: float
    fraction_std: float

    @property
    def failure_rate(self) -> float:
        return self.failures / self.trials

    @property
    def failure_se(self) -> float:
        r = self.failure_rate
        return math.sqrt(r * (1 - r) / self.trials)

    @property
    def fraction_se(self) -> float:
        return self.fraction_std / math.sqrt(self.trials)

    @classmethod
    def aggregate(cls, cfg_key: tuple, p: float, algorithm: str, outcomes: Sequence[TrialOutcome]) -> "CurvePoint":
        alpha, n, m, k = cfg_key
        fr = np.array([o.fraction for o in outcomes], dtype=np.float64)
        return cls(
            alpha=alpha, n=n, m=m, k=k, p=p, algorithm=algorithm,
            trials=len(outcomes),
            failures=sum(not o.success for o in outcomes),
            mean_fraction=float(fr.mean()),
            fraction_std=float(fr.std(ddof=1)) if fr.size > 1 else 0.0,
        )

    def csv_row(self) -> list[str]:
        return [
            _fmt(self.alpha), str(self.n), str(self.m), _fmt(self.p), str(self.k), self.algorithm,
            str(self.trials), str(self.failures), _fmt(self.failure_rate),
            _fmt(self.mean_fraction), _fmt(self.fraction_std),
        ]


@dataclass
class CurveTable:
    points: list[CurvePoint] = field(default_factory=list)

    def algorithms(self) -> list[str]:
        seen: dict[str, None] = {}
        for pt in self.points:
            seen.setdefault(pt.algorithm)
        return list(seen)

    def panels(self) -> list[tuple[float, int]]:
        """Distinct ``(alpha, k)`` pairs in first-seen order."""
        seen: dict[tuple[float, int], None] = {}
        for pt in self.points:
            seen.setdefault((pt.alpha, pt.k))
        return list(seen)

    def series(self, algorithm: str, alpha: float | None = None, k: int | None = None) -> list[CurvePoint]:
        pts = [
            pt for pt in self.points
            if pt.algorithm == algorithm and (alpha is None or pt.alpha == alpha) and (k is None or pt.k == k)
        ]
        return sorted(pts, key=lambda pt: pt.p)

    def point(self, algorithm: str, p: float) -> CurvePoint:
        for pt in self.points:
            if pt.algorithm == algorithm and math.isclose(pt.p, p, abs_tol=1e-12):
                return pt
        raise KeyError((algorithm, p))

    def to_csv(self, path: str | PathLike) -> Path:
        path = Path(path)
        with path.open("w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(CSV_COLUMNS)
            writer.writerows(pt.csv_row() for pt in self.points)
        return path

    @classmethod
    def read_csv(cls, path: str | PathLike) -> "CurveTable":
        pts = []
        with Path(path).open(encoding="utf-8", newline="") as fh:
            for row in csv.DictReader(fh):
                pts.append(CurvePoint(
                    alpha=float(row["alpha"]), n=int(row["n"]), m=int(row["m"]), k=int(row["k"]),
                    p=float(row["p"]), algorithm=row["algorithm"], trials=int(row["trials"]),
                    failures=int(row["failures"]), mean_fraction=float(row["mean_fraction"]),
                    fraction_std=float(row["fraction_std"]),
                ))
        return cls(pts)


def _run_algorithm(name: str, graph, k: int, t: int, witness, include_witness: bool, neighborhood: str):
    if name == "spectral":
        return spectral_max_clique(graph, SpectralConfig(k=k, t=t, seeded_set=witness, neighborhood=neighborhood))
    if name == "bt06":
        return maximum_clique_bt06(graph, k, seeded_set=witness, include_witness=include_witness)
    if name == "greedy":
        return greedy_clique(graph)
    if name == "mono":
        return mono_clique(graph)
    raise InputError(f"unknown algorithm {name!r}")


def run_trial(
    params: RigParams,
    k: int,
    algorithms: Iterable[str],
    seed: Seed,
    bt06_include_witness: bool = True,
    spectral_neighborhood: str = "union",
) -> list[TrialOutcome]:
    """Sample one graph and score each algorithm on it.

    Samples whose heaviest label has fewer than ``k`` vertices are redrawn
    from the next sub-stream of ``seed``; after ``MAX_ATTEMPTS`` redraws a
    :class:`DegenerateTrialError` is raised.
    """
    algorithms = tuple(algorithms)
    for attempt in range(MAX_ATTEMPTS):
        graph, rep = sample_rig(params, seed, attempt)
        sizes = rep.label_sizes
        if sizes.max(initial=0) >= k:
            break
    else:
        raise DegenerateTrialError(
            f"no label with >= {k} vertices after {MAX_ATTEMPTS} draws "
            f"(n={params.n}, alpha={params.alpha}, p={params.p}, seed={seed})"
        )
    _, members = heaviest_label(rep)
    truth = int(members.size)
    witness = tuple(members[:k].tolist())
    t = max(k, round_half_up(params.n * params.p))

    outcomes = []
    for name in algorithms:
        start = time.perf_counter()
        res = _run_algorithm(name, graph, k, t, witness, bt06_include_witness, spectral_neighborhood)
        elapsed = time.perf_counter() - start
        outcomes.append(TrialOutcome(
            p=params.p, algorithm=name, found_size=res.size, truth_size=truth,
            elapsed=elapsed, verified=res.verified,
        ))
    return outcomes


def _trial_task(args) -> list[TrialOutcome]:
    n, alpha, p, k, algorithms, master_seed, trial_index, include_witness, neighborhood = args
    return run_trial(RigParams(n, alpha, p), k, algorithms, Seed(master_seed, trial_index),
                     include_witness, neighborhood)


def run_sweep(cfg: ExperimentConfig, workers: int = 1, progress=None) -> CurveTable:
    """Run ``trials_per_point`` trials at every grid point and aggregate per algorithm.

    Trial ``j`` at grid index ``i`` uses ``trial_index = i * trials_per_point + j``.
    Rows for each finished grid point are appended to ``cfg.output_path`` as
    soon as the point completes, so an aborted sweep leaves the completed
    prefix on disk.  ``progress``, if given, is called with each finished
    :class:`CurvePoint` list.
    """
    key = (cfg.alpha, cfg.n, cfg.m, cfg.k)
    tasks = [
        (cfg.n, cfg.alpha, p, cfg.k, cfg.algorithms, cfg.master_seed, i * cfg.trials_per_point + j,
         cfg.bt06_include_witness, cfg.spectral_neighborhood)
        for i, p in enumerate(cfg.p_grid)
        for j in range(cfg.trials_per_point)
    ]
    table = CurveTable()
    fh = writer = None
    if cfg.output_path is not None:
        cfg.output_path.parent.mkdir(parents=True, exist_ok=True)
        fh = cfg.output_path.open("w", encoding="utf-8", newline="")
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)

    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        results = pool.map(_trial_task, tasks, chunksize=max(1, len(tasks) // (workers * 16))) if pool else map(_trial_task, tasks)
        batch: list[list[TrialOutcome]] = []
        point_index = 0
        for trial_outcomes in results:
            batch.append(trial_outcomes)
            if len(batch) < cfg.trials_per_point:
                continue
            p = cfg.p_grid[point_index]
            finished = [
                CurvePoint.aggregate(key, p, name, [outs[a] for outs in batch])
                for a, name in enumerate(cfg.algorithms)
            ]
            table.points.extend(finished)
            if writer is not None:
                writer.writerows(pt.csv_row() for pt in finished)
                fh.flush()
            if progress is not None:
                progress(finished)
            batch = []
            point_index += 1
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
        if fh is not None:
            fh.close()
    return table


# --- curve summaries ----------------------------------------------------------


def onset_p(table: CurveTable, algorithm: str, level: float = 0.05) -> float | None:
    """First grid ``p`` whose failure rate reaches ``level``."""
    for pt in table.series(algorithm):
        if pt.failure_rate >= level:
            return pt.p
    return None


def saturation_p(table: CurveTable, algorithm: str, level: float = 0.95) -> float | None:
    """First grid ``p`` whose failure rate reaches ``level``."""
    return onset_p(table, algorithm, level)


# --- gnuplot script -------------------------------------------------------------


def emit_plot_script(table: CurveTable, path: str | PathLike, csv_path: str | PathLike) -> Path:
    """Write a gnuplot script drawing the curves stored in ``csv_path``.

    Each ``(alpha, k)`` pair gets two panels side by side: failure rate
    and mean clique fraction against ``p``, one line per algorithm.
    """
    algos = table.algorithms()
    if not algos:
        raise InputError("curve table has no algorithms to plot")
    panels = table.panels()
    path = Path(path)
    col = {name: i + 1 for i, name in enumerate(CSV_COLUMNS)}
    lines = [
        "# gnuplot script; run with: gnuplot " + path.name,
        "set datafile separator ','",
        "set terminal pngcairo size 1200,{} noenhanced".format(420 * len(panels)),
        f"set output '{path.with_suffix('.png').name}'",
        f"data = '{Path(csv_path).as_posix()}'",
        f"set multiplot layout {len(panels)},2",
        "set xlabel 'p'",
        "set key top left",
        "set grid",
    ]
    for alpha, k in panels:
        sel = f"(abs(column({col['alpha']}) - {_fmt(alpha)}) < 1e-9 && column({col['k']}) == {k}"
        for metric, label, yrange in (
            ("failure_rate", "failure rate", "[-0.02:1.02]"),
            ("mean_fraction", "mean clique fraction", "[0:*]"),
        ):
            lines.append(f"set title 'alpha={_fmt(alpha)}, k={k}: {label}'")
            lines.append(f"set yrange {yrange}")
            series = [
                f"data every ::1 using {col['p']}:({sel} && strcol({col['algorithm']}) eq '{name}') "
                f"? column({col[metric]}) : 1/0) with linespoints title '{name}'"
                for name in algos
            ]
            lines.append("plot " + ", \\\n     ".join(series))
    lines.append("unset multiplot")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    return path
