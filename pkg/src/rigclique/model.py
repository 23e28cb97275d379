"""Random intersection graphs ``G(n, m, p)`` and their label representation.

Every vertex picks each of ``m`` labels independently with probability
``p``; two vertices are adjacent when they share a label.  The sampler keeps
the vertex/label membership matrix next to the graph, because the heaviest
label is what the benchmark harness scores against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from os import PathLike
from pathlib import Path

import numpy as np

from .errors import InputError
from .graph import Graph

__all__ = [
    "RigParams",
    "Seed",
    "LabelRepresentation",
    "sample_rig",
    "project_labels",
    "heaviest_label",
    "edge_probability",
    "is_dense_regime",
    "read_labels",
    "write_labels",
    "round_half_up",
]

DENSE_REGIME_CONSTANT = 1.0


def round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


@dataclass(frozen=True)
class RigParams:
    """Model parameters; the label count is ``m = round(n ** alpha)``, halves rounded up."""

    n: int
    alpha: float
    p: float

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise InputError(f"n must be a positive integer, got {self.n!r}")
        if not 0 < self.alpha <= 1:
            raise InputError(f"alpha must lie in (0, 1], got {self.alpha}")
        if not 0 <= self.p <= 1:
            raise InputError(f"p must lie in [0, 1], got {self.p}")

    @property
    def m(self) -> int:
        # n**alpha can land a hair under an integer (1000**(1/3) = 9.999...)
        return max(1, round_half_up(self.n**self.alpha))


@dataclass(frozen=True)
class Seed:
    """Randomness key for one trial.

    ``(master_seed, trial_index)`` fully determines the sample, so trials can
    run in any order or process.  ``attempt`` selects a sub-stream for
    resampling degenerate trials.
    """

    master_seed: int
    trial_index: int = 0

    def __post_init__(self):
        if not 0 <= self.master_seed < 2**64:
            raise InputError(f"master_seed must be a 64-bit unsigned integer, got {self.master_seed}")
        if self.trial_index < 0:
            raise InputError(f"trial_index must be nonnegative, got {self.trial_index}")

    def rng(self, attempt: int = 0) -> np.random.Generator:
        ss = np.random.SeedSequence([int(self.master_seed), int(self.trial_index), int(attempt)])
        return np.random.Generator(np.random.PCG64(ss))


@dataclass(frozen=True, eq=False)
class LabelRepresentation:
    """Vertex/label incidence, ``membership[v, l]`` true iff vertex ``v`` chose label ``l``."""

    membership: np.ndarray = field(repr=False)

    def __post_init__(self):
        b = np.array(self.membership, dtype=bool)
        if b.ndim != 2:
            raise InputError("membership must be an (n, m) matrix")
        b.setflags(write=False)
        object.__setattr__(self, "membership", b)

    @classmethod
    def from_label_sets(cls, n: int, label_sets) -> "LabelRepresentation":
        b = np.zeros((n, len(label_sets)), dtype=bool)
        for lab, members in enumerate(label_sets):
            members = np.asarray(list(members), dtype=np.int64)
            if members.size and (members.min() < 0 or members.max() >= n):
                raise InputError(f"label {lab} has a member out of range for n={n}")
            b[members, lab] = True
        return cls(b)

    @property
    def n(self) -> int:
        return self.membership.shape[0]

    @property
    def m(self) -> int:
        return self.membership.shape[1]

    @property
    def label_sizes(self) -> np.ndarray:
        return self.membership.sum(axis=0)

    def label_set(self, label: int) -> np.ndarray:
        return np.flatnonzero(self.membership[:, label])

    @property
    def label_sets(self) -> list[np.ndarray]:
        return [self.label_set(lab) for lab in range(self.m)]

    @property
    def vertex_labels(self) -> list[np.ndarray]:
        return [np.flatnonzero(row) for row in self.membership]

    def __eq__(self, other) -> bool:
        if not isinstance(other, LabelRepresentation):
            return NotImplemented
        return np.array_equal(self.membership, other.membership)


def sample_rig(params: RigParams, seed: Seed, attempt: int = 0) -> tuple[Graph, LabelRepresentation]:
    """Draw one ``G(n, m, p)`` together with the labels that generated it."""
    rng = seed.rng(attempt)
    # row-major draw: all labels of vertex 0, then vertex 1, ...
    membership = rng.random((params.n, params.m)) < params.p
    rep = LabelRepresentation(membership)
    return project_labels(rep, params.n), rep


def project_labels(rep: LabelRepresentation, n: int | None = None) -> Graph:
    """Intersection graph of the label sets."""
    if n is not None and n != rep.n:
        raise InputError(f"label representation covers {rep.n} vertices, expected {n}")
    # float32 holds shared-label counts exactly up to 2**24 labels
    b = rep.membership.astype(np.float32)
    adj = (b @ b.T) > 0
    np.fill_diagonal(adj, False)
    return Graph(adj)


def heaviest_label(rep: LabelRepresentation) -> tuple[int, np.ndarray]:
    """Label with the most vertices, smallest id on ties.

    Raises :class:`InputError` when every label set is empty; the maximum
    clique is then a single vertex and there is no label to point at.
    """
    if rep.m < 1:
        raise InputError("label representation has no labels")
    sizes = rep.label_sizes
    lab = int(np.argmax(sizes))
    if sizes[lab] == 0:
        raise InputError("all label sets are empty")
    return lab, rep.label_set(lab)


def edge_probability(params: RigParams) -> float:
    return 1.0 - (1.0 - params.p**2) ** params.m


def is_dense_regime(params: RigParams) -> bool:
    """Informational flag: ``alpha < 1`` and ``p >= m ** (-2/3)``."""
    return params.alpha < 1 and params.p > 0 and params.p >= DENSE_REGIME_CONSTANT * params.m ** (-2.0 / 3.0)


# --- label text format ------------------------------------------------------


def write_labels(rep: LabelRepresentation, path: str | PathLike) -> Path:
    path = Path(path)
    lines = [f"{rep.n} {rep.m}"]
    lines.extend(" ".join(map(str, members.tolist())) for members in rep.label_sets)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    return path


def read_labels(path: str | PathLike) -> LabelRepresentation:
    path = Path(path)
    lines = path.read_text(encoding="utf-8").split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise InputError(f"{path}: empty label file")
    try:
        n, m = (int(x) for x in lines[0].split())
    except ValueError:
        raise InputError(f"{path}:1: header must be 'n m', got {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != m:
        raise InputError(f"{path}: header declares {m} labels, found {len(body)} lines")
    sets = []
    for lineno, ln in enumerate(body, start=2):
        members = [int(x) for x in ln.split()]
        if len(set(members)) != len(members):
            raise InputError(f"{path}:{lineno}: repeated vertex in label set")
        sets.append(members)
    return LabelRepresentation.from_label_sets(n, sets)
