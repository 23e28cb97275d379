"""Clique heuristics: the spectral search, three greedy baselines and an exact oracle.

All functions are pure in ``(graph, config)`` and return a
:class:`CliqueResult` whose vertices are ids of the input graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .errors import InputError, SpectralError
from .graph import Graph, is_clique, iter_bits, mask_of
from .spectral import DEFAULT_TOL, rank_by_x2, second_eigenpair

__all__ = [
    "SpectralConfig",
    "CliqueResult",
    "spectral_max_clique",
    "greedy_clique",
    "mono_clique",
    "maximum_clique_bt06",
    "exact_max_clique",
    "enumerate_k_cliques",
    "EXACT_LIMIT",
]

EXACT_LIMIT = 64


@dataclass(frozen=True)
class CliqueResult:
    vertices: tuple[int, ...]
    verified: bool
    info: dict = field(default_factory=dict, compare=False)

    @property
    def size(self) -> int:
        return len(self.vertices)


def _result(g: Graph, vertices, **info) -> CliqueResult:
    vs = tuple(sorted(int(v) for v in vertices))
    return CliqueResult(vs, is_clique(g, vs), info)


NEIGHBORHOODS = ("union", "common")


@dataclass(frozen=True)
class SpectralConfig:
    """Parameters of the spectral search.

    ``t`` is the ranking cutoff (the expected clique size ``n*p`` in the
    benchmark), and a vertex needs ``ceil(threshold * t)`` neighbours among
    the top ``t`` ranked vertices to be considered.  With ``seeded_set`` the
    search runs on that single witness clique; otherwise it walks all
    ``k``-cliques in lexicographic order, at most ``max_candidates`` of them.

    ``neighborhood`` picks the subgraph around a witness ``S``: ``"union"``
    (default) keeps every vertex adjacent to some member of ``S``,
    ``"common"`` only those adjacent to all of ``S``.
    """

    k: int
    t: int
    threshold_num: int = 3
    threshold_den: int = 4
    seeded_set: tuple[int, ...] | None = None
    max_candidates: int | None = None
    tol: float = DEFAULT_TOL
    neighborhood: str = "union"

    def __post_init__(self):
        if self.neighborhood not in NEIGHBORHOODS:
            raise InputError(f"neighborhood must be one of {NEIGHBORHOODS}, got {self.neighborhood!r}")
        if self.k < 1 or self.t < self.k:
            raise InputError(f"need 1 <= k <= t, got k={self.k}, t={self.t}")
        if self.threshold_den <= 0 or not 0 < self.threshold_num <= self.threshold_den:
            raise InputError(f"threshold must lie in (0, 1], got {self.threshold_num}/{self.threshold_den}")
        if self.seeded_set is not None:
            seeded = tuple(sorted({int(v) for v in self.seeded_set}))
            if len(seeded) != self.k:
                raise InputError(f"seeded set must hold exactly k={self.k} distinct vertices, got {len(seeded)}")
            object.__setattr__(self, "seeded_set", seeded)
        if self.max_candidates is not None and self.max_candidates < 1:
            raise InputError("max_candidates must be positive")

    @property
    def threshold(self) -> Fraction:
        return Fraction(self.threshold_num, self.threshold_den)

    @property
    def min_neighbors_in_w(self) -> int:
        return -(-self.threshold_num * self.t // self.threshold_den)


def enumerate_k_cliques(g: Graph, k: int, limit: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield the ``k``-cliques of ``g`` as sorted tuples, in lexicographic order."""
    if k < 1:
        raise InputError(f"k must be positive, got {k}")
    rows = g.bit_rows
    produced = 0

    def extend(prefix: list[int], cand: int) -> Iterator[tuple[int, ...]]:
        nonlocal produced
        need = k - len(prefix)
        if need == 0:
            produced += 1
            yield tuple(prefix)
            return
        if cand.bit_count() < need:
            return
        for v in iter_bits(cand):
            if limit is not None and produced >= limit:
                return
            higher = cand & ~((1 << (v + 1)) - 1)
            prefix.append(v)
            yield from extend(prefix, higher & rows[v])
            prefix.pop()

    yield from extend([], (1 << g.n) - 1)


def _witness_candidates(g: Graph, k: int, seeded_set, max_candidates) -> Iterator[tuple[int, ...]]:
    if seeded_set is None:
        return enumerate_k_cliques(g, k, max_candidates)
    seeded = tuple(sorted({int(v) for v in seeded_set}))
    if len(seeded) != k:
        raise InputError(f"seeded set must hold exactly k={k} distinct vertices, got {len(seeded)}")
    if not is_clique(g, seeded):
        raise InputError(f"seeded set {list(seeded)} is not a clique")
    return iter([seeded])


# --- spectral search ----------------------------------------------------------


def _spectral_candidate(g: Graph, witness: Sequence[int], cfg: SpectralConfig):
    adj = g.adj
    w_idx = np.asarray(witness, dtype=np.int64)
    rows = adj[w_idx]
    in_h = rows.all(axis=0) if cfg.neighborhood == "common" else rows.any(axis=0)
    in_h[w_idx] = True
    h = np.flatnonzero(in_h)
    if h.size < 2:
        # no second eigenvector; a lone vertex is its own clique
        return h, None, h.size
    ah = adj[np.ix_(h, h)]
    spec = second_eigenpair(ah.astype(np.float64), cfg.tol, check=False)
    order = rank_by_x2(spec)
    top = order[: cfg.t]
    eligible = ah[:, top].sum(axis=1) >= cfg.min_neighbors_in_w

    q: list[int] = []
    in_q_count = np.zeros(h.size, dtype=np.int64)
    for v in order[eligible[order]].tolist():
        # v is outside Q and loop-free, so "|Q| neighbours in Q" means adjacent to all of Q
        if in_q_count[v] == len(q):
            q.append(v)
            in_q_count += ah[v]
    return h[q], spec, h.size


def spectral_max_clique(g: Graph, cfg: SpectralConfig) -> CliqueResult:
    """Spectral maximum-clique search.

    For each witness clique ``S``: restrict to ``H = G[S + N(S)]``, rank the
    vertices of ``H`` by ``|x2|`` (second eigenvector of ``A_H``), take the
    top ``t`` as ``W``, then scan ``H`` in rank order and grow ``Q`` with
    every vertex that has enough neighbours in ``W`` and is adjacent to all
    of ``Q``.  The largest ``Q`` over all witnesses wins; earlier witnesses
    win ties.

    Witnesses whose eigen solve fails are skipped and counted in
    ``info["skipped"]``; ``info["subgraph_size"]`` is ``|H|`` for the
    winning witness.
    """
    if g.n == 0:
        raise InputError("graph has no vertices")
    best: np.ndarray = np.empty(0, dtype=np.int64)
    best_spec = None
    best_witness = best_h = None
    evaluated = skipped = 0
    for witness in _witness_candidates(g, cfg.k, cfg.seeded_set, cfg.max_candidates):
        evaluated += 1
        try:
            q, spec, h_size = _spectral_candidate(g, witness, cfg)
        except SpectralError:
            skipped += 1
            continue
        if q.size > best.size or best_witness is None:
            best, best_spec, best_witness, best_h = q, spec, witness, h_size
    info = {"candidates": evaluated, "skipped": skipped, "witness": best_witness, "subgraph_size": best_h}
    if best_spec is not None:
        info.update(lambda1=best_spec.lambda1, lambda2=best_spec.lambda2, residual=best_spec.residual)
    return _result(g, best.tolist(), **info)


# --- greedy baselines -----------------------------------------------------------


def greedy_clique(g: Graph) -> CliqueResult:
    """Scan vertices by decreasing degree, keeping each one adjacent to everything kept so far."""
    if g.n == 0:
        raise InputError("graph has no vertices")
    ids = np.arange(g.n)
    order = np.lexsort((ids, -g.degrees))
    compatible = np.ones(g.n, dtype=bool)
    q = []
    for v in order.tolist():
        if compatible[v]:
            q.append(v)
            compatible &= g.adj[v]
    return _result(g, q)


def _mask_is_clique(rows: Sequence[int], mask: int) -> bool:
    for w in iter_bits(mask):
        if mask & ~rows[w] & ~(1 << w):
            return False
    return True


def mono_clique(g: Graph) -> CliqueResult:
    """Edge-seeded greedy: try edges by decreasing common-neighbourhood size.

    The first edge ``uv`` whose common neighbourhood is itself a clique
    gives the answer ``N(u) & N(v) + {u, v}``.  Ties between edges go to the
    lexicographically smaller one; with no qualifying edge, vertex 0 is
    returned.
    """
    if g.n == 0:
        raise InputError("graph has no vertices")
    us, vs = np.nonzero(np.triu(g.adj, 1))
    if us.size == 0:
        return _result(g, [0], edge=None)
    a = g.adj.astype(np.float32)
    common = (a @ a)[us, vs]
    order = np.lexsort((vs, us, -common))
    rows = g.bit_rows
    for i in order.tolist():
        u, v = int(us[i]), int(vs[i])
        s = rows[u] & rows[v]
        if _mask_is_clique(rows, s):
            return _result(g, [*iter_bits(s), u, v], edge=(u, v))
    return _result(g, [0], edge=None)


def maximum_clique_bt06(
    g: Graph,
    k: int,
    seeded_set: Sequence[int] | None = None,
    include_witness: bool = True,
    max_candidates: int | None = None,
) -> CliqueResult:
    """Common-neighbourhood clique search over complete ``k``-subsets.

    For each complete ``U`` not already inside a recorded clique, let ``Z``
    be the common neighbourhood of ``U``; if ``Z`` is a clique, record
    ``Z + U`` (or ``Z`` alone with ``include_witness=False``).  Recorded
    cliques then pass a covering filter, largest first, keeping those that
    add at least one uncovered edge; the largest kept clique is returned.

    When nothing is kept, the largest recorded clique is returned, and
    failing that the first witness tried (which is a clique by
    construction), so the output is never worse than the input witness.
    """
    if g.n == 0:
        raise InputError("graph has no vertices")
    rows = g.bit_rows
    recorded: list[int] = []
    first_witness: tuple[int, ...] | None = None
    evaluated = 0
    for witness in _witness_candidates(g, k, seeded_set, max_candidates):
        evaluated += 1
        if first_witness is None:
            first_witness = witness
        u_mask = mask_of(witness)
        if any(u_mask & ~found == 0 for found in recorded):
            continue
        z = (1 << g.n) - 1
        for v in witness:
            z &= rows[v]
        if _mask_is_clique(rows, z):
            recorded.append(z | u_mask if include_witness else z)

    # covering filter: a clique survives if it contributes an uncovered edge
    covered = [0] * g.n
    kept: list[int] = []
    for z in sorted(recorded, key=lambda m: -m.bit_count()):
        members = list(iter_bits(z))
        if any(z & ~(1 << u) & ~covered[u] for u in members):
            for u in members:
                covered[u] |= z & ~(1 << u)
            kept.append(z)

    info = {"candidates": evaluated, "recorded": len(recorded), "kept": len(kept)}
    if kept:
        return _result(g, iter_bits(kept[0]), **info)
    if recorded:
        return _result(g, iter_bits(max(recorded, key=int.bit_count)), **info)
    return _result(g, first_witness or (), **info)


# --- exact oracle -------------------------------------------------------------


def exact_max_clique(g: Graph) -> CliqueResult:
    """Exact maximum clique by bitset branch and bound with a greedy colouring bound.

    Limited to graphs of at most ``EXACT_LIMIT`` vertices.
    """
    if g.n > EXACT_LIMIT:
        raise InputError(f"exact search is limited to {EXACT_LIMIT} vertices, got {g.n}")
    if g.n == 0:
        return CliqueResult((), True)
    rows = g.bit_rows
    best: list[int] = []
    current: list[int] = []

    def colour_order(p: int) -> list[tuple[int, int]]:
        # greedy sequential colouring; colour classes are independent sets
        out = []
        colour = 0
        uncoloured = p
        while uncoloured:
            colour += 1
            avail = uncoloured
            while avail:
                v = (avail & -avail).bit_length() - 1
                bit = 1 << v
                avail &= ~rows[v] & ~bit
                uncoloured &= ~bit
                out.append((v, colour))
        return out

    def expand(p: int) -> None:
        nonlocal best
        for v, colour in reversed(colour_order(p)):
            if len(current) + colour <= len(best):
                return
            current.append(v)
            sub = p & rows[v]
            if sub:
                expand(sub)
            elif len(current) > len(best):
                best = list(current)
            current.pop()
            p &= ~(1 << v)

    expand((1 << g.n) - 1)
    return _result(g, best)
