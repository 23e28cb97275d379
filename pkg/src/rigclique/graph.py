"""Undirected simple graphs over dense vertex ids ``0..n-1``.

The adjacency relation lives in a read-only boolean matrix, which keeps
row slicing, set intersections and induced subgraphs vectorised.  Packed
bit rows (one Python ``int`` per vertex) are derived on demand for the
enumeration-heavy algorithms, where ``&`` over whole rows is the natural
primitive.
"""

from __future__ import annotations

from functools import cached_property
from os import PathLike
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

from .errors import InputError

__all__ = [
    "Graph",
    "neighbors",
    "neighborhood_of_set",
    "induced_subgraph",
    "is_clique",
    "adjacency_matrix",
    "read_edge_list",
    "write_edge_list",
    "iter_bits",
    "bits_to_array",
    "mask_of",
]


class Graph:
    """Immutable undirected simple graph.

    Build one with :meth:`from_edges` or :meth:`from_adjacency`; the
    constructor itself trusts its input and is meant for internal use.
    """

    def __init__(self, adj: np.ndarray):
        self._adj = np.array(adj, dtype=bool)
        self._adj.setflags(write=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            adj[u, v] = adj[v, u] = True
        return cls(adj)

    @classmethod
    def from_adjacency(cls, matrix) -> "Graph":
        a = np.asarray(matrix)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise InputError(f"adjacency matrix must be square, got shape {a.shape}")
        a = a != 0
        if not np.array_equal(a, a.T):
            raise InputError("adjacency matrix is not symmetric")
        if a.diagonal().any():
            raise InputError("adjacency matrix has a nonzero diagonal")
        return cls(a)

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    @property
    def adj(self) -> np.ndarray:
        """Read-only boolean adjacency matrix."""
        return self._adj

    @cached_property
    def degrees(self) -> np.ndarray:
        d = self._adj.sum(axis=1)
        d.setflags(write=False)
        return d

    @property
    def edge_count(self) -> int:
        return int(self.degrees.sum()) // 2

    @cached_property
    def bit_rows(self) -> tuple[int, ...]:
        """Neighbourhoods packed as Python ints, bit ``u`` of row ``v`` set iff ``uv`` is an edge."""
        n = self.n
        if n == 0:
            return ()
        # little-endian bit order so that bit i of the packed bytes is vertex i
        packed = np.packbits(self._adj, axis=1, bitorder="little")
        return tuple(int.from_bytes(row.tobytes(), "little") for row in packed)

    def has_edge(self, u: int, v: int) -> bool:
        _check_vertex(self, u)
        _check_vertex(self, v)
        return bool(self._adj[u, v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        us, vs = np.nonzero(np.triu(self._adj, 1))
        return zip(us.tolist(), vs.tolist())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self._adj, other._adj)

    def __hash__(self) -> int:
        return hash((self.n, np.packbits(self._adj).tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


def _check_vertex(g: Graph, v) -> int:
    v = int(v)
    if not 0 <= v < g.n:
        raise InputError(f"vertex {v} out of range for graph with n={g.n}")
    return v


def _vertex_array(g: Graph, s) -> np.ndarray:
    arr = np.unique(np.asarray(list(s) if not isinstance(s, np.ndarray) else s, dtype=np.int64))
    if arr.size and (arr[0] < 0 or arr[-1] >= g.n):
        bad = arr[0] if arr[0] < 0 else arr[-1]
        raise InputError(f"vertex {bad} out of range for graph with n={g.n}")
    return arr


def neighbors(g: Graph, v: int) -> np.ndarray:
    """Sorted ids of the vertices adjacent to ``v``."""
    v = _check_vertex(g, v)
    return np.flatnonzero(g.adj[v])


def neighborhood_of_set(g: Graph, s) -> np.ndarray:
    """Vertices with at least one neighbour in ``s``; may overlap ``s`` itself."""
    idx = _vertex_array(g, s)
    if idx.size == 0:
        return np.empty(0, dtype=np.int64)
    return np.flatnonzero(g.adj[idx].any(axis=0))


def induced_subgraph(g: Graph, s) -> tuple[Graph, np.ndarray]:
    """Return ``G[s]`` relabelled to ``0..|s|-1`` and the map back to ``g``'s ids.

    ``back[i]`` is the original id of new vertex ``i``; new ids follow the
    ascending order of the original ones.
    """
    idx = _vertex_array(g, s)
    return Graph(g.adj[np.ix_(idx, idx)]), idx


def is_clique(g: Graph, s) -> bool:
    idx = _vertex_array(g, s)
    k = idx.size
    if k <= 1:
        return True
    return int(g.adj[np.ix_(idx, idx)].sum()) == k * (k - 1)


def adjacency_matrix(g: Graph) -> np.ndarray:
    """Fresh 0/1 ``int8`` copy of the adjacency matrix in vertex-id order."""
    return g.adj.astype(np.int8)


# --- packed-bit helpers -----------------------------------------------------


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_array(mask: int) -> np.ndarray:
    return np.fromiter(iter_bits(mask), dtype=np.int64)


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << int(v)
    return m


# --- edge-list text format --------------------------------------------------


def read_edge_list(path: str | PathLike) -> Graph:
    """Read the ``n e`` header + ``u v`` lines format.

    Self-loops, duplicate edges (in either orientation), out-of-range ids
    and an edge count that disagrees with the header are all rejected.
    """
    path = Path(path)
    with path.open(encoding="utf-8") as fh:
        lines = [ln for ln in (raw.strip() for raw in fh) if ln]
    if not lines:
        raise InputError(f"{path}: empty edge-list file")
    try:
        n, e = (int(x) for x in lines[0].split())
    except ValueError:
        raise InputError(f"{path}:1: header must be 'n e', got {lines[0]!r}") from None
    if len(lines) - 1 != e:
        raise InputError(f"{path}: header declares {e} edges, found {len(lines) - 1}")
    adj = np.zeros((n, n), dtype=bool)
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise InputError(f"{path}:{lineno}: expected 'u v', got {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"{path}:{lineno}: vertex out of range for n={n}")
        if u == v:
            raise InputError(f"{path}:{lineno}: self-loop at vertex {u}")
        if adj[u, v]:
            raise InputError(f"{path}:{lineno}: duplicate edge {min(u, v)} {max(u, v)}")
        adj[u, v] = adj[v, u] = True
    return Graph(adj)


def write_edge_list(g: Graph, path: str | PathLike) -> Path:
    path = Path(path)
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    return path
