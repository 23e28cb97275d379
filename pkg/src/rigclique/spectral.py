"""Second eigenpair of a symmetric adjacency matrix.

Eigenvalues are ordered algebraically, ``lambda1 >= lambda2 >= ...``.  Up to
``DENSE_LIMIT`` rows the solve is a dense LAPACK tridiagonal reduction that
computes only the top two eigenpairs; above that an ARPACK Lanczos run is
used.  Both paths are held to the same residual bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg
from scipy.sparse.linalg import ArpackNoConvergence, eigsh

from .errors import InputError, SpectralError

__all__ = ["SpectralResult", "second_eigenpair", "rank_by_x2", "DEFAULT_TOL", "DENSE_LIMIT"]

DEFAULT_TOL = 1e-8
DENSE_LIMIT = 2000
ITERATIONS_PER_ROW = 300


@dataclass(frozen=True, eq=False)
class SpectralResult:
    lambda1: float
    lambda2: float
    x2: np.ndarray = field(repr=False)
    residual: float


def _canonical_sign(x: np.ndarray) -> np.ndarray:
    # largest-magnitude entry made positive, so repeated solves agree on sign
    i = int(np.argmax(np.abs(x)))
    return -x if x[i] < 0 else x


def _dense(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    d = a.shape[0]
    w, v = scipy.linalg.eigh(a, subset_by_index=[d - 2, d - 1], check_finite=False)
    return w, v


def _lanczos(a: np.ndarray, tol: float) -> tuple[np.ndarray, np.ndarray]:
    d = a.shape[0]
    v0 = np.random.default_rng(0).standard_normal(d)
    try:
        w, v = eigsh(a, k=2, which="LA", v0=v0, tol=0, maxiter=ITERATIONS_PER_ROW * d)
    except ArpackNoConvergence as exc:
        best = np.inf
        for lam, vec in zip(exc.eigenvalues, exc.eigenvectors.T):
            best = min(best, float(np.linalg.norm(a @ vec - lam * vec)))
        raise SpectralError(f"Lanczos did not converge for d={d}", residual=best) from exc
    order = np.argsort(w)
    return w[order], v[:, order]


def second_eigenpair(a, tol: float = DEFAULT_TOL, method: str = "auto", check: bool = True) -> SpectralResult:
    """Two largest eigenvalues of ``a`` and a unit eigenvector for the second.

    ``method`` is ``"auto"``, ``"dense"`` or ``"lanczos"``.  When the second
    eigenvalue is repeated, any unit vector of its eigenspace orthogonal to
    the returned top direction may come back.

    Raises :class:`InputError` for matrices smaller than 2x2 or that are not
    symmetric with a zero diagonal, and :class:`SpectralError` when the
    residual ``||A x2 - lambda2 x2||`` exceeds ``tol``.
    """
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InputError(f"expected a square matrix, got shape {a.shape}")
    d = a.shape[0]
    if d < 2:
        raise InputError(f"second eigenpair needs dimension >= 2, got {d}")
    if check:
        if not np.array_equal(a, a.T):
            raise InputError("matrix is not symmetric")
        if np.any(np.diagonal(a) != 0):
            raise InputError("matrix has a nonzero diagonal")

    if method == "auto":
        method = "dense" if d <= DENSE_LIMIT else "lanczos"
    if method == "dense":
        w, v = _dense(a)
    elif method == "lanczos":
        if d < 3:
            # ARPACK needs k < d
            w, v = _dense(a)
        else:
            w, v = _lanczos(a, tol)
    else:
        raise InputError(f"unknown eigensolver method {method!r}")

    lam2, lam1 = float(w[0]), float(w[1])
    x2 = v[:, 0]
    x2 = _canonical_sign(x2 / np.linalg.norm(x2))
    residual = float(np.linalg.norm(a @ x2 - lam2 * x2))
    if residual > tol and method == "lanczos":
        # fall back to the dense path before giving up
        w, v = _dense(a)
        lam2, lam1 = float(w[0]), float(w[1])
        x2 = _canonical_sign(v[:, 0] / np.linalg.norm(v[:, 0]))
        residual = float(np.linalg.norm(a @ x2 - lam2 * x2))
    if residual > tol:
        raise SpectralError(f"eigen residual {residual:.3e} exceeds tolerance {tol:.1e} (d={d})", residual=residual)
    return SpectralResult(lambda1=lam1, lambda2=lam2, x2=x2, residual=residual)


def rank_by_x2(result: SpectralResult | np.ndarray) -> np.ndarray:
    """Local vertex ids by decreasing ``|x2|``, ascending id on ties."""
    x = result.x2 if isinstance(result, SpectralResult) else np.asarray(result, dtype=np.float64)
    ids = np.arange(x.shape[0])
    return np.lexsort((ids, -np.abs(x)))
