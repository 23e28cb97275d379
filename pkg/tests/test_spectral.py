import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complete, disjoint_cliques, path
from oracles import jacobi_eigenvalues
from rigclique import InputError, SpectralError, adjacency_matrix, rank_by_x2, second_eigenpair
from rigclique.spectral import SpectralResult


def random_adjacency(rng, d, density):
    a = np.triu(rng.random((d, d)) < density, 1)
    return (a | a.T).astype(np.float64)


def test_path_p3():
    res = second_eigenpair(adjacency_matrix(path(3)))
    assert res.lambda1 == pytest.approx(math.sqrt(2), abs=1e-12)
    assert res.lambda2 == pytest.approx(0.0, abs=1e-12)
    assert np.allclose(np.abs(res.x2), [1 / math.sqrt(2), 0, 1 / math.sqrt(2)], atol=1e-12)
    assert res.x2[0] == pytest.approx(-res.x2[2])


def test_complete_k3_degenerate():
    res = second_eigenpair(adjacency_matrix(complete(3)))
    assert res.lambda1 == pytest.approx(2.0)
    assert res.lambda2 == pytest.approx(-1.0)
    assert abs(res.x2.sum()) < 1e-9  # orthogonal to the all-ones top eigenvector
    assert res.residual <= 1e-8


def test_disjoint_k4_k3():
    res = second_eigenpair(adjacency_matrix(disjoint_cliques(4, 3)))
    assert res.lambda1 == pytest.approx(3.0)
    assert res.lambda2 == pytest.approx(2.0)
    assert np.allclose(res.x2[:4], 0, atol=1e-9)
    assert np.allclose(np.abs(res.x2[4:]), 1 / math.sqrt(3), atol=1e-9)
    assert set(rank_by_x2(res)[:3].tolist()) == {4, 5, 6}


def test_rank_by_x2_examples():
    assert rank_by_x2(np.array([0.9, -0.1, 0.3])).tolist() == [0, 2, 1]
    assert rank_by_x2(np.array([0.5, -0.5])).tolist() == [0, 1]


def test_input_errors():
    with pytest.raises(InputError):
        second_eigenpair(np.zeros((1, 1)))
    with pytest.raises(InputError):
        second_eigenpair(np.array([[0, 1], [0, 0]]))
    with pytest.raises(InputError):
        second_eigenpair(np.array([[1, 1], [1, 0]]))
    with pytest.raises(InputError):
        second_eigenpair(np.zeros((3, 3)), method="qr")


def test_unreachable_tolerance_raises():
    a = random_adjacency(np.random.default_rng(1), 60, 0.5)
    with pytest.raises(SpectralError) as info:
        second_eigenpair(a, tol=1e-300)
    assert info.value.residual > 0


@pytest.mark.parametrize("d", [3, 17, 80])
def test_lanczos_path_agrees_with_dense(d):
    a = random_adjacency(np.random.default_rng(d), d, 0.4)
    dense = second_eigenpair(a, method="dense")
    lanczos = second_eigenpair(a, method="lanczos")
    assert lanczos.lambda1 == pytest.approx(dense.lambda1, abs=1e-8)
    assert lanczos.lambda2 == pytest.approx(dense.lambda2, abs=1e-8)
    assert lanczos.residual <= 1e-8


def test_solves_are_repeatable():
    a = random_adjacency(np.random.default_rng(3), 120, 0.3)
    r1, r2 = second_eigenpair(a), second_eigenpair(a)
    assert np.array_equal(r1.x2, r2.x2)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 12), st.floats(0.05, 0.95), st.integers(0, 2**32 - 1))
def test_matches_jacobi_oracle(d, density, seed):
    a = random_adjacency(np.random.default_rng(seed), d, density)
    res = second_eigenpair(a)
    eig = jacobi_eigenvalues(a)
    assert res.lambda1 == pytest.approx(eig[0], abs=1e-6)
    assert res.lambda2 == pytest.approx(eig[1], abs=1e-6)
    assert abs(sum(eig)) <= 1e-6 * d
    assert res.lambda1 >= res.lambda2
    assert np.linalg.norm(res.x2) == pytest.approx(1.0, abs=1e-9)
    assert res.residual <= 1e-8


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 40), st.integers(0, 2**32 - 1))
def test_rank_is_sign_invariant(d, seed):
    x = np.random.default_rng(seed).normal(size=d)
    res = SpectralResult(0.0, 0.0, x, 0.0)
    assert np.array_equal(rank_by_x2(res), rank_by_x2(-x))
