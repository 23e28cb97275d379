import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complete, cycle, disjoint_cliques, path
from oracles import brute_force_clique_number, petersen_edges
from rigclique import (
    Graph,
    InputError,
    RigParams,
    Seed,
    SpectralConfig,
    enumerate_k_cliques,
    exact_max_clique,
    greedy_clique,
    heaviest_label,
    is_clique,
    maximum_clique_bt06,
    mono_clique,
    sample_rig,
    spectral_max_clique,
)


def star(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


@st.composite
def graphs(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    density = draw(st.floats(0.0, 1.0))
    seed = draw(st.integers(0, 2**32 - 1))
    a = np.triu(np.random.default_rng(seed).random((n, n)) < density, 1)
    return Graph(a | a.T)


# --- config ---------------------------------------------------------------------


def test_spectral_config_validation():
    with pytest.raises(InputError):
        SpectralConfig(k=0, t=3)
    with pytest.raises(InputError):
        SpectralConfig(k=4, t=3)
    with pytest.raises(InputError):
        SpectralConfig(k=2, t=3, threshold_num=5, threshold_den=4)
    with pytest.raises(InputError):
        SpectralConfig(k=2, t=3, seeded_set=(1,))
    assert SpectralConfig(k=2, t=6).min_neighbors_in_w == 5  # ceil(4.5)
    assert SpectralConfig(k=2, t=8).min_neighbors_in_w == 6
    assert SpectralConfig(k=2, t=7, threshold_num=1, threshold_den=1).min_neighbors_in_w == 7


# --- spectral search ------------------------------------------------------------------


def test_spectral_recovers_k6_among_isolated_vertices():
    g = Graph.from_edges(10, itertools.combinations(range(6), 2))
    res = spectral_max_clique(g, SpectralConfig(k=2, t=6, seeded_set=(0, 1)))
    assert res.vertices == (0, 1, 2, 3, 4, 5)
    assert res.verified


def test_spectral_single_vertex():
    g = Graph.from_edges(1, [])
    assert spectral_max_clique(g, SpectralConfig(k=1, t=1, seeded_set=(0,))).vertices == (0,)


def test_spectral_rejects_non_clique_seed(p3):
    with pytest.raises(InputError):
        spectral_max_clique(p3, SpectralConfig(k=2, t=2, seeded_set=(0, 2)))


def test_spectral_enumeration_finds_planted_block():
    g = disjoint_cliques(3, 7, 2)
    res = spectral_max_clique(g, SpectralConfig(k=2, t=7))
    assert res.size == 7
    assert res.info["candidates"] == 3 + 21 + 1


def test_spectral_candidate_cap():
    g = disjoint_cliques(3, 7)
    res = spectral_max_clique(g, SpectralConfig(k=2, t=7, max_candidates=3))
    assert res.info["candidates"] == 3
    # only K3 witnesses seen; their vertices have 2 < ceil(3*7/4) neighbours in W
    assert res.size == 0


def test_spectral_unseeded_is_max_over_seeded_runs():
    g, _ = sample_rig(RigParams(40, 0.5, 0.3), Seed(3))
    cfg = dict(k=2, t=12)
    full = spectral_max_clique(g, SpectralConfig(**cfg))
    per = [spectral_max_clique(g, SpectralConfig(**cfg, seeded_set=s)).size for s in enumerate_k_cliques(g, 2)]
    assert full.size == max(per)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2), st.integers(1, 3), st.integers(1, 8))
def test_seeded_spectral_equals_single_candidate(g, k, t):
    witnesses = list(enumerate_k_cliques(g, k, limit=1))
    if not witnesses or t < k:
        return
    cfg = SpectralConfig(k=k, t=t, seeded_set=witnesses[0])
    capped = SpectralConfig(k=k, t=t, max_candidates=1)
    assert spectral_max_clique(g, cfg).vertices == spectral_max_clique(g, capped).vertices


# --- greedy ----------------------------------------------------------------------------


def test_greedy_examples(k4, p3):
    assert greedy_clique(k4).vertices == (0, 1, 2, 3)
    assert greedy_clique(star(3)).vertices == (0, 1)
    assert greedy_clique(p3).vertices == (0, 1)


def test_greedy_is_deterministic():
    g, _ = sample_rig(RigParams(150, 0.5, 0.1), Seed(2))
    assert greedy_clique(g).vertices == greedy_clique(g).vertices


# --- mono ----------------------------------------------------------------------------


def test_mono_examples(k4, c5):
    assert mono_clique(k4).vertices == (0, 1, 2, 3)
    res = mono_clique(c5)
    assert res.size == 2 and res.vertices == (0, 1)
    assert mono_clique(Graph.from_edges(3, [])).vertices == (0,)


def test_mono_prefers_largest_common_neighbourhood():
    # triangle 0-1-2 plus a K4 on 3..6; the K4 edges have 2 common neighbours
    g = Graph.from_edges(7, [(0, 1), (0, 2), (1, 2), *itertools.combinations(range(3, 7), 2)])
    assert mono_clique(g).vertices == (3, 4, 5, 6)


def test_mono_falls_back_when_no_edge_qualifies():
    # complement of a perfect matching on 6 vertices: every common neighbourhood is a 4-cycle
    edges = [(u, v) for u, v in itertools.combinations(range(6), 2) if v != u + 3]
    g = Graph.from_edges(6, edges)
    assert mono_clique(g).vertices == (0,)


# --- Maximum-Clique (common neighbourhood) ----------------------------------------------


def test_bt06_examples(k4, p3, c5):
    assert maximum_clique_bt06(k4, 2, seeded_set=(0, 1)).vertices == (0, 1, 2, 3)
    assert maximum_clique_bt06(p3, 1).size == 2
    assert maximum_clique_bt06(c5, 2, seeded_set=(2, 3)).vertices == (2, 3)


def test_bt06_rejected_seed_falls_back_to_witness(p3):
    res = maximum_clique_bt06(p3, 1, seeded_set=(1,))
    assert res.info["recorded"] == 0
    assert res.vertices == (1,)


def test_bt06_z_only_variant(k4):
    assert maximum_clique_bt06(k4, 2, seeded_set=(0, 1), include_witness=False).vertices == (2, 3)


def test_bt06_skips_witnesses_inside_recorded_cliques():
    g = complete(5)
    res = maximum_clique_bt06(g, 2)
    assert res.size == 5
    assert res.info["recorded"] == 1  # every later pair lies inside the first recorded K5


def test_bt06_rejects_bad_seed(p3):
    with pytest.raises(InputError):
        maximum_clique_bt06(p3, 2, seeded_set=(0, 2))
    with pytest.raises(InputError):
        maximum_clique_bt06(p3, 2, seeded_set=(0,))


# --- exact ---------------------------------------------------------------------------


def test_exact_examples(c5):
    assert exact_max_clique(complete(7)).size == 7
    assert exact_max_clique(c5).size == 2
    petersen = Graph.from_edges(10, petersen_edges())
    assert brute_force_clique_number(petersen.adj) == 2
    assert exact_max_clique(petersen).size == 2


def test_exact_budget():
    with pytest.raises(InputError):
        exact_max_clique(Graph.from_edges(65, []))
    assert exact_max_clique(Graph.from_edges(0, [])).size == 0


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=11))
def test_exact_matches_brute_force(g):
    res = exact_max_clique(g)
    assert res.verified
    assert res.size == brute_force_clique_number(g.adj)


@pytest.mark.parametrize("seed", range(10))
def test_exact_matches_networkx(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(20, 64))
    a = np.triu(rng.random((n, n)) < rng.uniform(0.2, 0.8), 1)
    g = Graph(a | a.T)
    nxg = nx.from_numpy_array(g.adj.astype(int))
    expected = max(len(c) for c in nx.find_cliques(nxg))
    assert exact_max_clique(g).size == expected


def test_enumerate_k_cliques_lexicographic():
    g = disjoint_cliques(4, 3)
    tris = list(enumerate_k_cliques(g, 3))
    assert tris == sorted(tris)
    assert tris == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3), (4, 5, 6)]
    assert list(enumerate_k_cliques(g, 3, limit=2)) == tris[:2]
    assert list(enumerate_k_cliques(g, 5)) == []


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=10), st.integers(1, 4))
def test_enumerate_k_cliques_matches_combinations(g, k):
    expected = [s for s in itertools.combinations(range(g.n), k) if is_clique(g, s)]
    assert list(enumerate_k_cliques(g, k)) == expected


# --- properties shared by all algorithms ----------------------------------------------


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=1, max_n=14), st.integers(1, 3))
def test_all_outputs_are_cliques_below_optimum(g, k):
    opt = exact_max_clique(g).size
    results = [greedy_clique(g), mono_clique(g), maximum_clique_bt06(g, k)]
    t = max(k, opt)
    if next(enumerate_k_cliques(g, k), None) is not None:
        results.append(spectral_max_clique(g, SpectralConfig(k=k, t=t)))
    for res in results:
        assert res.verified and is_clique(g, res.vertices)
        assert res.size <= opt


def test_path_ranks_for_bt06_and_mono():
    g = path(5)
    assert maximum_clique_bt06(g, 1).size == 2
    assert mono_clique(g).size == 2
    assert cycle(4).n == 4


def test_single_label_recovery_rate():
    # alpha < 1, m p^2 <= 1, n <= 40: labels force cliques, and usually nothing beats the heaviest
    rng = np.random.default_rng(0)
    equal = 0
    trials = 600
    for i in range(trials):
        n = int(rng.integers(10, 41))
        alpha = (1 / 3, 1 / 2, 2 / 3)[i % 3]
        m = RigParams(n, alpha, 0.5).m
        g, rep = sample_rig(RigParams(n, alpha, float(rng.uniform()) / np.sqrt(m)), Seed(5, i))
        opt = exact_max_clique(g).size
        top = int(rep.label_sizes.max(initial=0))
        assert opt >= top
        equal += opt == max(top, 1)
    assert equal / trials > 0.95, equal / trials


def test_spectral_seeded_rig_point_mostly_succeeds():
    # published behaviour at alpha=1/3, n=1000, k=6, p=0.20: failures only begin near p=0.25
    params = RigParams(1000, 1 / 3, 0.2)
    trials, wins = 50, 0
    for i in range(trials):
        g, rep = sample_rig(params, Seed(606, i))
        _, members = heaviest_label(rep)
        res = spectral_max_clique(g, SpectralConfig(k=6, t=200, seeded_set=tuple(members[:6].tolist())))
        assert res.verified
        wins += res.size >= members.size
    assert wins / trials >= 0.9, wins / trials


def test_spectral_neighborhood_modes():
    # K4 on 0..3, vertex 4 hangs off 0, vertex 5 off 1
    g = Graph.from_edges(6, [*itertools.combinations(range(4), 2), (0, 4), (1, 5)])
    union = spectral_max_clique(g, SpectralConfig(k=2, t=4, seeded_set=(0, 1)))
    common = spectral_max_clique(g, SpectralConfig(k=2, t=4, seeded_set=(0, 1), neighborhood="common"))
    assert union.info["subgraph_size"] == 6
    assert common.info["subgraph_size"] == 4
    assert common.vertices == (0, 1, 2, 3)
    with pytest.raises(InputError):
        SpectralConfig(k=2, t=4, neighborhood="intersection")
