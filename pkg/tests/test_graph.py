import collections

import numpy as np
import pytest

from wordpath import (
    Graph,
    PreferentialSampler,
    SplitMix64,
    chain_graph,
    complete_graph,
    degree_exponent,
    sample_edge_pair,
    sample_preferential,
    star_graph,
)
from wordpath.errors import InsufficientDataError
from wordpath.graph import fit_degree_exponent, synthetic_power_law_degrees


def test_chain_seed_shape():
    g = chain_graph(7)
    assert g.n_nodes == 7 and g.n_edges == 6
    assert g.degrees[0] == 1 and g.degrees[-1] == 1
    assert all(k == 2 for k in g.degrees[1:-1])


def test_chain_small_cases():
    g1 = chain_graph(1)
    assert g1.n_nodes == 1 and g1.n_edges == 0
    assert chain_graph(3).degrees == [1, 2, 1]
    with pytest.raises(ValueError):
        chain_graph(0)


def test_add_edge_semantics():
    g = Graph()
    g.add_node()
    g.add_node()
    assert g.add_edge(0, 1) is True
    assert g.add_edge(0, 1) is False
    assert g.n_edges == 1
    with pytest.raises(ValueError):
        g.add_edge(1, 1)
    with pytest.raises(ValueError):
        g.add_edge(0, 5)
    nid = g.add_node()
    g.add_edge(nid, 0)
    assert g.degrees[nid] == 1


def test_handshake_under_random_mutations():
    rng = SplitMix64(11)
    g = chain_graph(5)
    for _ in range(300):
        if rng.random() < 0.3:
            g.add_node()
        else:
            i = rng.below(g.n_nodes)
            j = rng.below(g.n_nodes)
            if i != j:
                g.add_edge(i, j)
        assert sum(g.degrees) == 2 * g.n_edges
        assert len(g.endpoints) == 2 * g.n_edges
    g.check_handshake()


def test_rewire_keeps_structure_consistent():
    g = chain_graph(6)
    g.rewire_edge(0, kept=1, new_target=5)  # edge (0,1) -> (1,5)
    assert not g.has_edge(0, 1)
    assert g.has_edge(1, 5)
    assert sum(g.degrees) == 2 * g.n_edges
    assert sorted(g.endpoints) == sorted(
        [u for e in g.edges() for u in e]
    )
    with pytest.raises(ValueError):
        g.rewire_edge(1, kept=1, new_target=2)  # (1,2) -> (1,2) duplicate
    with pytest.raises(ValueError):
        g.rewire_edge(1, kept=9, new_target=0)


def test_linear_sampler_exactness():
    # star: hub degree 3, leaves 1 -> hub probability 3/6
    g = star_graph(4)
    rng = SplitMix64(123)
    counts = collections.Counter(
        sample_preferential(g, rng) for _ in range(200_000)
    )
    total = sum(counts.values())
    p_hub = counts[0] / total
    # binomial 4-sigma band around 0.5
    sigma = (0.5 * 0.5 / total) ** 0.5
    assert abs(p_hub - 0.5) < 4 * sigma


def test_linear_sampler_matches_degree_distribution():
    rng = SplitMix64(7)
    g = chain_graph(6)
    g.add_edge(0, 3)
    g.add_edge(2, 5)
    sampler = PreferentialSampler(g)
    draws = 1_000_000
    counts = collections.Counter(sampler.draw(rng) for _ in range(draws))
    two_e = 2 * g.n_edges
    for node in range(g.n_nodes):
        expect = g.degrees[node] / two_e
        sigma = (expect * (1 - expect) / draws) ** 0.5
        assert abs(counts[node] / draws - expect) < 4 * sigma


def test_sampler_rejects_negative_exponent():
    with pytest.raises(ValueError):
        PreferentialSampler(star_graph(4), xi=-1.0)


def test_nonlinear_sampler_xi2():
    # degrees (3,1,1,1): hub weight 9 of 12
    g = star_graph(4)
    rng = SplitMix64(99)
    sampler = PreferentialSampler(g, xi=2.0)
    draws = 200_000
    hub = sum(1 for _ in range(draws) if sampler.draw(rng) == 0)
    p = hub / draws
    sigma = (0.75 * 0.25 / draws) ** 0.5
    assert abs(p - 0.75) < 4 * sigma


def test_nonlinear_sampler_xi0_uniform_over_positive_degree():
    g = star_graph(5)
    g.add_node()  # isolated node must never be drawn
    rng = SplitMix64(42)
    sampler = PreferentialSampler(g, xi=0.0)
    draws = 100_000
    counts = collections.Counter(sampler.draw(rng) for _ in range(draws))
    assert counts[5] == 0
    for node in range(5):
        assert abs(counts[node] / draws - 0.2) < 4 * (0.2 * 0.8 / draws) ** 0.5


def test_sampler_errors():
    g = Graph()
    g.add_node()
    rng = SplitMix64(0)
    with pytest.raises(ValueError):
        sample_preferential(g, rng)
    with pytest.raises(ValueError):
        sample_preferential(g, rng, xi=1.0)


def test_edge_pair_complete_graph_exhausted():
    g = complete_graph(3)
    assert sample_edge_pair(g, SplitMix64(1)) is None


def test_edge_pair_path_only_candidate():
    g = chain_graph(3)  # a-b-c: only non-edge is (a, c)
    for seed in range(20):
        pair = sample_edge_pair(g, SplitMix64(seed))
        assert pair is not None and set(pair) == {0, 2}


def test_edge_pair_star_leaf_leaf():
    g = star_graph(4)
    rng = SplitMix64(3)
    for _ in range(200):
        pair = sample_edge_pair(g, rng)
        assert pair is not None
        assert 0 not in pair  # hub pairs are existing edges


def test_edge_pair_never_existing_edge_or_self():
    rng = SplitMix64(77)
    for trial in range(30):
        g = chain_graph(8)
        extra = SplitMix64(trial)
        for _ in range(10):
            i, j = extra.below(8), extra.below(8)
            if i != j:
                g.add_edge(i, j)
        for _ in range(50):
            pair = sample_edge_pair(g, rng)
            if pair is None:
                continue
            i, j = pair
            assert i != j
            assert not g.has_edge(i, j)


def test_degree_mle_recovers_synthetic_exponent():
    degrees = synthetic_power_law_degrees(2.5, 100_000, seed=8, kmin=1)
    est = fit_degree_exponent(degrees, kmin=1)
    assert abs(est - 2.5) < 0.1


def test_degree_mle_recovers_with_kmin_cut():
    degrees = synthetic_power_law_degrees(3.0, 50_000, seed=9, kmin=2)
    est = fit_degree_exponent(degrees, kmin=2)
    assert abs(est - 3.0) < 0.15


def test_degree_mle_uniform_degrees_flagged_large():
    # all mass at kmin: the zeta likelihood is maximized at the gamma bound
    est = fit_degree_exponent([5] * 500, kmin=5)
    assert est > 10  # not scale-free: optimum runs to the bound


def test_degree_mle_insufficient_tail():
    g = chain_graph(30)
    with pytest.raises(InsufficientDataError):
        degree_exponent(g, kmin=2)


def test_csr_layout():
    g = chain_graph(4)
    indptr, indices = g.to_csr()
    assert indptr.tolist() == [0, 1, 3, 5, 6]
    assert sorted(indices[indptr[1]:indptr[2]].tolist()) == [0, 2]
