from math import log

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tieentropy.entropy import (
    delta_on_add_exact,
    delta_on_add_incremental,
    delta_on_remove,
    delta_taylor_approx,
    entropy,
    info_sequence,
    monotonicity_family,
)
from tieentropy.graph import Graph, GraphError, common_neighbor_count

import oracles

# ln 5, and the entropy of counts {2, 1, 1, 2, 1} over 7
FIG1_BEFORE = log(5)
FIG1_AFTER = -(2 * (2 / 7) * log(2 / 7) + 3 * (1 / 7) * log(1 / 7))


def test_fig1_sequences(fig1):
    seq = info_sequence(fig1, 1)
    assert seq.counts == {2: 1, 3: 1, 4: 1, 5: 1, 7: 1}
    assert seq.length == 5
    assert seq.frequencies() == {q: 0.2 for q in (2, 3, 4, 5, 7)}
    g = fig1.copy()
    g.add_edge(1, 5)
    seq = info_sequence(g, 1)
    assert seq.counts == {2: 2, 3: 1, 4: 1, 5: 2, 7: 1}
    assert seq.length == 7


def test_fig1_entropy(fig1):
    assert entropy(fig1, 1) == pytest.approx(1.6094379, abs=1e-6)
    assert round(entropy(fig1, 1), 2) == 1.61
    g = fig1.copy()
    g.add_edge(1, 5)
    assert entropy(g, 1) == pytest.approx(FIG1_AFTER, abs=1e-12)
    assert entropy(g, 1) == pytest.approx(1.5498, abs=1e-4)
    assert round(entropy(g, 1), 2) == 1.55


def test_single_source_and_isolated():
    star = Graph(3, [(0, 1)])
    assert entropy(star, 0) == 0.0  # sequence {1}
    assert entropy(star, 2) == 0.0
    assert info_sequence(star, 2).length == 0


def test_fig1_add_delta(fig1):
    for fn in (delta_on_add_exact, delta_on_add_incremental):
        d = fn(fig1, 1, 5)
        assert d.delta_i == pytest.approx(FIG1_AFTER - FIG1_BEFORE, abs=1e-12)
        assert d.delta_i == pytest.approx(-0.0596, abs=1e-4)
        assert d.delta_i < 0
        assert d.c_ij == 1
        assert d.delta_pair == d.delta_i + d.delta_j


def test_fig1_remove_delta(fig1):
    g = fig1.copy()
    g.add_edge(1, 5)
    d = delta_on_remove(g, 1, 5)
    assert d.delta_i == pytest.approx(-0.0596, abs=1e-4)
    assert d.c_ij == 1


def test_isolated_pair():
    g = Graph(2)
    for fn in (delta_on_add_exact, delta_on_add_incremental):
        d = fn(g, 0, 1)
        assert d.delta_pair == 0.0
        assert d.c_ij == 0


def test_isolated_far_end():
    g = Graph(4, [(0, 1), (1, 2)])
    d = delta_on_add_incremental(g, 0, 3)
    h = g.copy()
    h.add_edge(0, 3)
    assert info_sequence(h, 0).length == info_sequence(g, 0).length + 1  # k_j = 0
    assert d.delta_i == pytest.approx(oracles.add_delta(g, 0, 3)[0], abs=1e-12)


def test_errors(fig1):
    with pytest.raises(GraphError):
        delta_on_add_exact(fig1, 1, 2)
    with pytest.raises(GraphError):
        delta_on_add_incremental(fig1, 1, 1)
    with pytest.raises(GraphError):
        delta_on_remove(fig1, 1, 5)
    with pytest.raises(GraphError):
        delta_taylor_approx(fig1, 1, 6)  # no common friend


def test_k3_remove_symmetric(k3):
    for i, j in k3.edges():
        d = delta_on_remove(k3, i, j)
        assert d.delta_i == pytest.approx(d.delta_j, abs=1e-15)


def _random_cases(seed, count, max_nodes):
    rng = np.random.default_rng(seed)
    while count:
        n = int(rng.integers(2, max_nodes + 1))
        g = oracles.random_graph(rng, n, float(rng.uniform(0.02, 0.4)))
        absent = [(i, j) for i in range(n) for j in range(i + 1, n) if not g.has_edge(i, j)]
        if not absent:
            continue
        i, j = absent[int(rng.integers(len(absent)))]
        if rng.random() < 0.5:
            i, j = j, i
        yield g, i, j
        count -= 1


def test_exact_matches_matrix_oracle():
    for g, i, j in _random_cases(1, 200, 20):
        d = delta_on_add_exact(g, i, j)
        oi, oj = oracles.add_delta(g, i, j)
        assert abs(d.delta_i - oi) < 1e-12
        assert abs(d.delta_j - oj) < 1e-12


def test_remove_equals_add_on_deleted_graph():
    rng = np.random.default_rng(2)
    checked = 0
    while checked < 1000:
        g = oracles.random_graph(rng, int(rng.integers(3, 30)), 0.25)
        edges = list(g.edges())
        if not edges:
            continue
        for i, j in [edges[k] for k in rng.choice(len(edges), size=min(5, len(edges)), replace=False)]:
            removed = delta_on_remove(g, i, j)
            h = g.copy()
            h.remove_edge(i, j)
            added = delta_on_add_exact(h, i, j)
            assert removed.c_ij == added.c_ij == common_neighbor_count(g, i, j)
            assert abs(removed.delta_i - added.delta_i) < 1e-12
            assert abs(removed.delta_j - added.delta_j) < 1e-12
            checked += 1


def test_sequence_length_identity():
    rng = np.random.default_rng(3)
    for _ in range(1000):
        g = oracles.random_graph(rng, int(rng.integers(1, 31)), float(rng.uniform(0, 0.5)))
        for i in range(g.node_count):
            seq = info_sequence(g, i)
            assert seq.length == sum(g.degree(q) for q in g.neighbors(i))
            assert i not in seq.counts
            assert seq.length == oracles.sequence_counts(oracles.adjacency_matrix(g), i).sum()


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_entropy_bounds_and_new_length(seed):
    rng = np.random.default_rng(seed)
    g = oracles.random_graph(rng, 15, 0.25)
    for i in range(g.node_count):
        seq = info_sequence(g, i)
        h = seq.entropy()
        support = len(seq.counts)
        assert -1e-12 <= h <= (log(support) if support else 0.0) + 1e-12
        if support and len(set(seq.counts.values())) == 1:
            assert h == pytest.approx(log(support), abs=1e-12)
    absent = [(i, j) for i in range(15) for j in range(15) if i != j and not g.has_edge(i, j)]
    if absent:
        i, j = absent[int(rng.integers(len(absent)))]
        k_j = g.degree(j)
        s = info_sequence(g, i).length
        h = g.copy()
        h.add_edge(i, j)
        assert info_sequence(h, i).length == s + k_j + 1
        d1 = delta_on_add_incremental(g, i, j)
        d2 = delta_on_add_incremental(g, j, i)
        assert d1.delta_pair == pytest.approx(d2.delta_pair, abs=1e-12)


def test_incremental_uses_cache(fig1):
    cache = {}
    delta_on_add_incremental(fig1, 1, 5, cache)
    assert set(cache) == {1, 5}
    d = delta_on_add_incremental(fig1, 1, 6, cache)
    assert d.delta_i == pytest.approx(oracles.add_delta(fig1, 1, 6)[0], abs=1e-12)


def test_taylor_fig1(fig1):
    # plug-in of the closed form with k_j=1, c=1, s=5, s'=7, n_5 = n_2 = 1
    expected = -(2 / 7) * log(5) - 0.0 - 2 / 7 + (2 / 7) * log(7)
    approx = delta_taylor_approx(fig1, 1, 5)
    assert approx == pytest.approx(expected, abs=1e-12)
    assert approx == pytest.approx(-0.1896, abs=1e-4)
    assert approx < 0 and delta_on_add_exact(fig1, 1, 5).delta_i < 0


def test_taylor_error_shrinks_with_sequence_length():
    # same overlap pattern, i's sequence padded with ever more private sources
    errors = []
    for leaves in (1, 4, 16, 64):
        g, i, j = monotonicity_family(10, [3], leaves_per_friend=leaves)[0]
        exact = delta_on_add_exact(g, i, j).delta_i
        errors.append(abs(delta_taylor_approx(g, i, j) - exact))
    assert all(a > b for a, b in zip(errors, errors[1:]))


def test_taylor_non_increasing_in_overlap():
    family = monotonicity_family(10, range(1, 11))
    approx = [delta_taylor_approx(g, i, j) for g, i, j in family]
    assert all(a >= b for a, b in zip(approx, approx[1:]))


def test_monotonicity_family_structure():
    family = monotonicity_family(10, range(1, 11))
    assert len(family) == 10
    for c, (g, i, j) in enumerate(family, 1):
        assert common_neighbor_count(g, i, j) == c
        assert g.degree(j) == 10
        assert g.degree(i) == 10
        assert not g.has_edge(i, j)
    g, i, j = monotonicity_family(10, [10])[0]
    assert set(g.neighbors(j)) <= set(g.neighbors(i))


def test_monotonicity_family_exact_non_increasing():
    family = monotonicity_family(10, range(1, 11))
    exact = [delta_on_add_exact(g, i, j).delta_i for g, i, j in family]
    assert all(a >= b for a, b in zip(exact, exact[1:]))


def test_monotonicity_family_rejects_bad_params():
    with pytest.raises(GraphError):
        monotonicity_family(10, [0])
    with pytest.raises(GraphError):
        monotonicity_family(3, [4])
    with pytest.raises(GraphError):
        monotonicity_family(0, [1])
