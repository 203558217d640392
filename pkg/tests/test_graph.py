import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tieentropy.graph import (
    Graph,
    GraphError,
    avg_clustering,
    common_neighbor_count,
    common_neighbors,
    degree,
    edge_sum_clustering,
    tie_strength,
)

import oracles


@st.composite
def graphs(draw, max_nodes=12):
    n = draw(st.integers(2, max_nodes))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return Graph(n, chosen)


def test_degree_examples(k3):
    assert degree(k3, 1) == 2
    assert degree(Graph(1), 0) == 0
    star = Graph(6, [(0, leaf) for leaf in range(1, 6)])
    assert degree(star, 0) == 5


def test_degree_invalid_node(k3):
    with pytest.raises(GraphError):
        degree(k3, 3)
    with pytest.raises(GraphError):
        degree(k3, -1)


def test_common_neighbors_examples(k3):
    assert common_neighbors(k3, 0, 1) == [2]
    path = Graph(3, [(0, 1), (1, 2)])
    assert common_neighbors(path, 0, 2) == [1]
    assert common_neighbors(Graph(2), 0, 1) == []
    with pytest.raises(GraphError):
        common_neighbors(k3, 1, 1)


def test_tie_strength_examples(k3):
    assert tie_strength(k3, 0, 1) == 1.0
    assert tie_strength(Graph(3, [(0, 1), (1, 2)]), 0, 1) == 0.0
    assert tie_strength(Graph(2, [(0, 1)]), 0, 1) == 0.0
    with pytest.raises(GraphError):
        tie_strength(Graph(3, [(0, 1)]), 0, 2)


def test_pendant_pair_has_no_common_neighbor():
    # every graph on two nodes: the only edge can never have a common neighbor
    for edges in ([], [(0, 1)]):
        g = Graph(2, edges)
        assert common_neighbor_count(g, 0, 1) == 0


def test_clustering_examples(k3):
    assert avg_clustering(k3) == 1.0
    assert avg_clustering(Graph(4, [(0, 1), (1, 2), (2, 3)])) == 0.0
    assert avg_clustering(Graph(0)) == 0.0


def test_add_remove(fig1):
    g = fig1.copy()
    g.add_edge(1, 5)
    assert degree(g, 1) == 4
    g.remove_edge(1, 5)
    assert g == fig1
    with pytest.raises(GraphError):
        g.add_edge(1, 2)
    with pytest.raises(GraphError):
        g.add_edge(3, 3)
    with pytest.raises(GraphError):
        g.remove_edge(1, 5)


def test_edge_sum_clustering_counts_each_triangle_twice():
    rng = np.random.default_rng(5)
    for _ in range(20):
        g = oracles.random_graph(rng, 25, 0.2)
        assert edge_sum_clustering(g) == pytest.approx(2 * avg_clustering(g), abs=1e-12)


@given(graphs())
def test_structure_invariants(g):
    deg = g.degrees()
    assert deg.sum() == 2 * g.edge_count
    for i in range(g.node_count):
        assert i not in g.neighbors(i)
        assert g.neighbors(i) == sorted(set(g.neighbors(i)))
        for j in g.neighbors(i):
            assert i in g.neighbors(j)


@given(graphs(), st.data())
def test_common_neighbors_symmetric_and_edge_independent(g, data):
    i, j = data.draw(st.sampled_from(list(itertools.combinations(range(g.node_count), 2))))
    before = common_neighbors(g, i, j)
    assert before == common_neighbors(g, j, i)
    assert len(before) == common_neighbor_count(g, i, j)
    h = g.copy()
    if h.has_edge(i, j):
        h.remove_edge(i, j)
    else:
        h.add_edge(i, j)
    assert common_neighbors(h, i, j) == before


@given(graphs())
def test_tie_strength_range_and_equality_case(g):
    for i, j in g.edges():
        w = tie_strength(g, i, j)
        assert 0.0 <= w <= 1.0
        ni = set(g.neighbors(i)) - {j}
        nj = set(g.neighbors(j)) - {i}
        full_overlap = ni == nj and len(ni) >= 1
        assert (w == 1.0) == full_overlap


@given(graphs(), st.lists(st.tuples(st.integers(0, 11), st.integers(0, 11)), max_size=30))
def test_degree_sum_after_mutations(g, ops):
    for a, b in ops:
        a, b = a % g.node_count, b % g.node_count
        if a == b:
            continue
        if g.has_edge(a, b):
            g.remove_edge(a, b)
        else:
            g.add_edge(a, b)
        assert g.degrees().sum() == 2 * g.edge_count
        assert g.edge_count == len(list(g.edges()))


@settings(max_examples=50)
@given(graphs(max_nodes=20))
def test_clustering_matches_triangle_oracle(g):
    assert avg_clustering(g) == pytest.approx(oracles.avg_clustering(g), abs=1e-12)


def test_clustering_oracle_50_nodes():
    rng = np.random.default_rng(0)
    for p in (0.05, 0.2, 0.5):
        g = oracles.random_graph(rng, 50, p)
        assert avg_clustering(g) == pytest.approx(oracles.avg_clustering(g), abs=1e-12)


def test_csr_and_edge_array(fig1):
    indptr, indices = fig1.csr()
    assert list(indices[indptr[1]:indptr[2]]) == [2, 3, 4]
    assert [tuple(e) for e in fig1.edge_array()] == list(fig1.edges())
    g = fig1.copy()
    g.add_edge(0, 1)
    assert g.csr()[1].size == 2 * g.edge_count


def test_relabel_preserves_structure(fig1):
    perm = [7, 6, 5, 4, 3, 2, 1, 0]
    h = fig1.relabel(perm)
    assert h.edge_count == fig1.edge_count
    assert all(h.has_edge(perm[i], perm[j]) for i, j in fig1.edges())
    with pytest.raises(GraphError):
        fig1.relabel([0] * 8)
