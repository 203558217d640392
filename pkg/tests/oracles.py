"""Brute-force reference computations, independent of the package internals."""

from itertools import combinations

import numpy as np

from tieentropy.graph import Graph


def adjacency_matrix(g: Graph) -> np.ndarray:
    n = g.node_count
    a = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in g.neighbors(i):
            a[i, j] = 1
    return a


def sequence_counts(a: np.ndarray, i: int) -> np.ndarray:
    """Row i of A + A^2 with the diagonal entry removed."""
    row = a[i] + a[i] @ a
    row[i] = 0
    return row


def entropy_from_matrix(a: np.ndarray, i: int) -> float:
    row = sequence_counts(a, i).astype(float)
    s = row.sum()
    if s == 0:
        return 0.0
    q = row[row > 0] / s
    return float(-(q * np.log(q)).sum())


def add_delta(g: Graph, i: int, j: int) -> tuple[float, float]:
    a = adjacency_matrix(g)
    b = a.copy()
    b[i, j] = b[j, i] = 1
    return (
        entropy_from_matrix(b, i) - entropy_from_matrix(a, i),
        entropy_from_matrix(b, j) - entropy_from_matrix(a, j),
    )


def avg_clustering(g: Graph) -> float:
    if g.node_count == 0:
        return 0.0
    total = 0.0
    for v in range(g.node_count):
        nb = g.neighbors(v)
        if len(nb) < 2:
            continue
        closed = sum(1 for x, y in combinations(nb, 2) if g.has_edge(x, y))
        total += closed / (len(nb) * (len(nb) - 1) / 2)
    return total / g.node_count


def random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    g = Graph(n)
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                g.add_edge(i, j)
    return g
