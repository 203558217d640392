"""Undirected simple graph with sorted adjacency lists."""

from __future__ import annotations

from bisect import bisect_left, insort
from typing import Iterable, Iterator

import numpy as np


class GraphError(ValueError):
    """Raised when a graph operation's precondition is violated."""


class Graph:
    """Undirected simple graph over dense node ids ``0 .. node_count - 1``.

    Each node keeps a sorted list of its neighbors, so common-neighbor
    counts are linear in the two degrees. A CSR view (``indptr``,
    ``indices``) is built lazily for the vectorized analysis code and
    dropped on every mutation.
    """

    __slots__ = ("_adj", "_edge_count", "_csr")

    def __init__(self, node_count: int = 0, edges: Iterable[tuple[int, int]] = ()):
        if node_count < 0:
            raise GraphError("node_count must be non-negative")
        self._adj: list[list[int]] = [[] for _ in range(node_count)]
        self._edge_count = 0
        self._csr = None
        for i, j in edges:
            self.add_edge(i, j)

    @classmethod
    def from_adjacency_sets(cls, adj: list[set[int]]) -> "Graph":
        """Build from per-node neighbor sets (assumed symmetric, loop-free)."""
        g = cls(0)
        g._adj = [sorted(s) for s in adj]
        g._edge_count = sum(len(s) for s in adj) // 2
        return g

    # -- basic accessors ---------------------------------------------------

    @property
    def node_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def _check(self, i: int) -> None:
        if not 0 <= i < len(self._adj):
            raise GraphError(f"invalid node id {i}")

    def neighbors(self, i: int) -> list[int]:
        """Sorted neighbor list of ``i`` (do not mutate)."""
        self._check(i)
        return self._adj[i]

    def degree(self, i: int) -> int:
        self._check(i)
        return len(self._adj[i])

    def degrees(self) -> np.ndarray:
        return np.fromiter((len(a) for a in self._adj), dtype=np.int64, count=len(self._adj))

    def has_edge(self, i: int, j: int) -> bool:
        self._check(i)
        self._check(j)
        a = self._adj[i]
        pos = bisect_left(a, j)
        return pos < len(a) and a[pos] == j

    def edges(self) -> Iterator[tuple[int, int]]:
        """Canonical edges ``(i, j)`` with ``i < j`` in lexicographic order."""
        for i, a in enumerate(self._adj):
            for j in a[bisect_left(a, i + 1):]:
                yield i, j

    def edge_array(self) -> np.ndarray:
        """Canonical edges as an ``(E, 2)`` int array, sorted."""
        indptr, indices = self.csr()
        src = np.repeat(np.arange(self.node_count, dtype=np.int64), np.diff(indptr))
        keep = src < indices
        return np.column_stack([src[keep], indices[keep]])

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        if self._csr is None:
            deg = self.degrees()
            indptr = np.zeros(self.node_count + 1, dtype=np.int64)
            np.cumsum(deg, out=indptr[1:])
            if self._edge_count:
                indices = np.fromiter(
                    (j for a in self._adj for j in a), dtype=np.int64, count=int(indptr[-1])
                )
            else:
                indices = np.zeros(0, dtype=np.int64)
            self._csr = (indptr, indices)
        return self._csr

    # -- mutation ----------------------------------------------------------

    def add_node(self) -> int:
        self._adj.append([])
        self._csr = None
        return len(self._adj) - 1

    def add_edge(self, i: int, j: int) -> None:
        if i == j:
            raise GraphError(f"self-loop ({i}, {i}) not allowed")
        if self.has_edge(i, j):
            raise GraphError(f"edge ({i}, {j}) already present")
        insort(self._adj[i], j)
        insort(self._adj[j], i)
        self._edge_count += 1
        self._csr = None

    def remove_edge(self, i: int, j: int) -> None:
        if i == j or not self.has_edge(i, j):
            raise GraphError(f"edge ({i}, {j}) not present")
        del self._adj[i][bisect_left(self._adj[i], j)]
        del self._adj[j][bisect_left(self._adj[j], i)]
        self._edge_count -= 1
        self._csr = None

    def copy(self) -> "Graph":
        g = Graph(0)
        g._adj = [list(a) for a in self._adj]
        g._edge_count = self._edge_count
        return g

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Return the graph with node ``v`` renamed to ``perm[v]``."""
        perm = list(perm)
        if sorted(perm) != list(range(self.node_count)):
            raise GraphError("perm must be a permutation of the node ids")
        adj: list[set[int]] = [set() for _ in perm]
        for v, a in enumerate(self._adj):
            adj[perm[v]] = {perm[u] for u in a}
        return Graph.from_adjacency_sets(adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(node_count={self.node_count}, edge_count={self.edge_count})"


def degree(g: Graph, i: int) -> int:
    return g.degree(i)


def common_neighbors(g: Graph, i: int, j: int) -> list[int]:
    """Sorted list of nodes adjacent to both ``i`` and ``j``.

    Two-pointer merge over the sorted adjacency lists. Whether ``(i, j)``
    is itself an edge does not matter: neither endpoint can appear.
    """
    if i == j:
        raise GraphError("common_neighbors needs two distinct nodes")
    a, b = g.neighbors(i), g.neighbors(j)
    out = []
    p = q = 0
    while p < len(a) and q < len(b):
        x, y = a[p], b[q]
        if x == y:
            out.append(x)
            p += 1
            q += 1
        elif x < y:
            p += 1
        else:
            q += 1
    return out


def common_neighbor_count(g: Graph, i: int, j: int) -> int:
    if i == j:
        raise GraphError("common_neighbor_count needs two distinct nodes")
    return len(set(g.neighbors(i)).intersection(g.neighbors(j)))


def tie_strength(g: Graph, i: int, j: int) -> float:
    """Neighborhood overlap ``c_ij / (k_i - 1 + k_j - 1 - c_ij)`` of an edge.

    A pendant pair (both endpoints of degree one) has a zero denominator and
    necessarily zero overlap; it is given strength 0.
    """
    if not g.has_edge(i, j):
        raise GraphError(f"edge ({i}, {j}) not present")
    c = common_neighbor_count(g, i, j)
    denom = g.degree(i) + g.degree(j) - 2 - c
    return c / denom if denom else 0.0


def triangles(g: Graph) -> np.ndarray:
    """Number of triangles through each node."""
    t = np.zeros(g.node_count, dtype=np.int64)
    sets = [set(a) for a in g._adj]
    for i, j in g.edges():
        c = len(sets[i] & sets[j])
        t[i] += c
        t[j] += c
    return t // 2


def local_clustering(g: Graph) -> np.ndarray:
    k = g.degrees()
    pairs = k * (k - 1) / 2.0
    out = np.zeros(g.node_count)
    np.divide(triangles(g), pairs, out=out, where=pairs > 0)
    return out


def avg_clustering(g: Graph) -> float:
    """Mean local clustering; nodes of degree below 2 count as 0."""
    if g.node_count == 0:
        return 0.0
    return float(local_clustering(g).mean())


def edge_sum_clustering(g: Graph) -> float:
    """Clustering rewritten as a sum over ordered edges.

    ``(1/|V|) * sum over ordered (i, j) in E of c_ij / C(k_i, 2)``, with
    zero-pair terms skipped. Every triangle at ``i`` is counted once per
    incident edge, i.e. twice, so this is ``2 * avg_clustering``; it is kept
    as a diagnostic of that normalization.
    """
    if g.node_count == 0:
        return 0.0
    total = 0.0
    sets = [set(a) for a in g._adj]
    for i, j in g.edges():
        c = len(sets[i] & sets[j])
        for a in (i, j):
            pairs = len(sets[a]) * (len(sets[a]) - 1) / 2
            if pairs:
                total += c / pairs
    return total / g.node_count
