"""Seeded synthetic network generators and a clustering-tuning rewirer."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .graph import Graph, GraphError, avg_clustering

Model = Literal["ba", "sw", "cnnr"]


@dataclass(frozen=True)
class GenParams:
    """Parameters for one generator run; only the chosen model's fields are read."""

    model: Model
    N: int
    m: int = 0
    K: int = 0
    p: float = 0.0
    u: float = 0.0
    r: float = 0.0
    seed: int = 0

    def validate(self) -> None:
        if self.model == "ba":
            if self.m < 1 or self.N < self.m + 1:
                raise GraphError(f"BA needs m >= 1 and N >= m+1 (got N={self.N}, m={self.m})")
        elif self.model == "sw":
            if self.K < 1 or self.N <= 2 * self.K:
                raise GraphError(f"SW needs K >= 1 and N > 2K (got N={self.N}, K={self.K})")
            if not 0.0 <= self.p <= 1.0:
                raise GraphError(f"SW rewiring probability must lie in [0, 1], got {self.p}")
        elif self.model == "cnnr":
            if self.N < 2:
                raise GraphError("CNNR needs N >= 2")
            if not 0.0 < self.u < 1.0:
                raise GraphError(f"CNNR needs 0 < u < 1, got {self.u}")
            if not 0.0 <= self.r <= 1.0:
                raise GraphError(f"CNNR needs 0 <= r <= 1, got {self.r}")
        else:
            raise GraphError(f"unknown model {self.model!r}")

    def label(self) -> str:
        if self.model == "ba":
            return f"BA({self.N},{self.m})"
        if self.model == "sw":
            return f"SW({self.N},{self.K},{self.p:g})"
        return f"CNNR({self.N},{self.u:g},{self.r:g})"


def generate(params: GenParams) -> Graph:
    params.validate()
    return {"ba": gen_ba, "sw": gen_sw, "cnnr": gen_cnnr}[params.model](params)


def gen_ba(params: GenParams) -> Graph:
    """Preferential attachment on a fully connected core of ``m`` nodes.

    Each new node picks ``m`` distinct targets, each drawn with probability
    proportional to current degree (rejecting repeats).
    """
    params.validate()
    N, m = params.N, params.m
    rng = random.Random(params.seed)
    adj: list[set[int]] = [set() for _ in range(N)]
    # one entry per edge endpoint; uniform choice from it is degree-proportional
    ends: list[int] = []
    for a in range(m):
        for b in range(a + 1, m):
            adj[a].add(b)
            adj[b].add(a)
            ends += (a, b)
    for v in range(m, N):
        if not ends:
            targets = set(range(m))  # m == 1: empty core, first node attaches to node 0
        else:
            targets = set()
            while len(targets) < m:
                targets.add(ends[int(rng.random() * len(ends))])
        for t in sorted(targets):
            adj[v].add(t)
            adj[t].add(v)
            ends += (v, t)
    return Graph.from_adjacency_sets(adj)


def gen_sw(params: GenParams) -> Graph:
    """Ring lattice with ``K`` neighbors per side, each edge rewired with probability ``p``.

    A rewired edge keeps its near endpoint and gets a uniform far endpoint
    that creates neither a loop nor a duplicate; after 100 failed draws the
    original edge is kept, so the edge count is always ``N * K``.
    """
    params.validate()
    N, K, p = params.N, params.K, params.p
    rng = random.Random(params.seed)
    adj: list[set[int]] = [set() for _ in range(N)]
    for i in range(N):
        for k in range(1, K + 1):
            j = (i + k) % N
            adj[i].add(j)
            adj[j].add(i)
    for k in range(1, K + 1):
        for i in range(N):
            if rng.random() >= p:
                continue
            j = (i + k) % N
            if j not in adj[i]:
                continue  # already rewired away by an earlier draw
            for _ in range(100):
                t = rng.randrange(N)
                if t != i and t not in adj[i]:
                    adj[i].discard(j)
                    adj[j].discard(i)
                    adj[i].add(t)
                    adj[t].add(i)
                    break
    return Graph.from_adjacency_sets(adj)


def gen_cnnr(params: GenParams, random_move: Literal["rewire", "add"] = "rewire") -> Graph:
    """Connecting-nearest-neighbor growth with random links.

    Starting from a single edge, each step draws one of three moves:

    * ``u (1 - r)``: turn a uniformly chosen stored potential edge into a tie;
    * ``u r``: random link. With ``random_move="rewire"`` a uniform existing
      tie keeps one end and moves the other to a uniform non-neighbor; with
      ``"add"`` two uniform non-adjacent nodes are tied;
    * ``1 - u``: add a node, tie it to a uniform existing node ``x`` and store
      potential edges from the newcomer to ``x``'s other friends.

    Stale potential edges (already tied) are discarded. With no potential
    edge left, the conversion move becomes a node addition. Growth stops at
    ``N`` nodes. Mean degree is about ``2 (1 - u r) / (1 - u)`` for
    ``"rewire"`` and ``2 / (1 - u)`` for ``"add"``.
    """
    params.validate()
    if random_move not in ("rewire", "add"):
        raise GraphError(f"unknown random_move {random_move!r}")
    N, u, r = params.N, params.u, params.r
    rng = random.Random(params.seed)
    adj: list[set[int]] = [{1}, {0}]
    pool: list[tuple[int, int]] = []
    # edge list with positions, for O(1) uniform edge choice when rewiring
    edges: list[tuple[int, int]] = [(0, 1)]
    where: dict[tuple[int, int], int] = {(0, 1): 0}

    def tie(a: int, b: int) -> None:
        adj[a].add(b)
        adj[b].add(a)
        e = (a, b) if a < b else (b, a)
        where[e] = len(edges)
        edges.append(e)

    def add_node() -> None:
        v = len(adj)
        x = rng.randrange(v)
        pool.extend((v, y) for y in sorted(adj[x]))
        adj.append(set())
        tie(v, x)

    def rewire() -> None:
        n = len(adj)
        k = rng.randrange(len(edges))
        a, b = edges[k]
        if rng.random() < 0.5:
            a, b = b, a
        for _ in range(100):
            t = rng.randrange(n)
            if t != a and t not in adj[a]:
                adj[a].discard(b)
                adj[b].discard(a)
                del where[edges[k]]
                adj[a].add(t)
                adj[t].add(a)
                e = (a, t) if a < t else (t, a)
                edges[k] = e
                where[e] = k
                return

    def add_random() -> None:
        n = len(adj)
        if all(len(s) == n - 1 for s in adj):
            return
        while True:
            a, b = rng.randrange(n), rng.randrange(n)
            if a != b and b not in adj[a]:
                tie(a, b)
                return

    while len(adj) < N:
        roll = rng.random()
        if roll < u * (1.0 - r):
            while pool:
                k = rng.randrange(len(pool))
                pool[k], pool[-1] = pool[-1], pool[k]
                a, b = pool.pop()
                if b not in adj[a]:
                    tie(a, b)
                    break
            else:
                add_node()
        elif roll < u:
            if random_move == "rewire":
                rewire()
            else:
                add_random()
        else:
            add_node()
    return Graph.from_adjacency_sets(adj)


@dataclass(frozen=True)
class TuneParams:
    target_clustering: float
    max_swaps: int = 200_000
    tolerance: float = 0.01

    def validate(self) -> None:
        if not 0.0 <= self.target_clustering <= 1.0:
            raise GraphError("target_clustering must lie in [0, 1]")
        if self.tolerance <= 0:
            raise GraphError("tolerance must be positive")
        if self.max_swaps < 0:
            raise GraphError("max_swaps must be non-negative")


@dataclass
class TuneResult:
    graph: Graph
    clustering: float
    accepted: int
    attempted: int
    converged: bool


class _Rewirer:
    """Mutable adjacency sets with incrementally tracked local triangle counts."""

    def __init__(self, g: Graph):
        self.adj = [set(g.neighbors(v)) for v in range(g.node_count)]
        self.edges = list(g.edges())
        self.pos = {e: k for k, e in enumerate(self.edges)}
        k = np.array([len(s) for s in self.adj], dtype=float)
        pairs = k * (k - 1) / 2
        self.inv_pairs = np.divide(1.0, pairs, out=np.zeros_like(pairs), where=pairs > 0)
        t = np.zeros(len(self.adj))
        for a, b in self.edges:
            c = len(self.adj[a] & self.adj[b])
            t[a] += c
            t[b] += c
        self.tri_sum = float((t / 2 * self.inv_pairs).sum())
        self.n = len(self.adj)

    @property
    def clustering(self) -> float:
        return self.tri_sum / self.n if self.n else 0.0

    def _toggle(self, a: int, b: int, add: bool) -> None:
        common = self.adj[a] & self.adj[b]
        sign = 1.0 if add else -1.0
        ip = self.inv_pairs
        self.tri_sum += sign * (len(common) * (ip[a] + ip[b]) + sum(ip[w] for w in common))
        if add:
            self.adj[a].add(b)
            self.adj[b].add(a)
            e = (a, b) if a < b else (b, a)
            self.pos[e] = len(self.edges)
            self.edges.append(e)
        else:
            self.adj[a].discard(b)
            self.adj[b].discard(a)
            e = (a, b) if a < b else (b, a)
            k = self.pos.pop(e)
            last = self.edges.pop()
            if k < len(self.edges):
                self.edges[k] = last
                self.pos[last] = k

    def swap(self, a: int, b: int, c: int, d: int) -> bool:
        """(a,b),(c,d) -> (a,c),(b,d); False if that would break simplicity."""
        if len({a, b, c, d}) < 4 or c in self.adj[a] or d in self.adj[b]:
            return False
        self._toggle(a, b, False)
        self._toggle(c, d, False)
        self._toggle(a, c, True)
        self._toggle(b, d, True)
        return True

    def graph(self) -> Graph:
        return Graph.from_adjacency_sets(self.adj)


def tune_clustering(g: Graph, params: TuneParams, seed: int = 0) -> TuneResult:
    """Degree-preserving double-edge swaps pushing mean clustering to a target.

    Proposals are ``(a,b),(c,d) -> (a,c),(b,d)``. When clustering must rise,
    half the proposals pick ``c`` two hops from ``a`` so the new tie closes
    a triangle; the rest pick two uniform edges. A swap is kept only if it
    preserves simplicity and moves clustering strictly toward the target.
    ``max_swaps`` bounds the number of proposals.
    """
    params.validate()
    rw = _Rewirer(g)
    rng = random.Random(seed)
    target, tol = params.target_clustering, params.tolerance
    accepted = attempted = 0
    while abs(rw.clustering - target) > tol and attempted < params.max_swaps:
        attempted += 1
        if len(rw.edges) < 2:
            break
        before = rw.clustering
        raising = before < target
        if raising and rng.random() < 0.5:
            a = rng.randrange(rw.n)
            if len(rw.adj[a]) < 1:
                continue
            x = rng.choice(sorted(rw.adj[a]))
            c = rng.choice(sorted(rw.adj[x]))
            if c == a or c in rw.adj[a] or not rw.adj[c]:
                continue
            b = rng.choice(sorted(rw.adj[a]))
            d = rng.choice(sorted(rw.adj[c]))
        else:
            a, b = rw.edges[rng.randrange(len(rw.edges))]
            c, d = rw.edges[rng.randrange(len(rw.edges))]
            if rng.random() < 0.5:
                a, b = b, a
        if not rw.swap(a, b, c, d):
            continue
        after = rw.clustering
        if abs(after - target) < abs(before - target):
            accepted += 1
        else:
            rw.swap(a, c, b, d)  # (a,c),(b,d) -> (a,b),(c,d)
    return TuneResult(
        rw.graph(), rw.clustering, accepted, attempted, abs(rw.clustering - target) <= tol
    )
