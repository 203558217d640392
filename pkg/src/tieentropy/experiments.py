"""Per-tie entropy sweep, positiveness, and tie-strength distributions."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.special import xlogy

from .generators import GenParams, TuneParams, generate, tune_clustering
from .graph import Graph, GraphError, avg_clustering

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepRecord:
    i: int
    j: int
    c_ij: int
    delta_pair: float


@dataclass(frozen=True)
class Bucket:
    c_ij: int
    count: int
    min: float
    mean: float
    max: float


@dataclass(frozen=True)
class PositivenessReport:
    tau: float
    positive_count: int
    nonpositive_count: int
    clustering: float

    @property
    def total(self) -> int:
        return self.positive_count + self.nonpositive_count


def _xlogx(n: np.ndarray) -> np.ndarray:
    return xlogy(n, n)


def _entropy(length, sum_xlogx):
    length = np.asarray(length, dtype=float)
    out = np.zeros_like(length)
    pos = length > 0
    out[pos] = np.log(length[pos]) - sum_xlogx[pos] / length[pos]
    return out


def node_half_deltas(
    indptr: np.ndarray, indices: np.ndarray, i: int
) -> tuple[np.ndarray, np.ndarray]:
    """Entropy that each of ``i``'s ties provides to ``i``.

    Returns ``(half, c)`` aligned with ``i``'s sorted neighbor list:
    ``half[t]`` is ``H_i(with tie) - H_i(without tie)`` for neighbor ``t``
    and ``c[t]`` the common-friend count. Only the counts of the removed
    neighbor and of that neighbor's other friends change, so everything is
    read off one count table for ``i``.
    """
    lo, hi = indptr[i], indptr[i + 1]
    nbrs = indices[lo:hi]
    if nbrs.size == 0:
        return np.zeros(0), np.zeros(0, dtype=np.int64)
    starts, ends = indptr[nbrs], indptr[nbrs + 1]
    seg_len = ends - starts
    # concatenation of every neighbor's adjacency list, one segment per neighbor
    offsets = np.repeat(starts - np.concatenate(([0], np.cumsum(seg_len)[:-1])), seg_len)
    second = indices[np.arange(seg_len.sum()) + offsets]
    is_self = second == i
    keys, counts = np.unique(np.concatenate((nbrs, second[~is_self])), return_counts=True)
    length = counts.sum()
    total = _xlogx(counts.astype(float)).sum()
    # change in x log x when a count drops by one
    drop = _xlogx(counts - 1.0) - _xlogx(counts.astype(float))

    pos = np.searchsorted(keys, second)
    pos[is_self] = 0
    contrib = np.where(is_self, 0.0, drop[pos])
    seg_start = np.concatenate(([0], np.cumsum(seg_len)[:-1]))
    # every segment holds i, so none is empty
    seg_sum = np.add.reduceat(contrib, seg_start)
    jpos = np.searchsorted(keys, nbrs)
    without_len = length - seg_len
    without_sum = total + seg_sum + drop[jpos]
    h_with = np.log(length) - total / length
    half = h_with - _entropy(without_len, without_sum)
    return half, counts[jpos] - 1


def _sweep_nodes(args) -> tuple[np.ndarray, np.ndarray]:
    indptr, indices, lo, hi = args
    halves, commons = [], []
    for i in range(lo, hi):
        h, c = node_half_deltas(indptr, indices, i)
        halves.append(h)
        commons.append(c)
    if not halves:
        return np.zeros(0), np.zeros(0, dtype=np.int64)
    return np.concatenate(halves), np.concatenate(commons)


def _half_deltas(g: Graph, workers: int) -> tuple[np.ndarray, np.ndarray]:
    """Half deltas for every directed slot of the CSR adjacency, in CSR order."""
    indptr, indices = g.csr()
    n = g.node_count
    if workers <= 1 or n < 2:
        return _sweep_nodes((indptr, indices, 0, n))
    # contiguous node blocks of roughly equal adjacency volume
    bounds = np.searchsorted(indptr, np.linspace(0, indptr[-1], workers * 4 + 1)[1:-1])
    cuts = [0, *sorted(set(int(b) for b in bounds) - {0, n}), n]
    tasks = [(indptr, indices, a, b) for a, b in zip(cuts[:-1], cuts[1:])]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_sweep_nodes, tasks))
    return np.concatenate([p[0] for p in parts]), np.concatenate([p[1] for p in parts])


@dataclass
class Sweep:
    """Columnar sweep result, one row per canonical edge in sorted order."""

    i: np.ndarray
    j: np.ndarray
    c_ij: np.ndarray
    delta_pair: np.ndarray

    def __len__(self) -> int:
        return len(self.i)

    def records(self) -> list[SweepRecord]:
        return [
            SweepRecord(int(a), int(b), int(c), float(d))
            for a, b, c, d in zip(self.i, self.j, self.c_ij, self.delta_pair)
        ]


def edge_sweep(g: Graph, workers: int = 1) -> Sweep:
    """Entropy each tie gives its two ends, for every tie of ``g``.

    Ties are evaluated counterfactually (``g`` is never mutated), so workers
    share the graph read-only. Each value depends only on the graph and the
    tie, so the output is identical for any worker count.
    """
    indptr, indices = g.csr()
    half, common = _half_deltas(g, workers)
    src = np.repeat(np.arange(g.node_count, dtype=np.int64), np.diff(indptr))
    fwd = src < indices
    # slot of (j, i) for each slot (i, j): CSR is sorted by (src, dst), so
    # sorting slots by (dst, src) lists the reversed slots in CSR order
    rev = np.lexsort((src, indices))
    a, b = src[fwd], indices[fwd]
    delta = half[fwd] + half[rev[fwd]]
    log.debug("swept %d edges with %d workers", len(a), workers)
    return Sweep(a, b, common[fwd], delta)


def aggregate_sweep(sweep: Sweep | list[SweepRecord]) -> list[Bucket]:
    """Count, min, mean and max of the pair delta for each exact ``c_ij`` value."""
    if isinstance(sweep, Sweep):
        c, d = sweep.c_ij, sweep.delta_pair
    else:
        c = np.array([r.c_ij for r in sweep], dtype=np.int64)
        d = np.array([r.delta_pair for r in sweep], dtype=float)
    if len(c) == 0:
        raise GraphError("cannot aggregate an empty sweep")
    order = np.argsort(c, kind="stable")
    c, d = c[order], d[order]
    values, starts, counts = np.unique(c, return_index=True, return_counts=True)
    out = []
    for v, s, n in zip(values, starts, counts):
        seg = d[s:s + n]
        out.append(Bucket(int(v), int(n), float(seg.min()), float(seg.mean()), float(seg.max())))
    return out


def mean_slope(buckets: list[Bucket]) -> float:
    """Least-squares slope of the per-bucket mean against ``c_ij``."""
    if len(buckets) < 2:
        return 0.0
    x = np.array([b.c_ij for b in buckets], dtype=float)
    y = np.array([b.mean for b in buckets])
    return float(np.polyfit(x, y, 1)[0])


def positiveness(g: Graph, workers: int = 1, sweep: Sweep | None = None) -> PositivenessReport:
    """Fraction of ties whose presence strictly raises their ends' total entropy."""
    if g.edge_count == 0:
        raise GraphError("positiveness needs at least one edge")
    if sweep is None:
        sweep = edge_sweep(g, workers)
    pos = int((sweep.delta_pair > 0).sum())
    return PositivenessReport(pos / len(sweep), pos, len(sweep) - pos, avg_clustering(g))


def tau_vs_clustering_curve(
    base: GenParams | Graph,
    knob: list[float],
    tolerance: float = 0.005,
    max_swaps: int = 500_000,
    seed: int = 0,
    workers: int = 1,
) -> list[tuple[float, float]]:
    """``(clustering, tau)`` points, sorted by clustering.

    An SW ``GenParams`` base is regenerated with each knob value as ``p``.
    Any other base (a graph, or params that generate one) is tuned toward
    each knob value as target clustering, preserving degrees.
    """
    if not knob:
        raise GraphError("knob list is empty")
    points = []
    if isinstance(base, GenParams) and base.model == "sw":
        for p in knob:
            g = generate(GenParams("sw", base.N, K=base.K, p=p, seed=base.seed))
            rep = positiveness(g, workers)
            points.append((rep.clustering, rep.tau))
    else:
        g0 = generate(base) if isinstance(base, GenParams) else base
        for target in knob:
            res = tune_clustering(g0, TuneParams(target, max_swaps, tolerance), seed=seed)
            if not res.converged:
                log.warning("clustering target %.3f not reached (got %.4f)", target, res.clustering)
            rep = positiveness(res.graph, workers)
            points.append((rep.clustering, rep.tau))
    return sorted(points)


def tie_strengths(g: Graph) -> np.ndarray:
    """Overlap strength of every tie, in canonical edge order."""
    sets = [set(g.neighbors(v)) for v in range(g.node_count)]
    k = g.degrees()
    out = np.empty(g.edge_count)
    for t, (a, b) in enumerate(g.edges()):
        c = len(sets[a] & sets[b])
        denom = k[a] + k[b] - 2 - c
        out[t] = c / denom if denom else 0.0
    return out


def strength_cdf(g: Graph) -> list[tuple[float, float]]:
    """Empirical CDF of tie strength as ``(w, fraction of ties with strength <= w)``."""
    if g.edge_count == 0:
        raise GraphError("strength_cdf needs at least one edge")
    w = tie_strengths(g)
    values, counts = np.unique(w, return_counts=True)
    frac = np.cumsum(counts) / len(w)
    frac[-1] = 1.0
    return [(float(a), float(b)) for a, b in zip(values, frac)]


def cdf_at(cdf: list[tuple[float, float]], w: float) -> float:
    """Step-function value of an empirical CDF at ``w``."""
    xs = [x for x, _ in cdf]
    k = np.searchsorted(xs, w, side="right")
    return 0.0 if k == 0 else cdf[k - 1][1]


def taylor_errors(g: Graph, n_pairs: int = 100, seed: int = 0) -> np.ndarray:
    """``|approx - exact|`` of the one-sided entropy change for random non-ties.

    Pairs ``(i, j)`` are drawn uniformly among non-adjacent pairs sharing at
    least one friend (rejection sampling over uniform node pairs).
    """
    from .entropy import delta_on_add_incremental, delta_taylor_approx

    rng = np.random.default_rng(seed)
    sets = [set(g.neighbors(v)) for v in range(g.node_count)]
    out = []
    budget = 1000 * n_pairs + 100 * g.node_count**2
    while len(out) < n_pairs:
        budget -= 1
        if budget < 0:
            raise GraphError("too few non-adjacent pairs with a common friend")
        i, j = (int(x) for x in rng.integers(g.node_count, size=2))
        if i == j or j in sets[i] or sets[i].isdisjoint(sets[j]):
            continue
        exact = delta_on_add_incremental(g, i, j).delta_i
        out.append(abs(delta_taylor_approx(g, i, j) - exact))
    return np.array(out)
