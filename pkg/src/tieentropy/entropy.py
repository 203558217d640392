"""Information sequences and the entropy change caused by a single tie.

A node's information sequence holds each of its friends once plus each
friend's other friends, with repeats; the node itself never appears. The
entropy of a node is the natural-log Shannon entropy of the normalized
counts. Three routes to the change from one tie are provided:

* ``delta_on_add_exact`` rebuilds both sequences from scratch;
* ``delta_on_add_incremental`` / ``delta_on_remove`` patch a cached
  sequence, touching only the counts the tie changes;
* ``delta_taylor_approx`` is the first-order closed form, valid when the
  sequence is long compared with the tie's contribution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import log

from .graph import Graph, GraphError, common_neighbor_count


def xlogx(n: float) -> float:
    return n * log(n) if n > 0 else 0.0


def _entropy_from_sums(length: int, sum_xlogx: float) -> float:
    # -sum (n/s) ln(n/s) = ln s - (1/s) sum n ln n
    if length == 0:
        return 0.0
    return log(length) - sum_xlogx / length


@dataclass
class InfoSequence:
    """Counts ``n_q`` of every source in a node's information sequence."""

    owner: int
    counts: dict[int, int] = field(default_factory=dict)
    length: int = 0
    sum_xlogx: float = 0.0

    def entropy(self) -> float:
        return _entropy_from_sums(self.length, self.sum_xlogx)

    def frequencies(self) -> dict[int, float]:
        return {q: n / self.length for q, n in self.counts.items()}


def info_sequence(g: Graph, i: int) -> InfoSequence:
    counts: dict[int, int] = {}
    for q in g.neighbors(i):
        counts[q] = counts.get(q, 0) + 1
        for l in g.neighbors(q):
            if l != i:
                counts[l] = counts.get(l, 0) + 1
    length = sum(counts.values())
    return InfoSequence(i, counts, length, sum(xlogx(n) for n in counts.values()))


def entropy(g: Graph, i: int) -> float:
    return info_sequence(g, i).entropy()


@dataclass(frozen=True)
class EntropyDelta:
    """Entropy change at both ends of the tie ``(i, j)``."""

    i: int
    j: int
    c_ij: int
    delta_i: float
    delta_j: float

    @property
    def delta_pair(self) -> float:
        return self.delta_i + self.delta_j

    @property
    def edge(self) -> tuple[int, int]:
        return (self.i, self.j) if self.i < self.j else (self.j, self.i)


def _require_absent(g: Graph, i: int, j: int) -> None:
    if i == j:
        raise GraphError("a tie needs two distinct nodes")
    if g.has_edge(i, j):
        raise GraphError(f"edge ({i}, {j}) already present")


def delta_on_add_exact(g: Graph, i: int, j: int) -> EntropyDelta:
    """Entropy change from adding ``(i, j)``, by full recomputation on a copy."""
    _require_absent(g, i, j)
    before_i, before_j = entropy(g, i), entropy(g, j)
    h = g.copy()
    h.add_edge(i, j)
    return EntropyDelta(
        i, j, common_neighbor_count(g, i, j), entropy(h, i) - before_i, entropy(h, j) - before_j
    )


def _patched_entropy(seq: InfoSequence, changed: list[int], step: int) -> float:
    """Entropy of ``seq`` after adding ``step`` to the count of every id in ``changed``.

    ``changed`` must not repeat ids.
    """
    counts = seq.counts
    s = seq.sum_xlogx
    for l in changed:
        n = counts.get(l, 0)
        s += xlogx(n + step) - xlogx(n)
    return _entropy_from_sums(seq.length + step * len(changed), s)


def _side_on_add(g: Graph, seq: InfoSequence, j: int) -> float:
    i = seq.owner
    changed = [j]
    changed.extend(l for l in g.neighbors(j) if l != i)
    return _patched_entropy(seq, changed, +1) - seq.entropy()


def delta_on_add_incremental(
    g: Graph, i: int, j: int, cache: dict[int, InfoSequence] | None = None
) -> EntropyDelta:
    """Entropy change from adding ``(i, j)``, patching cached sequences.

    The new tie adds one count for ``j`` itself and one for each of ``j``'s
    friends, whether or not they were already sources of ``i``.
    """
    _require_absent(g, i, j)
    if cache is None:
        cache = {}
    for v in (i, j):
        if v not in cache:
            cache[v] = info_sequence(g, v)
    seq_i, seq_j = cache[i], cache[j]
    # j reaches i's sequence once through each common friend
    c_ij = seq_i.counts.get(j, 0)
    return EntropyDelta(i, j, c_ij, _side_on_add(g, seq_i, j), _side_on_add(g, seq_j, i))


def _side_on_remove(g: Graph, seq: InfoSequence, j: int) -> float:
    i = seq.owner
    changed = [j]
    changed.extend(l for l in g.neighbors(j) if l != i)
    return seq.entropy() - _patched_entropy(seq, changed, -1)


def delta_on_remove(
    g: Graph, i: int, j: int, cache: dict[int, InfoSequence] | None = None
) -> EntropyDelta:
    """Entropy the existing tie ``(i, j)`` provides: with-tie minus without-tie.

    Equal to ``delta_on_add_exact`` on the graph with the tie deleted, but
    evaluated on ``g`` itself without mutating it.
    """
    if i == j or not g.has_edge(i, j):
        raise GraphError(f"edge ({i}, {j}) not present")
    if cache is None:
        cache = {}
    for v in (i, j):
        if v not in cache:
            cache[v] = info_sequence(g, v)
    seq_i, seq_j = cache[i], cache[j]
    c_ij = seq_i.counts[j] - 1
    return EntropyDelta(i, j, c_ij, _side_on_remove(g, seq_i, j), _side_on_remove(g, seq_j, i))


def delta_taylor_approx(g: Graph, i: int, j: int) -> float:
    """First-order estimate of the change in ``i``'s entropy from adding ``(i, j)``.

    ``-(k_j+1)/s' * H_i - (1/s') * sum_{l in {j} + c(i,j)} ln n_l
    - (c_ij+1)/s' + (k_j+1)/s' * ln s'`` with ``s' = s_i + k_j + 1``.
    Needs at least one common friend so that every ``n_l`` is positive.
    """
    _require_absent(g, i, j)
    seq = info_sequence(g, i)
    c = seq.counts.get(j, 0)
    if c < 1:
        raise GraphError("approximation needs c_ij >= 1")
    k_j = g.degree(j)
    s_new = seq.length + k_j + 1
    common = set(g.neighbors(i)).intersection(g.neighbors(j))
    log_sum = log(seq.counts[j]) + sum(log(seq.counts[l]) for l in common)
    return (
        -(k_j + 1) / s_new * seq.entropy()
        - log_sum / s_new
        - (c + 1) / s_new
        + (k_j + 1) / s_new * log(s_new)
    )


def monotonicity_family(
    k_j: int, c_values, leaves_per_friend: int = 2
) -> list[tuple[Graph, int, int]]:
    """Graphs where ``i`` and ``j`` share exactly ``c`` friends, for each ``c``.

    ``i`` always has ``k_j`` friends ``a_1..a_{k_j}``, each with
    ``leaves_per_friend`` private leaves. ``j`` has ``k_j`` friends: the
    first ``c`` of the ``a``'s and ``k_j - c`` private nodes. Only the
    overlap varies between members. Node ids: ``i = 0``, ``j = 1``.
    """
    c_values = list(c_values)
    if k_j < 1 or not c_values:
        raise GraphError("need k_j >= 1 and at least one c value")
    if leaves_per_friend < 0:
        raise GraphError("leaves_per_friend must be non-negative")
    out = []
    for c in c_values:
        if not 1 <= c <= k_j:
            raise GraphError(f"c={c} outside [1, k_j={k_j}]")
        n = 2 + k_j + k_j * leaves_per_friend + (k_j - c)
        g = Graph(n)
        friends = list(range(2, 2 + k_j))
        nxt = 2 + k_j
        for a in friends:
            g.add_edge(0, a)
            for _ in range(leaves_per_friend):
                g.add_edge(a, nxt)
                nxt += 1
        for a in friends[:c]:
            g.add_edge(1, a)
        for _ in range(k_j - c):
            g.add_edge(1, nxt)
            nxt += 1
        out.append((g, 0, 1))
    return out
