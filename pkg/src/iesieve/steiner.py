"""Minimum Steiner tree size (node count) by sieving willows over the terminals.

A willow of size l rooted at u is counted by

    a^1(u) = 1,   a^k(u) = sum over edges uv, i = 1..k-1 of a^i(u) a^(k-i)(v)

with every node restricted to lie outside the avoided set X. These are
weighted counts, not a census of distinct willows; only whether the
terminal sieve is positive matters for the minimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice

from .core import CorruptionError, Graph, elements, full, popcount, submasks


@dataclass(frozen=True)
class SteinerInstance:
    graph: Graph
    terminals: int

    def __post_init__(self):
        if self.terminals == 0:
            raise ValueError("terminal set must be nonempty")
        if self.terminals < 0 or self.terminals >> self.graph.n:
            raise ValueError("terminals must be nodes of the graph")

    @property
    def k(self):
        return popcount(self.terminals)


class WillowLayers:
    """Willow counts a^1(X, .), a^2(X, .), ... for one avoided set X, grown on demand."""

    def __init__(self, graph: Graph, x: int):
        allowed = full(graph.n) & ~x
        self.live = list(elements(allowed))
        self.nbrs = {u: list(elements(graph.adj[u] & allowed)) for u in self.live}
        self.layers = [None]  # 1-based: layers[k][u]
        self.nbr_sums = [None]  # nbr_sums[k][u] = sum of a^k(v) over allowed neighbours v of u

    def _push(self, layer):
        self.layers.append(layer)
        self.nbr_sums.append({u: sum(layer[v] for v in self.nbrs[u]) for u in self.live})

    def extend(self):
        """Compute the next size layer and return its total over all roots."""
        k = len(self.layers)
        if k == 1:
            layer = {u: 1 for u in self.live}
        else:
            layer = {
                u: sum(self.layers[i][u] * self.nbr_sums[k - i][u] for i in range(1, k))
                for u in self.live
            }
        self._push(layer)
        return sum(layer.values())


def willow_count_avoiding(graph: Graph, x: int, size: int) -> int:
    """a^size(X): willows of the given size avoiding X, summed over all roots."""
    if size < 1:
        raise ValueError("size must be positive")
    dp = WillowLayers(graph, x)
    total = 0
    for _ in range(size):
        total = dp.extend()
    return total


def _sieve(inst: SteinerInstance):
    dps = [(popcount(x) & 1, WillowLayers(inst.graph, x)) for x in submasks(inst.terminals)]
    size = 0
    while True:
        size += 1
        s = 0
        for odd, dp in dps:
            a = dp.extend()
            s += -a if odd else a
        if s < 0:
            raise CorruptionError(f"willow sieve negative at size {size}: {s}")
        yield size, s


def sieve_sums(inst: SteinerInstance, upto: int | None = None):
    """Sieve values sum over X subset of terminals of (-1)^|X| a^l(X), for l = 1..upto."""
    upto = inst.graph.n if upto is None else upto
    return [s for _, s in islice(_sieve(inst), upto)]


def steiner_min_size(inst: SteinerInstance):
    """Fewest nodes in a connected subgraph containing all terminals, or None if none exists."""
    k = inst.k
    if k == 1:
        return 1
    for size, s in islice(_sieve(inst), inst.graph.n):
        if size >= k and s > 0:
            return size
    return None
