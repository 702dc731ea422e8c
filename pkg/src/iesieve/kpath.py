"""Randomized detection of simple paths on k nodes over GF(2^16).

For walks W = (w_1 .. w_k) starting at a fixed node and labelling
functions phi: K -> K, each pair contributes

    prod_i r(w_i w_{i+1}) * prod_i r(w_i, phi(i)).

Summed over bijective phi, walks that repeat a node cancel in pairs
(characteristic 2), while every simple path leaves a distinct monomial.
The bijective sum is evaluated as a sum over label sets S of unrestricted
phi: K -> S; for fixed S the phi-sum factorizes per position into
R_S(v) = sum of r(v, j) over j in S, giving a walk DP per S.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gf16
from .core import Graph, elements

K_MAX = 32
SPLITMIX_GAMMA = 0x9E3779B97F4A7C15
MASK64 = (1 << 64) - 1
CHUNK_BITS = 12  # label subsets processed per numpy batch: 2^12


class SplitMix64:
    def __init__(self, seed):
        self.state = seed & MASK64

    def next(self):
        self.state = (self.state + SPLITMIX_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)


@dataclass(frozen=True)
class KPathRandomness:
    """r(e) per edge and r(v, j) per node and position j = 1..k, drawn from one seed.

    Draw order: edges (u < v) lexicographically, then (v, j) lexicographically;
    each value is the low 16 bits of one SplitMix64 output.
    """

    seed: int
    k: int
    r_edge: dict
    r_label: tuple  # r_label[v][j - 1]

    @classmethod
    def generate(cls, seed, graph: Graph, k):
        rng = SplitMix64(seed)
        r_edge = {e: rng.next() & 0xFFFF for e in graph.edges()}
        r_label = tuple(tuple(rng.next() & 0xFFFF for _ in range(k)) for _ in range(graph.n))
        return cls(seed, k, r_edge, r_label)

    def edge(self, u, v):
        return self.r_edge[(u, v) if u < v else (v, u)]


def distances(graph: Graph, v, radius):
    """BFS distance from v for every node within ``radius``."""
    dist = {v: 0}
    frontier = [v]
    for r in range(1, radius + 1):
        nxt = []
        for u in frontier:
            for w in elements(graph.adj[u]):
                if w not in dist:
                    dist[w] = r
                    nxt.append(w)
        frontier = nxt
    return dist


def check_k(k):
    if not 2 <= k <= K_MAX:
        raise ValueError(f"k={k} outside supported range 2..{K_MAX}")
    if 2 * k * (k - 1) > 1 << gf16.DEGREE:
        raise ValueError(f"field too small for k={k}")


def _label_sums(r_label, positions):
    """Table R[S, v] for all S subset of the given label positions (bit b = positions[b])."""
    n = r_label.shape[0]
    table = np.zeros((1 << len(positions), n), dtype=np.uint16)
    for b, j in enumerate(positions):
        half = 1 << b
        table[half:2 * half] = table[:half] ^ r_label[:, j]
    return table


def kpath_statistic(graph: Graph, k: int, start: int, rnd: KPathRandomness) -> int:
    """Sum over permutation-labelled walks on k nodes from ``start``, in GF(2^16)."""
    check_k(k)
    n = graph.n
    if not 0 <= start < n:
        raise ValueError(f"start node {start} out of range")
    if rnd.k != k or len(rnd.r_label) != n:
        raise ValueError("randomness was drawn for a different graph or k")

    # a walk on k nodes stays within distance k-1 of start; relabel those nodes 0..c-1
    dist = distances(graph, start, k - 1)
    near = sorted(dist)
    index = {v: i for i, v in enumerate(near)}
    r_label = np.array([rnd.r_label[v] for v in near], dtype=np.uint16).reshape(len(near), k)

    # per DP step, the arcs v -> u whose source can already be nonzero, grouped by target u
    steps = []
    for i in range(k - 1):
        arcs = sorted(
            (index[u], index[v])
            for v in near if dist[v] <= i
            for u in elements(graph.adj[v]) if u in index
        )
        if not arcs:
            return 0
        src = np.array([v for _, v in arcs], dtype=np.int64)
        log_r = gf16.LOG[np.array([rnd.edge(near[u], near[v]) for u, v in arcs], dtype=np.int64)]
        targets, offsets = np.unique(np.array([u for u, _ in arcs], dtype=np.int64), return_index=True)
        steps.append((src, log_r, targets, offsets))
    start = index[start]

    low_bits = min(k, CHUNK_BITS)
    low = _label_sums(r_label, list(range(low_bits)))
    high = _label_sums(r_label, list(range(low_bits, k)))

    result = np.uint16(0)
    for h in range(high.shape[0]):
        weights = low ^ high[h]  # R_S(v) for S = low part | high part h
        d = np.zeros_like(weights)
        d[:, start] = weights[:, start]
        for src, log_r, targets, offsets in steps:
            terms = gf16.vscale(d[:, src], log_r)
            acc = np.zeros_like(d)
            acc[:, targets] = np.bitwise_xor.reduceat(terms, offsets, axis=1)
            d = gf16.vmul(acc, weights)
        result ^= np.bitwise_xor.reduce(d, axis=None)
    return int(result)


def kpath_statistic_reference(graph: Graph, k: int, start: int, rnd: KPathRandomness) -> int:
    """Same statistic, one label set at a time with scalar field arithmetic."""
    check_k(k)
    n = graph.n
    total = 0
    for s in range(1, 1 << k):
        w = [0] * n
        for v in range(n):
            for j in range(k):
                if s >> j & 1:
                    w[v] ^= rnd.r_label[v][j]
        d = [0] * n
        d[start] = w[start]
        for _ in range(k - 1):
            nxt = [0] * n
            for u, v in graph.edges():
                nxt[u] ^= gf16.gf_mul(rnd.edge(u, v), d[v])
                nxt[v] ^= gf16.gf_mul(rnd.edge(u, v), d[u])
            d = [gf16.gf_mul(nxt[v], w[v]) for v in range(n)]
        for x in d:
            total ^= x
    return total


def trial_seeds(seed, trials):
    rng = SplitMix64(seed)
    return [rng.next() for _ in range(trials)]


def kpath_detect(graph: Graph, k: int, trials: int = 1, seed: int = 0, anchored_start: int | None = None) -> bool:
    """True if some trial's statistic is nonzero (a k-node path certainly exists).

    False is wrong with probability below 2^-trials when such a path exists.
    """
    check_k(k)
    if trials < 1:
        raise ValueError("trials must be positive")
    starts = range(graph.n) if anchored_start is None else [anchored_start]
    for trial_seed in trial_seeds(seed, trials):
        rnd = KPathRandomness.generate(trial_seed, graph, k)
        for s in starts:
            if kpath_statistic(graph, k, s, rnd):
                return True
    return False
