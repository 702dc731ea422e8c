"""Hamiltonian path counting by sieving walks that avoid node sets."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from .core import INTEGERS, CorruptionError, Graph, check_cap, elements, full, nonnegative, popcount, submasks

HAM_CAP = 30


def walks_avoiding(graph: Graph, x: int, start: int, length: int, ring=INTEGERS):
    """Walks v_1 .. v_length with v_1 = start and no v_i in x.

    Only the current length layer is kept: a(t) for every endpoint t.
    """
    if not 0 <= start < graph.n:
        raise ValueError(f"start node {start} out of range")
    if length < 1:
        raise ValueError("walk length must be positive")
    if x >> start & 1:
        return ring.zero
    allowed = full(graph.n) & ~x
    nbrs = [list(elements(graph.adj[t] & allowed)) for t in range(graph.n)]
    live = list(elements(allowed))
    layer = [ring.zero] * graph.n
    layer[start] = ring.one
    add = ring.add
    for _ in range(length - 1):
        nxt = [ring.zero] * graph.n
        for t in live:
            acc = ring.zero
            for v in nbrs[t]:
                if layer[v]:
                    acc = add(acc, layer[v])
            nxt[t] = acc
        layer = nxt
    total = ring.zero
    for t in live:
        total = add(total, layer[t])
    return total


def _sieve_chunk(args):
    graph, start, xs, ring = args
    total = ring.zero
    for x in xs:
        term = walks_avoiding(graph, x, start, graph.n, ring)
        total = ring.sub(total, term) if popcount(x) & 1 else ring.add(total, term)
    return total


def hamiltonian_count_from(graph: Graph, start: int, ring=INTEGERS, threads: int = 1):
    """Hamiltonian paths starting at ``start``.

    Sieve over X subset of N - {start}: sum of (-1)^|X| times the walks
    on n nodes from start avoiding X. Terms with start in X are zero.
    """
    n = graph.n
    if n < 1:
        raise ValueError("graph has no nodes")
    check_cap(n, HAM_CAP)
    if not 0 <= start < n:
        raise ValueError(f"start node {start} out of range")
    domain = full(n) & ~(1 << start)
    xs = list(submasks(domain))
    if threads > 1 and len(xs) >= 1024:
        chunks = [xs[i::threads] for i in range(threads)]
        with ProcessPoolExecutor(threads) as pool:
            parts = list(pool.map(_sieve_chunk, [(graph, start, c, ring) for c in chunks]))
        total = ring.zero
        for p in parts:
            total = ring.add(total, p)
    else:
        total = _sieve_chunk((graph, start, xs, ring))
    return nonnegative(total, "Hamiltonian path count")


def hamiltonian_count_total(graph: Graph, ring=INTEGERS, threads: int = 1):
    """Undirected Hamiltonian paths: each is counted once from each endpoint."""
    if graph.n < 2:
        raise ValueError("need at least two nodes")
    both_ways = ring.zero
    for s in range(graph.n):
        both_ways = ring.add(both_ways, hamiltonian_count_from(graph, s, ring, threads))
    if both_ways % 2:
        raise CorruptionError(f"directed path total {both_ways} is odd")
    return both_ways // 2
