"""Perfect matchings: Ryser's permanent formula and the general-graph sieve."""

from __future__ import annotations

import math

from .core import INTEGERS, Graph, Matrix01, check_cap, nonnegative, popcount, ring_prod

PERMANENT_CAP = 30
PM_CAP = 30


def permanent_ryser(a: Matrix01, ring=INTEGERS) -> int:
    """sum over column sets S of (-1)^(n-|S|) * prod_i (row sum of row i over S)."""
    n = a.n
    check_cap(n, PERMANENT_CAP)
    rows = [sum(bit << j for j, bit in enumerate(r)) for r in a.rows]
    total = ring.zero
    for s in range(1 << n):
        term = ring_prod(ring, (popcount(r & s) for r in rows))
        total = ring.sub(total, term) if (n - popcount(s)) & 1 else ring.add(total, term)
    return nonnegative(total, "permanent")


def permanent_ryser_gray(a: Matrix01, ring=INTEGERS) -> int:
    """Ryser's formula over column sets in reflected-binary Gray order.

    Each step toggles one column, updates the affected row sums, and
    recomputes the product; the sign flips on every step.
    """
    n = a.n
    check_cap(n, PERMANENT_CAP)
    if n == 0:
        return ring.one
    cols = [[i for i in range(n) if a.rows[i][j]] for j in range(n)]
    sums = [0] * n
    zeros = n  # rows whose current sum is 0
    s = 0
    odd = n & 1  # parity of |N - S|, starting from S = {}
    total = ring.zero
    prod = math.prod if ring is INTEGERS else (lambda xs: ring_prod(ring, xs))
    for t in range(1, 1 << n):
        j = (t & -t).bit_length() - 1
        bit = 1 << j
        s ^= bit
        delta = 1 if s & bit else -1
        for i in cols[j]:
            before = sums[i]
            sums[i] = before + delta
            if before == 0:
                zeros -= 1
            elif sums[i] == 0:
                zeros += 1
        odd ^= 1
        if zeros == 0:
            term = prod(sums)
            total = ring.sub(total, term) if odd else ring.add(total, term)
    return nonnegative(total, "permanent")


def pm_count_general(graph: Graph, trace=None) -> int:
    """Number of perfect matchings: sum over S of (-1)^(n-|S|) C(e[S], n/2).

    e[S] is maintained incrementally while S walks the subsets in Gray
    order. ``trace(S, e[S], signed_term)`` is called for every subset when given.
    """
    n = graph.n
    check_cap(n, PM_CAP)
    if n == 0:
        if trace:
            trace(0, 0, 1)
        return 1
    if n & 1:
        return 0
    half = n // 2
    binom = [math.comb(e, half) for e in range(graph.m + 1)]
    s = 0
    e = 0
    odd = n & 1

    def emit():
        term = -binom[e] if odd else binom[e]
        if trace:
            trace(s, e, term)
        return term

    total = emit()
    for t in range(1, 1 << n):
        v = (t & -t).bit_length() - 1
        bit = 1 << v
        if s & bit:
            s ^= bit
            e -= popcount(graph.adj[v] & s)
        else:
            e += popcount(graph.adj[v] & s)
            s ^= bit
        odd ^= 1
        total += emit()
    return nonnegative(total, "perfect matching count")


def bipartite_graph(a: Matrix01) -> Graph:
    """2n-node graph: row i is node i, column j is node n + j."""
    n = a.n
    return Graph.from_edges(2 * n, [(i, n + j) for i in range(n) for j in range(n) if a.rows[i][j]])

