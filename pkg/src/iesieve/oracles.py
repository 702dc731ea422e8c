"""Brute-force reference implementations for differential testing.

Everything here enumerates the objects being counted directly. Nothing
here may call into the sieve modules.
"""

from __future__ import annotations

import math
from itertools import combinations, permutations, product

from .core import Graph, Matrix01, SizeCapError, elements, full, popcount


def _cap(value, cap, what):
    if value > cap:
        raise SizeCapError(f"oracle {what}: size {value} exceeds cap {cap}")


def _independent(graph, mask):
    nodes = list(elements(mask))
    return all(not graph.adj[u] >> v & 1 for u, v in combinations(nodes, 2))


def brute_indep_count(graph: Graph, s: int) -> int:
    _cap(popcount(s), 16, "indep count")
    return sum(1 for t in range(1, 1 << graph.n) if t & ~s == 0 and _independent(graph, t))


def brute_indep_table(graph: Graph):
    _cap(graph.n, 12, "indep table")
    return [brute_indep_count(graph, s) for s in range(1 << graph.n)]


def brute_cover_count(graph: Graph, k: int, cap_n=5, cap_k=3) -> int:
    """Ordered k-tuples of nonempty independent sets whose union is all nodes."""
    _cap(graph.n, cap_n, "cover count n")
    _cap(k, cap_k, "cover count k")
    indep = [t for t in range(1, 1 << graph.n) if _independent(graph, t)]
    everything = full(graph.n)
    count = 0
    for choice in product(indep, repeat=k):
        union = 0
        for t in choice:
            union |= t
        if union == everything:
            count += 1
    return count


def brute_cover_table(graph: Graph, k: int):
    """Per subset S, ordered k-tuples of nonempty independent sets with union exactly S."""
    _cap(graph.n, 5, "cover table n")
    _cap(k, 3, "cover table k")
    indep = [t for t in range(1, 1 << graph.n) if _independent(graph, t)]
    table = [0] * (1 << graph.n)
    for choice in product(indep, repeat=k):
        union = 0
        for t in choice:
            union |= t
        table[union] += 1
    return table


def brute_colorable(graph: Graph, k: int) -> bool:
    _cap(graph.n, 8, "colourability")
    edges = graph.edges()
    return any(all(c[u] != c[v] for u, v in edges) for c in product(range(k), repeat=graph.n))


def brute_chromatic(graph: Graph) -> int:
    _cap(graph.n, 8, "chromatic number")
    k = 0
    while not brute_colorable(graph, k):
        k += 1
    return k


def brute_permanent(a: Matrix01) -> int:
    _cap(a.n, 8, "permanent")
    return sum(math.prod(a.rows[i][p[i]] for i in range(a.n)) for p in permutations(range(a.n)))


def brute_pm_count(graph: Graph) -> int:
    """Sets of n/2 edges covering every node."""
    _cap(graph.n, 10, "perfect matchings")
    n = graph.n
    if n % 2:
        return 0
    everything = full(n)
    count = 0
    for chosen in combinations(graph.edges(), n // 2):
        covered = 0
        for u, v in chosen:
            covered |= 1 << u | 1 << v
        if covered == everything:
            count += 1
    return count


def brute_ham_count(graph: Graph, start: int) -> int:
    """Orderings of all nodes beginning at ``start`` with consecutive nodes adjacent."""
    _cap(graph.n, 8, "Hamiltonian paths")
    rest = [v for v in range(graph.n) if v != start]
    count = 0
    for order in permutations(rest):
        path = (start,) + order
        if all(graph.adj[path[i]] >> path[i + 1] & 1 for i in range(len(path) - 1)):
            count += 1
    return count


def brute_walks(graph: Graph, x: int, start: int, length: int) -> int:
    """Sequences of ``length`` nodes from ``start``, consecutive ones adjacent, none in x."""
    _cap(length, 10, "walk length")
    allowed = [v for v in range(graph.n) if not x >> v & 1]
    if start not in allowed:
        return 0
    count = 0
    for tail in product(allowed, repeat=length - 1):
        walk = (start,) + tail
        if all(graph.adj[walk[i]] >> walk[i + 1] & 1 for i in range(length - 1)):
            count += 1
    return count


def _connected(graph, mask):
    if mask == 0:
        return False
    seen = frontier = mask & -mask
    while frontier:
        nxt = 0
        for u in elements(frontier):
            nxt |= graph.adj[u] & mask
        frontier = nxt & ~seen
        seen |= frontier
    return seen == mask


def brute_steiner(graph: Graph, terminals: int):
    """Fewest nodes over connected node sets containing the terminals; None if there are none."""
    _cap(graph.n, 8, "Steiner tree")
    best = None
    for mask in range(1 << graph.n):
        if terminals & ~mask == 0 and _connected(graph, mask):
            size = popcount(mask)
            if best is None or size < best:
                best = size
    return best


def brute_kpath(graph: Graph, k: int) -> bool:
    """Whether a simple path on k distinct nodes exists, by depth-first search."""
    _cap(graph.n, 10, "k-path")

    def extend(v, used, length):
        if length == k:
            return True
        return any(extend(u, used | 1 << u, length + 1) for u in elements(graph.adj[v] & ~used))

    return any(extend(v, 1 << v, 1) for v in range(graph.n))


def willow_recursive(graph: Graph, x: int, size: int, root: int) -> int:
    """The willow recurrence evaluated top-down with no tables."""
    if x >> root & 1:
        return 0
    if size == 1:
        return 1
    total = 0
    for v in elements(graph.adj[root] & ~x):
        for i in range(1, size):
            total += willow_recursive(graph, x, i, root) * willow_recursive(graph, x, size - i, v)
    return total
