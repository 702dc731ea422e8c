"""Counting k-covers by independent sets, and the chromatic number.

g(S) is the number of nonempty independent subsets of S. The graph is
k-colourable iff sum over S of (-1)^(n-|S|) g(S)^k is positive; that sum
counts ordered k-tuples of nonempty independent sets whose union is N.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from . import transforms
from .core import (
    INTEGERS,
    Graph,
    SetFunction,
    SizeCapError,
    check_table,
    nonnegative,
    popcount,
)

POLYSPACE_CAP = 25
METHODS = ("table", "polyspace", "mobius")


@dataclass(frozen=True)
class IndepTable:
    graph: Graph
    g: SetFunction

    def __getitem__(self, mask):
        return self.g[mask]


def indep_table(graph: Graph, cap=None) -> IndepTable:
    """Tabulate g(S) = g(S - v) + g(S - N[v]) + 1 with v the lowest node of S.

    Entries whose lowest node is v depend only on entries whose lowest node
    is above v, so the table fills one lowest-node class at a time.
    """
    n = graph.n
    check_table(n, cap)
    g = np.zeros(1 << n, dtype=np.int64)
    for v in reversed(range(n)):
        bit = 1 << v
        s = np.arange(bit, 1 << n, bit << 1, dtype=np.int64)
        g[s] = g[s ^ bit] + g[s & ~graph.closed_nbhd(v)] + 1
    return IndepTable(graph, SetFunction(n, tuple(g.tolist())))


@njit(cache=False)
def _count_independent_subsets(adj, s):
    count = 0
    t = s
    while t:
        ok = True
        for v in range(adj.shape[0]):
            if (t >> v) & 1 and adj[v] & t:
                ok = False
                break
        if ok:
            count += 1
        t = (t - 1) & s
    return count


def _adj_array(graph):
    return np.array(graph.adj, dtype=np.int64) if graph.n else np.zeros(0, dtype=np.int64)


def indep_count_polyspace(graph: Graph, s: int, _adj=None) -> int:
    """g(s) by testing every nonempty subset of s for independence."""
    if popcount(s) > POLYSPACE_CAP:
        raise SizeCapError(f"|s|={popcount(s)} exceeds polyspace cap {POLYSPACE_CAP}")
    if s == 0:
        return 0
    adj = _adj_array(graph) if _adj is None else _adj
    return int(_count_independent_subsets(adj, s))


def indicator(graph: Graph) -> SetFunction:
    """f(S) = 1 iff S is a nonempty independent set."""
    n = graph.n
    check_table(n)
    ok = np.ones(1 << n, dtype=bool)
    ok[0] = False
    masks = np.arange(1 << n, dtype=np.int64)
    for v in range(n):
        ok &= ((masks >> v) & 1 == 0) | (masks & graph.adj[v] == 0)
    return SetFunction(n, tuple(ok.astype(np.int64).tolist()))


def _signed_power_sum(values, n, k):
    """sum over S of (-1)^(n-|S|) values[S]^k, exact."""
    total = 0
    for s, x in enumerate(values):
        if x:
            term = x ** k
            total += -term if (n - popcount(s)) & 1 else term
    return total


def cover_count(graph: Graph, k: int, method: str = "table", table: IndepTable | None = None) -> int:
    """Ordered k-tuples of nonempty independent sets whose union is every node.

    Positive iff the graph is k-colourable. This is not the number of proper
    colourings: a tuple may cover a node more than once.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = graph.n
    if method == "table":
        table = table or indep_table(graph)
        total = _signed_power_sum(table.g.values, n, k)
    elif method == "polyspace":
        if n > POLYSPACE_CAP:
            raise SizeCapError(f"n={n} exceeds polyspace cap {POLYSPACE_CAP}")
        adj = _adj_array(graph)
        total = 0
        for s in range(1 << n):
            x = indep_count_polyspace(graph, s, adj)
            if x:
                term = x ** k
                total += -term if (n - popcount(s)) & 1 else term
    elif method == "mobius":
        total = transforms.top(cover_table(graph, k))
    else:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    return nonnegative(total, "cover count")


def cover_table(graph: Graph, k: int, ring=INTEGERS) -> SetFunction:
    """Per S, the number of ordered k-tuples of nonempty independent sets with union S."""
    if k < 1:
        raise ValueError("k must be positive")
    f = indicator(graph)
    h = transforms.pointwise_pow(transforms.zeta_yates(f, ring), k, ring)
    return transforms.mobius_yates(h, ring)


def chromatic_number(graph: Graph) -> int:
    n = graph.n
    if n == 0:
        return 0
    table = indep_table(graph)
    g = table.g.values
    signs = [-1 if (n - popcount(s)) & 1 else 1 for s in range(1 << n)]
    power = list(g)
    for k in range(1, n + 1):
        if k > 1:
            power = [p * x for p, x in zip(power, g)]
        if sum(map(int.__mul__, power, signs)) > 0:
            return k
    raise AssertionError("every graph on n nodes is n-colourable")
