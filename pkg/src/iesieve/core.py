"""Bitmask subsets, graphs, matrices, set functions and the generic sieves.

Subsets of a ground set {0, ..., n-1} are plain Python ints used as
bitmasks; bit ``i`` set means element ``i`` is present.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

MAX_GROUND = 63
TABLE_CAP = 26  # default cap on n for operations that store 2^n entries


class SizeCapError(ValueError):
    """Input exceeds the size cap of the requested operation."""


class ParseError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class CorruptionError(RuntimeError):
    """A sieve produced a value that cannot be right (negative count, odd total, ...)."""


def check_cap(n, cap, what="n"):
    if n > cap:
        raise SizeCapError(f"{what}={n} exceeds cap {cap}")


def check_table(n, cap=None):
    check_cap(n, TABLE_CAP if cap is None else cap, "table size n")


# ---------------------------------------------------------------- subsets

def full(n: int) -> int:
    return (1 << n) - 1


def popcount(mask: int) -> int:
    return mask.bit_count()


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def elements(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_elements(items: Iterable[int]) -> int:
    mask = 0
    for i in items:
        mask |= 1 << i
    return mask


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask``, including ``mask`` itself and 0 (descending)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class BitSubset:
    """A subset with its ground-set size attached, for validated interfaces."""

    mask: int
    n: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_GROUND:
            raise ValueError(f"ground set size {self.n} outside 0..{MAX_GROUND}")
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"mask {self.mask:#x} has bits outside ground set of size {self.n}")

    def __len__(self):
        return popcount(self.mask)

    def __iter__(self):
        return elements(self.mask)

    def __contains__(self, i):
        return bool(self.mask >> i & 1)

    def __le__(self, other):
        return is_subset(self.mask, other.mask)

    def __xor__(self, other):
        return BitSubset(self.mask ^ other.mask, self.n)

    def subsets(self):
        for sub in submasks(self.mask):
            yield BitSubset(sub, self.n)


# ---------------------------------------------------------------- rings

class IntegerRing:
    """Exact integers (the default counting ring)."""

    name = "int"
    zero = 0
    one = 1
    add = staticmethod(operator.add)
    sub = staticmethod(operator.sub)
    mul = staticmethod(operator.mul)

    def neg(self, a):
        return -a

    def power(self, a, k):
        return a ** k

    def coerce(self, a):
        return int(a)


class Int128Ring(IntegerRing):
    """Signed 128-bit integers; any result outside the range raises OverflowError."""

    name = "int128"
    LO = -(1 << 127)
    HI = (1 << 127) - 1

    def _check(self, x):
        if not self.LO <= x <= self.HI:
            raise OverflowError("128-bit counting ring overflow")
        return x

    def add(self, a, b):
        return self._check(a + b)

    def sub(self, a, b):
        return self._check(a - b)

    def mul(self, a, b):
        return self._check(a * b)

    def neg(self, a):
        return self._check(-a)

    def power(self, a, k):
        result = 1
        for _ in range(k):
            result = self.mul(result, a)
        return result

    def coerce(self, a):
        return self._check(int(a))


INTEGERS = IntegerRing()
INT128 = Int128Ring()


def ring_prod(ring, values):
    result = ring.one
    for v in values:
        result = ring.mul(result, v)
    return result


# ---------------------------------------------------------------- data types

@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on nodes 0..n-1 as adjacency bitmasks."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_GROUND:
            raise ValueError(f"node count {self.n} outside 0..{MAX_GROUND}")
        if len(self.adj) != self.n:
            raise ValueError("need one adjacency row per node")
        for v, row in enumerate(self.adj):
            if row < 0 or row >> self.n:
                raise ValueError(f"row {v} has bits outside the node set")
            if row >> v & 1:
                raise ValueError(f"self-loop at node {v}")
            for u in elements(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n, edges):
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def m(self):
        return sum(popcount(row) for row in self.adj) // 2

    @property
    def nodes(self):
        return full(self.n)

    def edges(self):
        """Edges as (u, v) with u < v in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in elements(self.adj[u] >> (u + 1) << (u + 1))]

    def closed_nbhd(self, v):
        return self.adj[v] | 1 << v

    def edges_within(self, mask):
        return sum(popcount(self.adj[v] & mask) for v in elements(mask)) // 2

    def is_independent(self, mask):
        return all(self.adj[v] & mask == 0 for v in elements(mask))


@dataclass(frozen=True)
class Matrix01:
    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.n or any(len(r) != self.n for r in self.rows):
            raise ValueError("matrix must be square n x n")
        if any(x not in (0, 1) for r in self.rows for x in r):
            raise ValueError("matrix entries must be 0 or 1")

    @classmethod
    def from_rows(cls, rows):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        return cls(len(rows), rows)

    def column_masks(self):
        """Per column j, the bitmask of rows i with a[i][j] = 1."""
        return [sum(1 << i for i in range(self.n) if self.rows[i][j]) for j in range(self.n)]


@dataclass(frozen=True)
class SetFunction:
    """Dense table of 2^n values indexed by subset bitmask."""

    n: int
    values: tuple

    def __post_init__(self):
        if not 0 <= self.n <= MAX_GROUND:
            raise ValueError(f"ground set size {self.n} outside 0..{MAX_GROUND}")
        if len(self.values) != 1 << self.n:
            raise ValueError(f"expected {1 << self.n} values, got {len(self.values)}")

    @classmethod
    def of(cls, n, values):
        return cls(n, tuple(values))

    def __getitem__(self, mask):
        if isinstance(mask, BitSubset):
            if mask.n != self.n:
                raise ValueError("subset ground set differs from table ground set")
            mask = mask.mask
        return self.values[mask]

    def __len__(self):
        return len(self.values)


# ---------------------------------------------------------------- sieves

def pie_sum(r: int, t: int) -> int:
    """Sum of (-1)^|t \\ S| over all S with r <= S <= t, by direct enumeration."""
    if not is_subset(r, t):
        raise ValueError("r must be a subset of t")
    free = t & ~r
    total = 0
    for extra in submasks(free):
        total += -1 if popcount(free & ~extra) & 1 else 1
    return total


def sieve_complement_of_union(n: int, a: Callable[[int], int], domain: int | None = None) -> int:
    """Number of elements in none of A_0..A_{n-1}, given a(X) = |intersection of A_i, i in X|.

    ``domain`` restricts X to its subsets (indices outside contribute zero terms).
    """
    domain = full(n) if domain is None else domain
    total = 0
    for x in submasks(domain):
        term = a(x)
        total += -term if popcount(x) & 1 else term
    return total


def nonnegative(value, what="count"):
    if value < 0:
        raise CorruptionError(f"{what} came out negative ({value})")
    return value


# ---------------------------------------------------------------- file formats

def _content_lines(text):
    for lineno, raw in enumerate(text.replace("\r\n", "\n").split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _ints(line, lineno):
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"expected integers, got {line!r}", lineno) from None


def parse_graph(text: str) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("missing header 'n m'", 1)
    lineno, header = lines[0]
    hdr = _ints(header, lineno)
    if len(hdr) != 2 or hdr[0] < 0 or hdr[1] < 0:
        raise ParseError("header must be 'n m' with n, m >= 0", lineno)
    n, m = hdr
    if n > MAX_GROUND:
        raise SizeCapError(f"n={n} exceeds ground-set cap {MAX_GROUND}")
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} edges, found {len(body)}", body[-1][0] if body else lineno)
    adj = [0] * n
    for lineno, line in body:
        uv = _ints(line, lineno)
        if len(uv) != 2:
            raise ParseError("edge line must be 'u v'", lineno)
        u, v = uv
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"node index out of range 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"self-loop at node {u}", lineno)
        if u > v:
            raise ParseError("edge must be written 'u v' with u < v", lineno)
        if adj[u] >> v & 1:
            raise ParseError(f"duplicate edge {u} {v}", lineno)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def format_graph(g: Graph) -> str:
    edges = g.edges()
    return "".join([f"{g.n} {len(edges)}\n"] + [f"{u} {v}\n" for u, v in edges])


def parse_matrix(text: str) -> Matrix01:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("missing header 'n'", 1)
    lineno, header = lines[0]
    hdr = _ints(header, lineno)
    if len(hdr) != 1 or hdr[0] < 0:
        raise ParseError("header must be a single nonnegative 'n'", lineno)
    n = hdr[0]
    body = lines[1:]
    if len(body) != n:
        raise ParseError(f"expected {n} matrix rows, found {len(body)}", body[-1][0] if body else lineno)
    rows = []
    for lineno, line in body:
        row = _ints(line, lineno)
        if len(row) != n:
            raise ParseError(f"expected {n} entries, found {len(row)}", lineno)
        if any(x not in (0, 1) for x in row):
            raise ParseError("entries must be 0 or 1", lineno)
        rows.append(tuple(row))
    return Matrix01(n, tuple(rows))


def format_matrix(a: Matrix01) -> str:
    return "".join([f"{a.n}\n"] + [" ".join(map(str, r)) + "\n" for r in a.rows])


def parse_setfn(text: str) -> SetFunction:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("missing header 'n'", 1)
    lineno, header = lines[0]
    hdr = _ints(header, lineno)
    if len(hdr) != 1 or not 0 <= hdr[0] <= MAX_GROUND:
        raise ParseError(f"header must be a single n in 0..{MAX_GROUND}", lineno)
    n = hdr[0]
    check_table(n)
    values = []
    last = lineno
    for lineno, line in lines[1:]:
        values.extend(_ints(line, lineno))
        last = lineno
    if len(values) != 1 << n:
        raise ParseError(f"expected {1 << n} values, found {len(values)}", last)
    return SetFunction(n, tuple(values))


def format_setfn(f: SetFunction, per_line: int = 16) -> str:
    out = [f"{f.n}\n"]
    vals = f.values
    for i in range(0, len(vals), per_line):
        out.append(" ".join(str(v) for v in vals[i:i + per_line]) + "\n")
    return "".join(out)
