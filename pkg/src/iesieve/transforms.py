"""Zeta and Moebius transforms over the subset lattice.

The fast versions use Yates's round structure: round ``i`` folds element
``i`` (bit ``i``) into every table entry, for i = 0 .. n-1 in that order.
"""

from __future__ import annotations

from .core import INTEGERS, SetFunction, SizeCapError, check_table, full, popcount, submasks

NAIVE_CAP = 14


def zeta_round(values, i, ring=INTEGERS):
    """One in-place Yates round adding f(S - {i}) into f(S) for every S containing i."""
    _fold(values, 1 << i, ring.add)


def mobius_round(values, i, ring=INTEGERS):
    _fold(values, 1 << i, ring.sub)


def _fold(values, bit, op):
    # blocks of 2*bit entries: upper half (bit set) combines with lower half
    step = bit << 1
    for lo in range(0, len(values), step):
        hi = lo + bit
        values[hi:hi + bit] = map(op, values[hi:hi + bit], values[lo:hi])


def zeta_inplace(values, n, ring=INTEGERS):
    check_table(n)
    for i in range(n):
        zeta_round(values, i, ring)
    return values


def mobius_inplace(values, n, ring=INTEGERS):
    check_table(n)
    for i in range(n):
        mobius_round(values, i, ring)
    return values


def zeta_yates(f: SetFunction, ring=INTEGERS) -> SetFunction:
    """(f zeta)(T) = sum of f(S) over S subset of T, in O(2^n n) ring additions."""
    return SetFunction(f.n, tuple(zeta_inplace(list(f.values), f.n, ring)))


def mobius_yates(g: SetFunction, ring=INTEGERS) -> SetFunction:
    """(g mu)(T) = sum of (-1)^|T - S| g(S) over S subset of T."""
    return SetFunction(g.n, tuple(mobius_inplace(list(g.values), g.n, ring)))


def yates_rounds(f: SetFunction, ring=INTEGERS):
    """Tables g_0 = f, g_1, ..., g_n produced by the successive zeta rounds."""
    check_table(f.n)
    values = list(f.values)
    out = [SetFunction(f.n, tuple(values))]
    for i in range(f.n):
        zeta_round(values, i, ring)
        out.append(SetFunction(f.n, tuple(values)))
    return out


def _check_naive(n):
    if n > NAIVE_CAP:
        raise SizeCapError(f"naive transform limited to n <= {NAIVE_CAP}, got {n}")


def zeta_naive(f: SetFunction, ring=INTEGERS) -> SetFunction:
    _check_naive(f.n)
    out = []
    for t in range(1 << f.n):
        acc = ring.zero
        for s in submasks(t):
            acc = ring.add(acc, f.values[s])
        out.append(acc)
    return SetFunction(f.n, tuple(out))


def mobius_naive(f: SetFunction, ring=INTEGERS) -> SetFunction:
    _check_naive(f.n)
    out = []
    for t in range(1 << f.n):
        acc = ring.zero
        for s in submasks(t):
            if popcount(t ^ s) & 1:
                acc = ring.sub(acc, f.values[s])
            else:
                acc = ring.add(acc, f.values[s])
        out.append(acc)
    return SetFunction(f.n, tuple(out))


def pointwise_pow(h: SetFunction, k: int, ring=INTEGERS) -> SetFunction:
    if k < 1:
        raise ValueError("exponent must be positive")
    return SetFunction(h.n, tuple(ring.power(v, k) for v in h.values))


def pointwise_mul(a: SetFunction, b: SetFunction, ring=INTEGERS) -> SetFunction:
    if a.n != b.n:
        raise ValueError("ground sets differ")
    return SetFunction(a.n, tuple(ring.mul(x, y) for x, y in zip(a.values, b.values)))


def top(f: SetFunction):
    """Value at the full ground set."""
    return f.values[full(f.n)]
