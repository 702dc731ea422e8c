import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from iesieve.coloring import indicator
from iesieve.core import INT128, SetFunction, SizeCapError, from_elements, full, submasks
from iesieve.gf16 import GF16
from iesieve.transforms import (
    mobius_inplace,
    mobius_naive,
    mobius_yates,
    pointwise_pow,
    top,
    yates_rounds,
    zeta_inplace,
    zeta_naive,
    zeta_yates,
)

A, B, C, D = 0, 1, 2, 3


def random_setfn(rng, n, lo=-50, hi=50):
    return SetFunction.of(n, [rng.randint(lo, hi) for _ in range(1 << n)])


def test_zeta_of_independent_set_indicator(g1):
    fz = zeta_yates(indicator(g1))
    assert top(fz) == 6
    assert fz[from_elements([A, C, D])] == 4


def test_zeta_of_delta_is_all_ones():
    for n in range(6):
        delta = SetFunction.of(n, [1] + [0] * ((1 << n) - 1))
        assert zeta_yates(delta).values == (1,) * (1 << n)


def test_mobius_of_powers_known_values(g1):
    fz = zeta_yates(indicator(g1))
    assert top(mobius_yates(pointwise_pow(fz, 2))) == 0
    assert top(mobius_yates(pointwise_pow(fz, 3))) == 18


def test_pointwise_pow_examples(g1):
    fz = zeta_yates(indicator(g1))
    assert pointwise_pow(fz, 2)[from_elements([B, D])] == 9
    assert pointwise_pow(fz, 1) == fz
    ones = SetFunction.of(3, [1] * 8)
    assert pointwise_pow(ones, 7) == ones
    with pytest.raises(ValueError):
        pointwise_pow(fz, 0)


def test_naive_on_empty_ground_set():
    f = SetFunction.of(0, [42])
    assert zeta_naive(f) == f == mobius_naive(f)


@pytest.mark.parametrize("n", range(0, 13))
def test_inversion_and_naive_agreement(n):
    rng = random.Random(n)
    for _ in range(10 if n > 8 else 25):
        f = random_setfn(rng, n)
        fz = zeta_yates(f)
        assert mobius_yates(fz) == f
        assert zeta_yates(mobius_yates(f)) == f
        if n <= 10:
            assert fz == zeta_naive(f)
            assert mobius_yates(f) == mobius_naive(f)


@pytest.mark.parametrize("n", range(4))
def test_exhaustive_small_tables(n):
    for values in itertools.product((0, 1), repeat=1 << n):
        f = SetFunction.of(n, values)
        assert zeta_yates(f) == zeta_naive(f)
        assert mobius_yates(f) == mobius_naive(f)
        assert mobius_naive(zeta_naive(f)) == f


def test_round_intermediates_follow_the_partial_sum_law():
    rng = random.Random(7)
    for n in range(1, 9):
        f = random_setfn(rng, n)
        for i, g in enumerate(yates_rounds(f)):
            # after i rounds, elements i.. (0-based) must match exactly
            fixed = full(n) & ~full(i)
            for s in range(1 << n):
                expect = sum(f.values[r] for r in submasks(s) if r & fixed == s & fixed)
                assert g.values[s] == expect


@given(st.integers(-5, 5), st.integers(-5, 5), st.randoms(use_true_random=False))
def test_linearity(a, b, rnd):
    f = random_setfn(rnd, 5)
    g = random_setfn(rnd, 5)
    combo = SetFunction.of(5, [a * x + b * y for x, y in zip(f.values, g.values)])
    zf, zg = zeta_yates(f), zeta_yates(g)
    assert zeta_yates(combo).values == tuple(a * x + b * y for x, y in zip(zf.values, zg.values))


def test_inplace_matches_out_of_place():
    rng = random.Random(3)
    f = random_setfn(rng, 9)
    assert tuple(zeta_inplace(list(f.values), 9)) == zeta_yates(f).values
    assert tuple(mobius_inplace(list(f.values), 9)) == mobius_yates(f).values


def test_gf16_ring_zeta_equals_mobius():
    rng = random.Random(11)
    for n in range(1, 8):
        f = SetFunction.of(n, [rng.randrange(1 << 16) for _ in range(1 << n)])
        z = zeta_yates(f, GF16)
        assert z == mobius_yates(f, GF16) == zeta_naive(f, GF16)
        assert mobius_yates(z, GF16) == f


def test_int128_ring_agrees_and_overflows():
    rng = random.Random(5)
    f = random_setfn(rng, 6)
    assert zeta_yates(f, INT128) == zeta_yates(f)
    huge = SetFunction.of(2, [(1 << 126)] * 4)
    with pytest.raises(OverflowError):
        zeta_yates(huge, INT128)


def test_size_caps():
    with pytest.raises(SizeCapError):
        zeta_naive(SetFunction.of(15, [0] * (1 << 15)))
