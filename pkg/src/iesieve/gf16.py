"""Arithmetic in GF(2^16) = GF(2)[x] / (x^16 + x^5 + x^3 + x + 1).

Elements are ints in 0..65535. Scalar multiplication is carry-less
multiply plus reduction; the log/exp tables back the numpy vector path.
"""

import numpy as np

MODULUS = 0x1002B
DEGREE = 16
ORDER = (1 << DEGREE) - 1  # size of the multiplicative group


def clmul(a, b):
    """Carry-less product of two GF(2) polynomials given as ints."""
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        b >>= 1
    return result


def poly_mod(a, m):
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def is_irreducible(m):
    """True if m has no factor of degree 1 .. deg(m)//2 over GF(2)."""
    deg = m.bit_length() - 1
    for d in range(1, deg // 2 + 1):
        for low in range(1 << d):
            if poly_mod(m, (1 << d) | low) == 0:
                return False
    return True


if not is_irreducible(MODULUS):
    raise RuntimeError(f"field modulus {MODULUS:#x} is reducible")


# reduction is linear: (hi * x^16 + lo) mod m = lo ^ (hi * x^16 mod m)
_REDUCE = [poly_mod(hi << DEGREE, MODULUS) for hi in range(1 << (DEGREE - 1))]


# carry-less products of byte pairs, index (x << 8) | y
_CL8 = [clmul(x, y) for x in range(256) for y in range(256)]


def gf_mul(a, b):
    ah, al, bh, bl = a >> 8, a & 0xFF, b >> 8, b & 0xFF
    p = (
        _CL8[ah << 8 | bh] << 16
        ^ (_CL8[ah << 8 | bl] ^ _CL8[al << 8 | bh]) << 8
        ^ _CL8[al << 8 | bl]
    )
    return (p & 0xFFFF) ^ _REDUCE[p >> DEGREE]


def gf_pow(a, e):
    result = 1
    while e:
        if e & 1:
            result = gf_mul(result, a)
        a = gf_mul(a, a)
        e >>= 1
    return result


def gf_inv(a):
    if a == 0:
        raise ZeroDivisionError("0 has no inverse in GF(2^16)")
    return gf_pow(a, (1 << DEGREE) - 2)


def _find_generator():
    primes = (3, 5, 17, 257)  # 65535 = 3 * 5 * 17 * 257
    for g in range(2, 1 << DEGREE):
        if all(gf_pow(g, ORDER // p) != 1 for p in primes):
            return g
    raise RuntimeError("no generator found")


GENERATOR = _find_generator()

_ZERO_LOG = 2 * ORDER  # sentinel log for 0; any sum involving it lands in the zero tail
EXP = np.zeros(2 * _ZERO_LOG + 1, dtype=np.uint16)
LOG = np.zeros(1 << DEGREE, dtype=np.int32)


def _build_tables():
    x = 1
    for i in range(ORDER):
        EXP[i] = x
        EXP[i + ORDER] = x
        LOG[x] = i
        x = gf_mul(x, GENERATOR)
    if x != 1:
        raise RuntimeError("generator order mismatch")
    LOG[0] = _ZERO_LOG


_build_tables()


def vmul(a, b):
    """Elementwise product of uint16 arrays (or array and scalar)."""
    return EXP[LOG[a] + LOG[b]]


def vscale(a, log_c):
    """Multiply array ``a`` by the element whose log is ``log_c`` (use LOG[c])."""
    return EXP[LOG[a] + log_c]


class GF16Ring:
    """Ring interface over GF(2^16); addition and subtraction are both XOR."""

    name = "gf16"
    zero = 0
    one = 1

    @staticmethod
    def add(a, b):
        return a ^ b

    sub = add

    @staticmethod
    def mul(a, b):
        return gf_mul(a, b)

    @staticmethod
    def neg(a):
        return a

    @staticmethod
    def power(a, k):
        return gf_pow(a, k)

    @staticmethod
    def coerce(a):
        a = int(a)
        if not 0 <= a <= 0xFFFF:
            raise ValueError(f"{a} is not a GF(2^16) element")
        return a


GF16 = GF16Ring()
