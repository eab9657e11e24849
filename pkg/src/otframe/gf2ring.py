"""Arithmetic in GF(2)[x]/(x^r - 1) for circulant-code keys.

Polynomials are nonnegative Python ints: bit i is the coefficient of x^i.
Byte serialization is little-endian (byte 0 holds coefficients 0..7), so
int.to_bytes(..., "little") and numpy's bitorder="little" agree.

Dense products go through a real FFT (exact here: convolution coefficients
are bounded by r < 2^16, far inside float64's integer range), sparse ones
through cyclic shift-and-xor over the lighter support. Inversion uses the
unit-group exponent: for invertible g, g^-1 = g^(2^(r-1) - 2), computed
with an addition chain whose repeated squarings collapse into single index
permutations i -> 2^k * i mod r (squaring permutes coefficients when r is
odd). When r is prime and 2 is primitive mod r, x^r - 1 factors as
(x + 1) * Phi with Phi irreducible, so g is invertible exactly when
wt(g) is odd and g is not the all-ones polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.fft as _fft

_SPARSE_LIMIT = 600  # below this weight, shift-xor beats the FFT


@dataclass(frozen=True)
class CirculantPoly:
    r: int
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.r:
            raise ValueError("coefficients out of range for x^r - 1")

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> list[int]:
        out = []
        x = self.bits
        while x:
            lsb = x & -x
            out.append(lsb.bit_length() - 1)
            x ^= lsb
        return out

    def to_bytes(self) -> bytes:
        return self.bits.to_bytes((self.r + 7) // 8, "little")

    def to_bitarray(self) -> np.ndarray:
        raw = np.frombuffer(self.to_bytes(), dtype=np.uint8)
        return np.unpackbits(raw, bitorder="little")[: self.r]


def zero(r: int) -> CirculantPoly:
    return CirculantPoly(r, 0)


def one(r: int) -> CirculantPoly:
    return CirculantPoly(r, 1)


def monomial(r: int, k: int) -> CirculantPoly:
    return CirculantPoly(r, 1 << (k % r))


def all_ones(r: int) -> CirculantPoly:
    return CirculantPoly(r, (1 << r) - 1)


def from_support(r: int, indices) -> CirculantPoly:
    bits = 0
    for i in indices:
        if not 0 <= i < r:
            raise ValueError("support index out of range")
        if bits >> i & 1:
            raise ValueError("repeated support index")
        bits |= 1 << i
    return CirculantPoly(r, bits)


def from_bytes(r: int, data: bytes) -> CirculantPoly:
    if len(data) != (r + 7) // 8:
        raise ValueError("bad encoded length")
    bits = int.from_bytes(data, "little")
    if bits >> r:
        raise ValueError("spare bits set in encoding")
    return CirculantPoly(r, bits)


def from_bitarray(r: int, arr: np.ndarray) -> CirculantPoly:
    data = np.packbits(arr.astype(np.uint8), bitorder="little").tobytes()
    return CirculantPoly(r, int.from_bytes(data, "little"))


def cyclic_shift(bits: int, k: int, r: int) -> int:
    k %= r
    mask = (1 << r) - 1
    return ((bits << k) | (bits >> (r - k))) & mask if k else bits


def _mul_sparse(a_support: list[int], b_bits: int, r: int) -> int:
    acc = 0
    for k in a_support:
        acc ^= cyclic_shift(b_bits, k, r)
    return acc


def _mul_fft(a: CirculantPoly, b: CirculantPoly) -> CirculantPoly:
    r = a.r
    n = _fft.next_fast_len(2 * r - 1, real=True)
    fa = _fft.rfft(a.to_bitarray().astype(np.float64), n)
    fb = _fft.rfft(b.to_bitarray().astype(np.float64), n)
    conv = _fft.irfft(fa * fb, n)[: 2 * r - 1]
    coeffs = np.rint(conv).astype(np.int64)
    folded = coeffs[:r].copy()
    folded[: r - 1] += coeffs[r:]
    return from_bitarray(r, (folded & 1).astype(np.uint8))


def poly_mul(a: CirculantPoly, b: CirculantPoly) -> CirculantPoly:
    if a.r != b.r:
        raise ValueError("mismatched ring size")
    wa, wb = a.weight, b.weight
    if min(wa, wb) > _SPARSE_LIMIT:
        return _mul_fft(a, b)
    if wa > wb:
        a, b = b, a
    return CirculantPoly(a.r, _mul_sparse(a.support(), b.bits, a.r))


def _pow2k_perm(r: int, k: int) -> np.ndarray:
    return (np.arange(r, dtype=np.int64) * pow(2, k, r)) % r


def poly_pow2k(a: CirculantPoly, k: int) -> CirculantPoly:
    """a^(2^k): the coefficient permutation i -> 2^k * i mod r."""
    src = a.to_bitarray()
    out = np.zeros(a.r, dtype=np.uint8)
    out[_pow2k_perm(a.r, k)] = src
    return from_bitarray(a.r, out)


def poly_inv(g: CirculantPoly) -> CirculantPoly | None:
    """Inverse mod x^r - 1, or None when gcd(g, x^r - 1) != 1.

    Requires 2 primitive mod r (enforced by parameter validation), under
    which the non-units of weight < r are exactly the even-weight
    polynomials and the all-ones polynomial.
    """
    r = g.r
    if g.weight % 2 == 0 or g.bits == (1 << r) - 1:
        return None
    if g.bits == 1:
        return g
    # addition chain for the exponent 2^(r-1) - 2 = 2 * (2^(r-2) - 1):
    # maintain beta = g^(2^m - 1) while scanning the bits of r - 2.
    m_bits = bin(r - 2)[2:]
    beta = g
    m = 1
    for bit in m_bits[1:]:
        beta = poly_mul(poly_pow2k(beta, m), beta)
        m *= 2
        if bit == "1":
            beta = poly_mul(poly_pow2k(beta, 1), g)
            m += 1
    inv = poly_pow2k(beta, 1)
    # multiply-back check guards the FFT path against any rounding surprise
    if poly_mul(g, inv).bits != 1:
        raise ArithmeticError("inversion self-check failed")
    return inv
