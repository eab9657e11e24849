"""ristretto255: a prime-order group over edwards25519.

Pure-Python implementation of the standard wire profile: canonical 32-byte
element encodings, 32-byte little-endian scalars mod the group order, and
the one-way map from 64 uniform bytes. Points are kept in extended Edwards
coordinates (X, Y, Z, T) with x*y = T/Z on the curve -x^2 + y^2 = 1 + d x^2 y^2.

This is arithmetic on Python ints; it makes no constant-time claims.
"""

from __future__ import annotations

P = 2**255 - 19
ORDER = 2**252 + 27742317777372353535851937790883648493  # prime group order

D = (-121665 * pow(121666, P - 2, P)) % P

ELEMENT_SIZE = 32
SCALAR_SIZE = 32
UNIFORM_SIZE = 64


def _is_neg(x: int) -> bool:
    return x & 1 == 1


def _abs(x: int) -> int:
    return P - x if _is_neg(x) else x


# sqrt(-1): 2 is a non-residue mod P (P = 5 mod 8), so 2^((P-1)/4) squares
# to -1; the even root is the canonical one.
SQRT_M1 = _abs(pow(2, (P - 1) // 4, P))


def _sqrt_ratio_m1(u: int, v: int) -> tuple[bool, int]:
    """(was_square, r): r = sqrt(u/v) if u/v is square, else sqrt(i*u/v)."""
    v3 = v * v % P * v % P
    v7 = v3 * v3 % P * v % P
    r = u * v3 % P * pow(u * v7 % P, (P - 5) // 8, P) % P
    check = v * r % P * r % P
    u = u % P
    correct = check == u
    flipped = check == P - u
    flipped_i = check == (P - u) * SQRT_M1 % P
    if flipped or flipped_i:
        r = r * SQRT_M1 % P
    return correct or flipped, _abs(r)


INVSQRT_A_MINUS_D = _sqrt_ratio_m1(1, (-1 - D) % P)[1]
ONE_MINUS_D_SQ = (1 - D * D) % P
D_MINUS_ONE_SQ = (D - 1) * (D - 1) % P
SQRT_AD_MINUS_ONE = _sqrt_ratio_m1((-D - 1) % P, 1)[1]

Point = tuple[int, int, int, int]

IDENTITY: Point = (0, 1, 1, 0)

_BASE_Y = 4 * pow(5, P - 2, P) % P
_BASE_X = _abs(_sqrt_ratio_m1((_BASE_Y * _BASE_Y - 1) % P,
                              (D * _BASE_Y * _BASE_Y + 1) % P)[1])
BASE: Point = (_BASE_X, _BASE_Y, 1, _BASE_X * _BASE_Y % P)


def add(p: Point, q: Point) -> Point:
    x1, y1, z1, t1 = p
    x2, y2, z2, t2 = q
    a = (y1 - x1) * (y2 - x2) % P
    b = (y1 + x1) * (y2 + x2) % P
    c = t1 * 2 % P * D % P * t2 % P
    d = z1 * 2 % P * z2 % P
    e, f, g, h = (b - a) % P, (d - c) % P, (d + c) % P, (b + a) % P
    return (e * f % P, g * h % P, f * g % P, e * h % P)


def double(p: Point) -> Point:
    x1, y1, z1, _ = p
    a = x1 * x1 % P
    b = y1 * y1 % P
    c = 2 * z1 * z1 % P
    h = (a + b) % P
    e = (h - (x1 + y1) * (x1 + y1)) % P
    g = (a - b) % P
    f = (c + g) % P
    return (e * f % P, g * h % P, f * g % P, e * h % P)


def neg(p: Point) -> Point:
    x, y, z, t = p
    return ((-x) % P, y, z, (-t) % P)


def scalar_mul(k: int, p: Point) -> Point:
    k %= ORDER
    acc = IDENTITY
    while k:
        if k & 1:
            acc = add(acc, p)
        p = double(p)
        k >>= 1
    return acc


def encode(p: Point) -> bytes:
    x, y, z, t = p
    u1 = (z + y) * (z - y) % P
    u2 = x * y % P
    _, invsqrt = _sqrt_ratio_m1(1, u1 * u2 % P * u2 % P)
    den1 = invsqrt * u1 % P
    den2 = invsqrt * u2 % P
    z_inv = den1 * den2 % P * t % P
    if _is_neg(t * z_inv % P):
        x, y = y * SQRT_M1 % P, x * SQRT_M1 % P
        den_inv = den1 * INVSQRT_A_MINUS_D % P
    else:
        den_inv = den2
    if _is_neg(x * z_inv % P):
        y = (-y) % P
    s = _abs(den_inv * ((z - y) % P) % P)
    return s.to_bytes(32, "little")


def decode(buf: bytes) -> Point:
    """Canonical decode; raises ValueError on any non-canonical encoding."""
    if len(buf) != 32:
        raise ValueError("element must be 32 bytes")
    s = int.from_bytes(buf, "little")
    if s >= P or _is_neg(s):
        raise ValueError("non-canonical element encoding")
    ss = s * s % P
    u1 = (1 - ss) % P
    u2 = (1 + ss) % P
    u2_sqr = u2 * u2 % P
    v = (-(D * u1 % P * u1) - u2_sqr) % P
    was_square, invsqrt = _sqrt_ratio_m1(1, v * u2_sqr % P)
    den_x = invsqrt * u2 % P
    den_y = invsqrt * den_x % P * v % P
    x = _abs(2 * s % P * den_x % P)
    y = u1 * den_y % P
    t = x * y % P
    if not was_square or _is_neg(t) or y == 0:
        raise ValueError("invalid element encoding")
    return (x, y, 1, t)


def _map(r0: int) -> Point:
    r = SQRT_M1 * r0 % P * r0 % P
    u = (r + 1) * ONE_MINUS_D_SQ % P
    v = (-1 - r * D) % P * ((r + D) % P) % P
    was_square, s = _sqrt_ratio_m1(u, v)
    if was_square:
        c = (-1) % P
    else:
        s = (-_abs(s * r0 % P)) % P
        c = r
    n = (c * ((r - 1) % P) % P * D_MINUS_ONE_SQ - v) % P
    w0 = 2 * s % P * v % P
    w1 = n * SQRT_AD_MINUS_ONE % P
    w2 = (1 - s * s) % P
    w3 = (1 + s * s) % P
    return (w0 * w3 % P, w2 * w1 % P, w1 * w3 % P, w0 * w2 % P)


def from_uniform(data: bytes) -> Point:
    """One-way map from 64 uniform bytes; output dlog is unknown to all."""
    if len(data) != UNIFORM_SIZE:
        raise ValueError(f"need {UNIFORM_SIZE} uniform bytes")
    r0 = int.from_bytes(data[:32], "little") & ((1 << 255) - 1)
    r1 = int.from_bytes(data[32:], "little") & ((1 << 255) - 1)
    return add(_map(r0 % P), _map(r1 % P))


def equals(p: Point, q: Point) -> bool:
    x1, y1, _, _ = p
    x2, y2, _, _ = q
    return (x1 * y2 - y1 * x2) % P == 0 or (y1 * y2 - x1 * x2) % P == 0
