"""Order-101 subgroup of the integers mod 607, for exhaustive tests.

607 is prime with 607 - 1 = 6 * 101, so the 6th-power residues form a
cyclic subgroup of prime order 101. Elements encode as 2 bytes big-endian,
scalars as 1 byte. Small enough to brute-force discrete logs and to
enumerate every (message, randomness) pair, which is the whole point.
"""

from __future__ import annotations

MODULUS = 607
ORDER = 101
COFACTOR = 6
GENERATOR = 64  # = 2**6 mod 607, a 6th-power residue of order 101

ELEMENT_SIZE = 2
SCALAR_SIZE = 1
UNIFORM_SIZE = 8


def is_element(x: int) -> bool:
    return 0 < x < MODULUS and pow(x, ORDER, MODULUS) == 1


def encode(x: int) -> bytes:
    return x.to_bytes(ELEMENT_SIZE, "big")


def decode(buf: bytes) -> int:
    if len(buf) != ELEMENT_SIZE:
        raise ValueError("toy group element must be 2 bytes")
    x = int.from_bytes(buf, "big")
    if not is_element(x):
        raise ValueError("not a toy group element")
    return x


def mul(a: int, b: int) -> int:
    return a * b % MODULUS


def inv(a: int) -> int:
    return pow(a, MODULUS - 2, MODULUS)


def exp(base: int, k: int) -> int:
    return pow(base, k % ORDER, MODULUS)


def identity() -> int:
    return 1


def from_uniform(data: bytes) -> int:
    """Uniform subgroup element via the cofactor map x -> x^6.

    The map is 6-to-1 from Z*_607 onto the subgroup, so a uniform input
    gives an exactly uniform output. It is not of the form g^H(data):
    nobody learns the discrete log of the result from the input.
    """
    if len(data) != UNIFORM_SIZE:
        raise ValueError(f"need {UNIFORM_SIZE} uniform bytes")
    x = int.from_bytes(data, "big") % MODULUS
    if x == 0:  # probability 2^-55 per draw; keep the map total
        x = 1
    return pow(x, COFACTOR, MODULUS)


_DLOG = {pow(GENERATOR, i, MODULUS): i for i in range(ORDER)}


def dlog(x: int) -> int:
    """Brute-forced discrete log base GENERATOR (test oracle)."""
    return _DLOG[x]
