"""Randomness sources.

Every randomized operation in this package takes an explicit random source,
so a run is fully reproducible from a seed. The seeded source is a ChaCha20
keystream; the default source reads the OS CSPRNG.
"""

from __future__ import annotations

import hashlib
import os

from cryptography.hazmat.primitives.ciphers import Cipher, algorithms

_CHUNK = 1 << 16


class RandomSource:
    """Byte-stream randomness interface."""

    def read(self, n: int) -> bytes:
        raise NotImplementedError

    def randbelow(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection sampling."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        nbytes = (bound.bit_length() + 7) // 8 + 1
        limit = (256**nbytes // bound) * bound
        while True:
            x = int.from_bytes(self.read(nbytes), "big")
            if x < limit:
                return x % bound

    def sample_distinct(self, population: int, count: int) -> list[int]:
        """count distinct uniform indices in [0, population), sorted."""
        if count > population:
            raise ValueError("count exceeds population")
        chosen: set[int] = set()
        while len(chosen) < count:
            chosen.add(self.randbelow(population))
        return sorted(chosen)


class SystemRandomSource(RandomSource):
    def read(self, n: int) -> bytes:
        return os.urandom(n)


class SeededRandomSource(RandomSource):
    """Deterministic stream: ChaCha20 keystream under a seed-derived key."""

    def __init__(self, seed: bytes | str | int):
        if isinstance(seed, int):
            seed = seed.to_bytes(16, "big", signed=False)
        elif isinstance(seed, str):
            seed = seed.encode()
        key = hashlib.sha256(b"otframe-drbg" + seed).digest()
        cipher = Cipher(algorithms.ChaCha20(key, bytes(16)), mode=None)
        self._enc = cipher.encryptor()
        self._buf = b""

    def read(self, n: int) -> bytes:
        while len(self._buf) < n:
            self._buf += self._enc.update(bytes(max(_CHUNK, n)))
        out, self._buf = self._buf[:n], self._buf[n:]
        return out


def derive_source(seed: bytes | str | int | None, role: str) -> RandomSource:
    """Per-role source: independent streams for the two protocol roles."""
    if seed is None:
        return SystemRandomSource()
    if isinstance(seed, int):
        seed = seed.to_bytes(16, "big", signed=False)
    elif isinstance(seed, str):
        seed = seed.encode()
    return SeededRandomSource(seed + b"/" + role.encode())
