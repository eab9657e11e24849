"""Quasi-cyclic moderate-density parity-check backend.

Secret key: sparse polynomials f, g with wt(f) = wt(g) = w/2 and g a unit,
held as sorted support lists. Public key: the dense ratio h = f * g^-1
mod x^r - 1. A ciphertext encrypts a weight-t error vector e = (e0, e1):
pick a uniform r-bit m and send c = (m + e0, m*h + e1), i.e. e added to a
random codeword of the code generated by m -> (m, m*h). The plaintext is
e itself; m is discarded.

The parity checks are the cyclic shifts of (f, g): the syndrome
f*c0 + g*c1 equals f*e0 + g*e1 because f + g*h = 0. Decoding is iterative
bit flipping: per iteration count, for every position, the unsatisfied
checks it touches, and flip the positions whose count reaches
max_count - delta (floored at a strict majority of the w/2 checks).
delta is a per-tier knob: 0 suits the toy tier, the production tiers
need 3 to converge within the 50-iteration cap. The count pass touches
every position and both whole-vector halves each iteration, so memory
access does not depend on which checks are unsatisfied.

Wire forms: keys and ciphertexts are little-endian packed bit vectors of
r and 2r bits; plaintexts and secret keys are sorted 4-byte big-endian
support indices. The public-key group is XOR on h, under which every
element is its own inverse.
"""

from __future__ import annotations

import numpy as np

from . import gf2ring
from .gf2ring import CirculantPoly, from_bytes, from_support, poly_inv, poly_mul
from .params import BackendId, QcmdpcParams
from .pke import Backend, Ciphertext, Plaintext, PublicKey, SecretKey
from .rng import RandomSource

_KEYGEN_ATTEMPTS = 128


def _pack_indices(indices) -> bytes:
    return b"".join(i.to_bytes(4, "big") for i in indices)


def _unpack_indices(data: bytes, count: int, bound: int) -> list[int]:
    if len(data) != 4 * count:
        raise ValueError("bad support encoding length")
    out = [int.from_bytes(data[4 * i: 4 * i + 4], "big") for i in range(count)]
    if any(not 0 <= v < bound for v in out) or any(a >= b for a, b in zip(out, out[1:])):
        raise ValueError("support must be sorted distinct indices in range")
    return out


def _roll_sum(bits: np.ndarray, support: list[int], sign: int) -> np.ndarray:
    acc = np.zeros(len(bits), dtype=np.uint16)
    for k in support:
        acc += np.roll(bits, sign * k)
    return acc


def _sparse_mul_bits(support: list[int], bits: np.ndarray) -> np.ndarray:
    acc = np.zeros(len(bits), dtype=np.uint8)
    for k in support:
        acc ^= np.roll(bits, k)
    return acc


class QcmdpcBackend(Backend):
    backend_id = BackendId.QCMDPC

    def __init__(self, params: QcmdpcParams):
        super().__init__(params)
        self.r = params.r
        self.pk_bytes = (params.r + 7) // 8
        self.ct_bytes = (2 * params.r + 7) // 8

    # -- parsing -------------------------------------------------------------
    def _parse_pk(self, pk: PublicKey) -> CirculantPoly:
        self._check(pk, PublicKey)
        return from_bytes(self.r, pk.body)

    def _parse_sk(self, sk: SecretKey) -> tuple[list[int], list[int]]:
        self._check(sk, SecretKey)
        half = self.params.w // 2
        if len(sk.body) != 8 * half:
            raise ValueError("bad secret key length")
        f = _unpack_indices(sk.body[: 4 * half], half, self.r)
        g = _unpack_indices(sk.body[4 * half:], half, self.r)
        return f, g

    def _parse_ct(self, ct: Ciphertext) -> tuple[np.ndarray, np.ndarray]:
        self._check(ct, Ciphertext)
        if len(ct.body) != self.ct_bytes:
            raise ValueError("bad ciphertext length")
        bits = np.unpackbits(np.frombuffer(ct.body, dtype=np.uint8),
                             bitorder="little")
        if int(bits[2 * self.r:].sum()):
            raise ValueError("spare bits set in ciphertext")
        return bits[: self.r].copy(), bits[self.r: 2 * self.r].copy()

    def _parse_pt(self, pt: Plaintext) -> list[int]:
        self._check(pt, Plaintext)
        return _unpack_indices(pt.body, self.params.t, 2 * self.r)

    def _pack_halves(self, c0: np.ndarray, c1: np.ndarray) -> bytes:
        both = np.concatenate([c0, c1])
        return np.packbits(both, bitorder="little").tobytes()

    # -- core ---------------------------------------------------------------
    def keygen(self, rng: RandomSource) -> tuple[PublicKey, SecretKey]:
        half = self.params.w // 2
        for _ in range(_KEYGEN_ATTEMPTS):
            f_supp = rng.sample_distinct(self.r, half)
            g_supp = rng.sample_distinct(self.r, half)
            g_inv = poly_inv(from_support(self.r, g_supp))
            if g_inv is None:  # unreachable for odd w/2 < r, kept for safety
                continue
            h = poly_mul(from_support(self.r, f_supp), g_inv)
            pk = PublicKey(self.backend_id, h.to_bytes())
            sk = SecretKey(self.backend_id,
                           _pack_indices(f_supp) + _pack_indices(g_supp))
            return pk, sk
        raise RuntimeError("keygen failed to draw an invertible g")

    def encrypt(self, pk: PublicKey, pt: Plaintext, rng: RandomSource) -> Ciphertext:
        h = self._parse_pk(pk)
        e_supp = self._parse_pt(pt)
        m = CirculantPoly(self.r, int.from_bytes(rng.read(self.pk_bytes), "little")
                          & ((1 << self.r) - 1))
        e0 = from_support(self.r, [i for i in e_supp if i < self.r])
        e1 = from_support(self.r, [i - self.r for i in e_supp if i >= self.r])
        c0 = m.bits ^ e0.bits
        c1 = poly_mul(m, h).bits ^ e1.bits
        body = self._pack_halves(CirculantPoly(self.r, c0).to_bitarray(),
                                 CirculantPoly(self.r, c1).to_bitarray())
        return Ciphertext(self.backend_id, body)

    def syndrome(self, sk: SecretKey, ct: Ciphertext) -> np.ndarray:
        """f*c0 + g*c1 as a bit array; zero exactly on codewords."""
        f, g = self._parse_sk(sk)
        c0, c1 = self._parse_ct(ct)
        return _sparse_mul_bits(f, c0) ^ _sparse_mul_bits(g, c1)

    def bitflip_decode(self, sk: SecretKey, ct: Ciphertext
                       ) -> tuple[np.ndarray | None, int]:
        """Recover the error vector (length-2r bit array), or None.

        Returns (error, iterations); a zero syndrome exits immediately
        with zero iterations.
        """
        p: QcmdpcParams = self.params
        f, g = self._parse_sk(sk)
        c0, c1 = self._parse_ct(ct)
        w0, w1 = c0.copy(), c1.copy()
        s = _sparse_mul_bits(f, w0) ^ _sparse_mul_bits(g, w1)
        floor = p.w // 4 + 1  # strict majority of the w/2 checks per position
        iters = 0
        while s.any():
            if iters >= p.bf_max_iter:
                return None, iters
            iters += 1
            upc0 = _roll_sum(s, f, -1)
            upc1 = _roll_sum(s, g, -1)
            threshold = max(int(max(upc0.max(), upc1.max())) - p.bf_delta, floor)
            flip0 = upc0 >= threshold
            flip1 = upc1 >= threshold
            if not (flip0.any() or flip1.any()):
                return None, iters
            w0 ^= flip0
            w1 ^= flip1
            s = _sparse_mul_bits(f, w0) ^ _sparse_mul_bits(g, w1)
        return np.concatenate([c0 ^ w0, c1 ^ w1]), iters

    def decrypt(self, sk: SecretKey, ct: Ciphertext) -> Plaintext | None:
        try:
            err, _ = self.bitflip_decode(sk, ct)
        except ValueError:
            return None
        if err is None or int(err.sum()) != self.params.t:
            return None
        support = np.nonzero(err)[0]
        return Plaintext(self.backend_id, _pack_indices(int(i) for i in support))

    # -- public-key group (XOR on h) -----------------------------------------
    def pk_op(self, a: PublicKey, b: PublicKey) -> PublicKey:
        pa, pb = self._parse_pk(a), self._parse_pk(b)
        return PublicKey(self.backend_id, CirculantPoly(self.r, pa.bits ^ pb.bits).to_bytes())

    def pk_inv(self, a: PublicKey) -> PublicKey:
        self._parse_pk(a)
        return a

    def pk_identity(self) -> PublicKey:
        return PublicKey(self.backend_id, gf2ring.zero(self.r).to_bytes())

    # -- sampling -------------------------------------------------------------
    @property
    def uniform_width(self) -> int:
        return self.pk_bytes

    def pk_from_uniform(self, data: bytes) -> PublicKey:
        if len(data) != self.pk_bytes:
            raise ValueError(f"need {self.pk_bytes} uniform bytes")
        bits = int.from_bytes(data, "little") & ((1 << self.r) - 1)
        return PublicKey(self.backend_id, CirculantPoly(self.r, bits).to_bytes())

    def sample_plaintext(self, rng: RandomSource) -> Plaintext:
        support = rng.sample_distinct(2 * self.r, self.params.t)
        return Plaintext(self.backend_id, _pack_indices(support))
