"""Low-noise LPN backend with a repetition-code decoder.

Key generation draws A uniform (l1 x n), T and X Bernoulli-rho
(l2 x l1 and l2 x n) and publishes pk = (A, B = T*A + X), sk = T.
Encryption of an n_msg-bit message m draws Bernoulli s, e1, e2 and sends
ct1 = A*s + e1, ct2 = B*s + e2 + G*m, where G repeats each message bit
rep times. Decryption computes y = ct2 + T*ct1 = G*m + (X*s + e2 + T*e1)
and majority-votes each rep-block; it fails when the re-encoded residual
y + G*m_hat is heavier than the tier's fail_weight (an honest residual
sits far below it, a wrong-key residual near l2/2).

Bernoulli sampling spends exactly 32 random bits per trial, comparing a
little-endian u32 against floor(rho * 2^32), so seeded runs are exactly
reproducible; sampling order is A, T, X in keygen and s, e1, e2 in
encryption. Matrix products run in float32 BLAS (sums are bounded by
l1 <= 512, far below the 2^24 exact-integer range).

Matrices serialize row-major, bit-packed little-endian within bytes,
behind a 12-byte header (rows, cols, reserved; 4-byte big-endian each).
The public-key group is entrywise XOR on (A, B).
"""

from __future__ import annotations

import struct

import numpy as np

from .params import BackendId, LpnParams
from .pke import Backend, Ciphertext, Plaintext, PublicKey, SecretKey
from .rng import RandomSource

_HEADER = struct.Struct(">III")


def bernoulli_matrix(rho_num: int, rho_den: int, shape: tuple[int, ...],
                     rng: RandomSource) -> np.ndarray:
    """I.i.d. bits, each 1 with probability exactly rho_num/rho_den
    (quantized to 32 bits: threshold floor(rho * 2^32))."""
    if not 0 <= 2 * rho_num <= rho_den:
        raise ValueError("rho must lie in [0, 1/2]")
    count = int(np.prod(shape))
    threshold = (rho_num << 32) // rho_den
    words = np.frombuffer(rng.read(4 * count), dtype="<u4")
    return (words < threshold).astype(np.uint8).reshape(shape)


def uniform_matrix(shape: tuple[int, ...], rng: RandomSource) -> np.ndarray:
    count = int(np.prod(shape))
    raw = np.frombuffer(rng.read((count + 7) // 8), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:count].reshape(shape)


def pack_matrix(m: np.ndarray) -> bytes:
    if m.ndim == 1:
        m = m.reshape(1, -1)
    rows, cols = m.shape
    return _HEADER.pack(rows, cols, 0) + np.packbits(
        m.astype(np.uint8).reshape(-1), bitorder="little").tobytes()


def unpack_matrix(data: bytes, rows: int, cols: int) -> np.ndarray:
    if len(data) != matrix_size(rows, cols):
        raise ValueError("bad matrix encoding length")
    hrows, hcols, reserved = _HEADER.unpack(data[:12])
    if (hrows, hcols, reserved) != (rows, cols, 0):
        raise ValueError("matrix header mismatch")
    bits = np.unpackbits(np.frombuffer(data[12:], dtype=np.uint8),
                         bitorder="little")
    if int(bits[rows * cols:].sum()):
        raise ValueError("spare bits set in matrix encoding")
    return bits[: rows * cols].reshape(rows, cols)


def matrix_size(rows: int, cols: int) -> int:
    return 12 + (rows * cols + 7) // 8


def _matmul_gf2(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    prod = a.astype(np.float32) @ b.astype(np.float32)
    return (prod.astype(np.int64) & 1).astype(np.uint8)


class LpnBackend(Backend):
    backend_id = BackendId.LPN

    def __init__(self, params: LpnParams):
        super().__init__(params)
        p = params
        self._a_size = matrix_size(p.l1, p.n)
        self._b_size = matrix_size(p.l2, p.n)
        self._t_size = matrix_size(p.l2, p.l1)
        self._ct1_size = matrix_size(1, p.l1)
        self._ct2_size = matrix_size(1, p.l2)
        self._pt_size = p.n_msg // 8

    # -- parsing -------------------------------------------------------------
    def _parse_pk(self, pk: PublicKey) -> tuple[np.ndarray, np.ndarray]:
        self._check(pk, PublicKey)
        p = self.params
        if len(pk.body) != self._a_size + self._b_size:
            raise ValueError("bad public key length")
        a = unpack_matrix(pk.body[: self._a_size], p.l1, p.n)
        b = unpack_matrix(pk.body[self._a_size:], p.l2, p.n)
        return a, b

    def _parse_sk(self, sk: SecretKey) -> np.ndarray:
        self._check(sk, SecretKey)
        return unpack_matrix(sk.body, self.params.l2, self.params.l1)

    def _parse_ct(self, ct: Ciphertext) -> tuple[np.ndarray, np.ndarray]:
        self._check(ct, Ciphertext)
        p = self.params
        if len(ct.body) != self._ct1_size + self._ct2_size:
            raise ValueError("bad ciphertext length")
        ct1 = unpack_matrix(ct.body[: self._ct1_size], 1, p.l1)[0]
        ct2 = unpack_matrix(ct.body[self._ct1_size:], 1, p.l2)[0]
        return ct1, ct2

    def _parse_pt(self, pt: Plaintext) -> np.ndarray:
        self._check(pt, Plaintext)
        if len(pt.body) != self._pt_size:
            raise ValueError("bad plaintext length")
        return np.unpackbits(np.frombuffer(pt.body, dtype=np.uint8),
                             bitorder="little")

    def _encode_bits(self, bits: np.ndarray) -> bytes:
        return np.packbits(bits.astype(np.uint8), bitorder="little").tobytes()

    # -- core ---------------------------------------------------------------
    def keygen(self, rng: RandomSource) -> tuple[PublicKey, SecretKey]:
        p = self.params
        a = uniform_matrix((p.l1, p.n), rng)
        t = bernoulli_matrix(p.rho_num, p.rho_den, (p.l2, p.l1), rng)
        x = bernoulli_matrix(p.rho_num, p.rho_den, (p.l2, p.n), rng)
        b = _matmul_gf2(t, a) ^ x
        pk = PublicKey(self.backend_id, pack_matrix(a) + pack_matrix(b))
        sk = SecretKey(self.backend_id, pack_matrix(t))
        return pk, sk

    def encrypt(self, pk: PublicKey, pt: Plaintext, rng: RandomSource) -> Ciphertext:
        p = self.params
        a, b = self._parse_pk(pk)
        m = self._parse_pt(pt)
        s = bernoulli_matrix(p.rho_num, p.rho_den, (p.n,), rng)
        e1 = bernoulli_matrix(p.rho_num, p.rho_den, (p.l1,), rng)
        e2 = bernoulli_matrix(p.rho_num, p.rho_den, (p.l2,), rng)
        ct1 = _matmul_gf2(a, s) ^ e1
        ct2 = _matmul_gf2(b, s) ^ e2 ^ np.repeat(m, p.rep)
        return Ciphertext(self.backend_id, pack_matrix(ct1) + pack_matrix(ct2))

    def decrypt(self, sk: SecretKey, ct: Ciphertext) -> Plaintext | None:
        p = self.params
        try:
            t = self._parse_sk(sk)
            ct1, ct2 = self._parse_ct(ct)
        except ValueError:
            return None
        y = ct2 ^ _matmul_gf2(t, ct1)
        votes = y.reshape(p.n_msg, p.rep).sum(axis=1)
        m_hat = (2 * votes > p.rep).astype(np.uint8)
        residual = y ^ np.repeat(m_hat, p.rep)
        if int(residual.sum()) > p.fail_weight:
            return None
        return Plaintext(self.backend_id, self._encode_bits(m_hat))

    # -- public-key group (entrywise XOR) --------------------------------------
    def pk_op(self, a: PublicKey, b: PublicKey) -> PublicKey:
        am, bm = self._parse_pk(a), self._parse_pk(b)
        return PublicKey(self.backend_id,
                         pack_matrix(am[0] ^ bm[0]) + pack_matrix(am[1] ^ bm[1]))

    def pk_inv(self, a: PublicKey) -> PublicKey:
        self._parse_pk(a)
        return a

    def pk_identity(self) -> PublicKey:
        p = self.params
        return PublicKey(self.backend_id,
                         pack_matrix(np.zeros((p.l1, p.n), np.uint8))
                         + pack_matrix(np.zeros((p.l2, p.n), np.uint8)))

    # -- sampling -------------------------------------------------------------
    @property
    def uniform_width(self) -> int:
        p = self.params
        return (p.l1 * p.n + p.l2 * p.n) // 8

    def pk_from_uniform(self, data: bytes) -> PublicKey:
        p = self.params
        if len(data) != self.uniform_width:
            raise ValueError(f"need {self.uniform_width} uniform bytes")
        split = p.l1 * p.n // 8
        a = np.unpackbits(np.frombuffer(data[:split], dtype=np.uint8),
                          bitorder="little").reshape(p.l1, p.n)
        b = np.unpackbits(np.frombuffer(data[split:], dtype=np.uint8),
                          bitorder="little").reshape(p.l2, p.n)
        return PublicKey(self.backend_id, pack_matrix(a) + pack_matrix(b))

    def sample_plaintext(self, rng: RandomSource) -> Plaintext:
        return Plaintext(self.backend_id, rng.read(self._pt_size))
