"""Oracle determinism, separation, and an independent XOF cross-check.

The reference XOF here is a from-scratch Keccak-f[1600] sponge (rho
offsets and round constants generated from their defining recurrences,
not copied tables). It is validated against hashlib first, then used as
the independent implementation behind the key-oracle check.
"""

import hashlib
import random

import pytest

from otframe.oracle import (OracleContext, ro1, ro1_indexed, ro1_indexed_preimage,
                            ro1_preimage, ro2, ro2_preimage, TAG_KEY,
                            TAG_KEY_INDEXED, TAG_PAD)
from otframe.params import BackendId, Tier, get_params
from otframe.pke import get_backend
from otframe.rng import SeededRandomSource


# -- independent SHAKE-256 ------------------------------------------------------

def _rotl(v, n):
    return ((v << n) | (v >> (64 - n))) & (2**64 - 1)


def _rho_offsets():
    rot = [0] * 25
    x, y = 1, 0
    for t in range(24):
        rot[x + 5 * y] = ((t + 1) * (t + 2) // 2) % 64
        x, y = y, (2 * x + 3 * y) % 5
    return rot


def _round_constants():
    def rc_bit(t):
        r = 1
        for _ in range(t % 255):
            r = ((r << 1) ^ (0x71 if r & 0x80 else 0)) & 0xFF
        return r & 1

    out = []
    for ir in range(24):
        val = 0
        for j in range(7):
            val |= rc_bit(j + 7 * ir) << (2**j - 1)
        out.append(val)
    return out


_ROT = _rho_offsets()
_RC = _round_constants()


def _keccak_f(lanes):
    for rnd in range(24):
        c = [lanes[x] ^ lanes[x + 5] ^ lanes[x + 10] ^ lanes[x + 15] ^ lanes[x + 20]
             for x in range(5)]
        d = [c[(x - 1) % 5] ^ _rotl(c[(x + 1) % 5], 1) for x in range(5)]
        lanes = [lanes[i] ^ d[i % 5] for i in range(25)]
        b = [0] * 25
        for x in range(5):
            for y in range(5):
                b[y + 5 * ((2 * x + 3 * y) % 5)] = _rotl(lanes[x + 5 * y],
                                                         _ROT[x + 5 * y])
        lanes = [b[x + 5 * y] ^ (~b[(x + 1) % 5 + 5 * y] & b[(x + 2) % 5 + 5 * y]
                                 & (2**64 - 1))
                 for y in range(5) for x in range(5)]
        lanes[0] ^= _RC[rnd]
    return lanes


def shake256_reference(msg: bytes, outlen: int) -> bytes:
    rate = 136
    padded = bytearray(msg) + b"\x1f"
    padded += b"\x00" * (-len(padded) % rate)
    padded[-1] |= 0x80
    lanes = [0] * 25
    for off in range(0, len(padded), rate):
        block = padded[off:off + rate]
        for i in range(rate // 8):
            lanes[i] ^= int.from_bytes(block[8 * i:8 * i + 8], "little")
        lanes = _keccak_f(lanes)
    out = b""
    while len(out) < outlen:
        out += b"".join(lane.to_bytes(8, "little") for lane in lanes)[:rate]
        if len(out) < outlen:
            lanes = _keccak_f(lanes)
    return out[:outlen]


def test_reference_xof_matches_hashlib():
    rng = random.Random(3)
    for n in (0, 1, 135, 136, 137, 400):
        msg = bytes(rng.getrandbits(8) for _ in range(n))
        for outlen in (1, 32, 136, 300):
            assert shake256_reference(msg, outlen) == \
                hashlib.shake_256(msg).digest(outlen)


# -- oracle behavior -------------------------------------------------------------

def _ctx(backend_id=BackendId.QCMDPC, lam=32):
    return OracleContext(bytes(range(16)), backend_id, lam)


def _toy_backend():
    return get_backend(get_params(BackendId.QCMDPC, Tier.TOY))


def test_ro1_deterministic():
    backend = _toy_backend()
    ctx = _ctx()
    s = bytes(6)
    assert ro1(ctx, backend, s) == ro1(ctx, backend, s)


def test_ro1_matches_independent_xof_first_r_bits():
    backend = _toy_backend()
    ctx = _ctx()
    s = b"\x01\x02\x03\x04\x05\x06"
    stream = shake256_reference(ro1_preimage(ctx, s), backend.uniform_width)
    assert ro1(ctx, backend, s) == backend.pk_from_uniform(stream)
    # first r bits of the stream, little-endian within bytes
    r = backend.params.r
    masked = int.from_bytes(stream, "little") & ((1 << r) - 1)
    assert int.from_bytes(ro1(ctx, backend, s).body, "little") == masked


def test_ro1_collision_sweep():
    backend = _toy_backend()
    ctx = _ctx()
    rng = SeededRandomSource(b"sweep")
    seen = set()
    for _ in range(10_000):
        seen.add(ro1(ctx, backend, rng.read(6)).body)
    assert len(seen) == 10_000


def test_ro1_indexed_distinct_and_deterministic():
    backend = _toy_backend()
    ctx = _ctx()
    s = bytes(6)
    assert ro1_indexed(ctx, backend, s, 1) != ro1_indexed(ctx, backend, s, 2)
    assert ro1_indexed(ctx, backend, s, 1) == ro1_indexed(ctx, backend, s, 1)
    with pytest.raises(ValueError):
        ro1_indexed(ctx, backend, s, 0)


def test_ro2_lengths_and_determinism():
    for lam in (16, 32, 1024):
        ctx = _ctx(lam=lam)
        out = ro2(ctx, b"pad-seed")
        assert len(out) == lam
        assert out == ro2(ctx, b"pad-seed")


def test_context_separation():
    backend = _toy_backend()
    s = bytes(6)
    a = ro1(OracleContext(bytes(16), BackendId.QCMDPC, 32), backend, s)
    b = ro1(OracleContext(bytes(15) + b"\x01", BackendId.QCMDPC, 32), backend, s)
    assert a != b


def test_preimages_pairwise_prefix_distinct():
    ctx = _ctx()
    s = bytes(6)
    pre1 = ro1_preimage(ctx, s)
    pre1k = ro1_indexed_preimage(ctx, s, 1)
    pre2 = ro2_preimage(ctx, s)
    for a, b in [(pre1, pre1k), (pre1, pre2), (pre1k, pre2)]:
        assert not a.startswith(b) and not b.startswith(a)
    # the long tag extends the short one, but the next preimage byte is a
    # backend id in {1,2,3}, never 'K'
    assert TAG_KEY_INDEXED.startswith(TAG_KEY)
    assert TAG_KEY_INDEXED[len(TAG_KEY)] == ord("K")
    assert all(b != ord("K") for b in BackendId)
    assert not TAG_PAD.startswith(TAG_KEY)


def test_indexed_preimage_input_section():
    ctx = _ctx()
    s = b"\xaa" * 6
    for j in (1, 2, 3):
        pre = ro1_indexed_preimage(ctx, s, j)
        assert pre.endswith(s + j.to_bytes(2, "big"))


def test_ro2_monobit_frequency():
    ctx = _ctx(lam=125_000)  # 10^6 bits in one output
    out = ro2(ctx, b"monobit")
    ones = sum(bin(byte).count("1") for byte in out)
    n = 1_000_000
    # fair coin: mean n/2, sigma = sqrt(n)/2
    assert abs(ones - n / 2) < 3 * (n**0.5) / 2


def test_ro1_seed_length_enforced():
    backend = _toy_backend()
    with pytest.raises(ValueError):
        ro1(_ctx(), backend, bytes(5))


def test_context_validation():
    with pytest.raises(ValueError):
        OracleContext(bytes(8), BackendId.QCMDPC, 32)
    with pytest.raises(ValueError):
        OracleContext(bytes(16), BackendId.QCMDPC, 8)
