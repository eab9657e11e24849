"""Deterministic random-oracle instances over SHAKE-256.

Two oracles drive the protocol: one with the public-key space as range
(realized as XOF output fed through the backend's uniform-to-key map) and
one producing the lambda-byte one-time pads. Domain separation is by ASCII
tag, backend id byte and session id; the three preimage streams are
pairwise prefix-distinct because the tags differ and the byte following
the shorter tag is a backend id in {1, 2, 3}, never 'K' (0x4B).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .params import BackendId
from .pke import Backend, PublicKey

TAG_KEY = b"OTF1-RO1"
TAG_KEY_INDEXED = b"OTF1-RO1K"
TAG_PAD = b"OTF1-RO2"

SESSION_ID_BYTES = 16


@dataclass(frozen=True)
class OracleContext:
    session_id: bytes
    backend_id: BackendId
    lam: int  # pad length, bytes

    def __post_init__(self):
        if len(self.session_id) != SESSION_ID_BYTES:
            raise ValueError("session id must be 16 bytes")
        if self.lam < 16:
            raise ValueError("lambda must be at least 16 bytes")


def _xof(preimage: bytes, n: int) -> bytes:
    return hashlib.shake_256(preimage).digest(n)


def ro1_preimage(ctx: OracleContext, s: bytes) -> bytes:
    return TAG_KEY + bytes([ctx.backend_id]) + ctx.session_id + s


def ro1_indexed_preimage(ctx: OracleContext, s: bytes, j: int) -> bytes:
    if not 1 <= j <= 0xFFFF:
        raise ValueError("index out of range")
    return TAG_KEY_INDEXED + bytes([ctx.backend_id]) + ctx.session_id + s + j.to_bytes(2, "big")


def ro2_preimage(ctx: OracleContext, p: bytes) -> bytes:
    return TAG_PAD + bytes([ctx.backend_id]) + ctx.session_id + p


def ro1(ctx: OracleContext, backend: Backend, s: bytes) -> PublicKey:
    """Key-space oracle: uniform public-key-space element from seed s."""
    if len(s) != backend.params.seed_bytes:
        raise ValueError(f"seed must be {backend.params.seed_bytes} bytes")
    return backend.pk_from_uniform(_xof(ro1_preimage(ctx, s), backend.uniform_width))


def ro1_indexed(ctx: OracleContext, backend: Backend, s: bytes, j: int) -> PublicKey:
    """Indexed variant for 1-out-of-k: the oracle input is s || j (2B BE)."""
    if len(s) != backend.params.seed_bytes:
        raise ValueError(f"seed must be {backend.params.seed_bytes} bytes")
    return backend.pk_from_uniform(_xof(ro1_indexed_preimage(ctx, s, j), backend.uniform_width))


def ro2(ctx: OracleContext, p: bytes) -> bytes:
    """Pad oracle: lambda bytes from a canonical plaintext encoding."""
    return _xof(ro2_preimage(ctx, p), ctx.lam)
