"""Bit-exact message framing.

Frame:  "OTF1" | version 0x01 | frame type | session id (16B) |
        payload length (4B BE) | payload.

HELLO payload:  backend (1B) | tier (1B) | k (2B BE) | lambda (4B BE).
MSG1 payload:   |s| (2B BE) | s | public-key envelope.
MSG2 payload:   k (2B BE) | lambda (4B BE) | k masked strings |
                ciphertext section.

The ciphertext section is k length-prefixed envelopes, except for the
ElGamal backend where all k ciphertexts share their first group element:
one envelope carrying the shared element, then k envelopes carrying the
second elements — k + 1 group elements total on the wire.

Every decoder rejects trailing bytes and raises MalformedError on any
framing violation; a mutated frame either still parses to a different
valid value or raises, never crashes.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from enum import IntEnum

from .params import BackendId, Tier, get_params
from .pke import Ciphertext, PublicKey, decode_value_prefix, encode_value
from .protocol import Msg1, Msg2

MAGIC = b"OTF1"
VERSION = 1


class MalformedError(Exception):
    pass


class FrameType(IntEnum):
    HELLO = 1
    MSG1 = 2
    MSG2 = 3
    BYE = 4


@dataclass(frozen=True)
class Frame:
    frame_type: FrameType
    session_id: bytes
    payload: bytes

    def __post_init__(self):
        if len(self.session_id) != 16:
            raise ValueError("session id must be 16 bytes")


@dataclass(frozen=True)
class Hello:
    backend_id: BackendId
    tier: Tier
    k: int
    lam: int


FRAME_HEADER = struct.Struct(">4sBB16sI")


def encode_frame(frame: Frame) -> bytes:
    return FRAME_HEADER.pack(MAGIC, VERSION, frame.frame_type,
                             frame.session_id, len(frame.payload)) + frame.payload


def decode_frame(buf: bytes) -> Frame:
    if len(buf) < FRAME_HEADER.size:
        raise MalformedError("short frame")
    magic, version, ftype, sid, plen = FRAME_HEADER.unpack(buf[:FRAME_HEADER.size])
    if magic != MAGIC:
        raise MalformedError("bad magic")
    if version != VERSION:
        raise MalformedError(f"unsupported version {version}")
    try:
        ftype = FrameType(ftype)
    except ValueError:
        raise MalformedError(f"unknown frame type {ftype}") from None
    payload = buf[FRAME_HEADER.size:]
    if len(payload) != plen:
        raise MalformedError("payload length mismatch")
    return Frame(ftype, sid, bytes(payload))


_HELLO = struct.Struct(">BBHI")


def encode_hello(h: Hello) -> bytes:
    return _HELLO.pack(h.backend_id, h.tier, h.k, h.lam)


def decode_hello(payload: bytes) -> Hello:
    if len(payload) != _HELLO.size:
        raise MalformedError("bad hello length")
    backend_raw, tier_raw, k, lam = _HELLO.unpack(payload)
    try:
        backend = BackendId(backend_raw)
        tier = Tier(tier_raw)
        get_params(backend, tier)
    except ValueError as exc:
        raise MalformedError(str(exc)) from None
    if k < 2:
        raise MalformedError("k must be at least 2")
    if lam < 16:
        raise MalformedError("lambda must be at least 16")
    return Hello(backend, tier, k, lam)


def encode_msg1(msg1: Msg1) -> bytes:
    if len(msg1.s) > 0xFFFF:
        raise ValueError("seed too long")
    return struct.pack(">H", len(msg1.s)) + msg1.s + encode_value(msg1.pk0)


def decode_msg1(payload: bytes) -> Msg1:
    if len(payload) < 2:
        raise MalformedError("short first flight")
    (slen,) = struct.unpack(">H", payload[:2])
    if len(payload) < 2 + slen:
        raise MalformedError("truncated seed")
    s = bytes(payload[2:2 + slen])
    try:
        pk0, rest = decode_value_prefix(payload[2 + slen:], PublicKey)
    except ValueError as exc:
        raise MalformedError(str(exc)) from None
    if rest:
        raise MalformedError("trailing bytes after first flight")
    return Msg1(s, pk0)


_MSG2_HEAD = struct.Struct(">HI")


def encode_msg2(msg2: Msg2) -> bytes:
    k = len(msg2.cts)
    lam = len(msg2.masked[0]) if msg2.masked else 0
    out = [_MSG2_HEAD.pack(k, lam)]
    out += [bytes(m) for m in msg2.masked]
    backend = msg2.cts[0].backend_id
    if any(ct.backend_id != backend for ct in msg2.cts):
        raise ValueError("mixed-backend ciphertexts")
    if backend == BackendId.ELGAMAL:
        halves = [_split_elgamal(ct) for ct in msg2.cts]
        shared = {c1 for c1, _ in halves}
        if len(shared) != 1:
            raise ValueError("elgamal ciphertexts must share their first element")
        c1 = halves[0][0]
        out.append(encode_value(Ciphertext(backend, c1)))
        out += [encode_value(Ciphertext(backend, c2)) for _, c2 in halves]
    else:
        out += [encode_value(ct) for ct in msg2.cts]
    return b"".join(out)


def _split_elgamal(ct: Ciphertext) -> tuple[bytes, bytes]:
    if len(ct.body) % 2:
        raise ValueError("elgamal ciphertext body must split evenly")
    half = len(ct.body) // 2
    return ct.body[:half], ct.body[half:]


def decode_msg2(payload: bytes) -> Msg2:
    if len(payload) < _MSG2_HEAD.size:
        raise MalformedError("short second flight")
    k, lam = _MSG2_HEAD.unpack(payload[:_MSG2_HEAD.size])
    if k < 2:
        raise MalformedError("k must be at least 2")
    off = _MSG2_HEAD.size
    if len(payload) < off + k * lam:
        raise MalformedError("truncated masked strings")
    masked = [bytes(payload[off + i * lam: off + (i + 1) * lam]) for i in range(k)]
    rest = payload[off + k * lam:]
    try:
        first, rest = decode_value_prefix(rest, Ciphertext)
    except ValueError as exc:
        raise MalformedError(str(exc)) from None
    if first.backend_id == BackendId.ELGAMAL:
        c1 = first.body
        cts = []
        for _ in range(k):
            try:
                c2, rest = decode_value_prefix(rest, Ciphertext)
            except ValueError as exc:
                raise MalformedError(str(exc)) from None
            if c2.backend_id != BackendId.ELGAMAL:
                raise MalformedError("mixed-backend ciphertexts")
            if len(c2.body) != len(c1):
                raise MalformedError("second elements must match the shared element size")
            cts.append(Ciphertext(BackendId.ELGAMAL, c1 + c2.body))
    else:
        cts = [first]
        for _ in range(k - 1):
            try:
                ct, rest = decode_value_prefix(rest, Ciphertext)
            except ValueError as exc:
                raise MalformedError(str(exc)) from None
            if ct.backend_id != first.backend_id:
                raise MalformedError("mixed-backend ciphertexts")
            cts.append(ct)
    if rest:
        raise MalformedError("trailing bytes after second flight")
    try:
        return Msg2(masked, cts)
    except ValueError as exc:
        raise MalformedError(str(exc)) from None
