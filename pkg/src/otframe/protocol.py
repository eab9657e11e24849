"""Two-round 1-out-of-k transfer, generic over any backend.

Round 1 (receiver, choice c): generate one key pair (pk_c, sk_c), draw a
seed s, obtain group targets q_j from the key oracle and solve the
constraints pk_0 * pk_j = q_j so that exactly one key in the derived list
has a known secret. Send (s, pk_0): the sender re-derives every pk_j from
that message alone.

Round 2 (sender, messages m_0..m_{k-1}): for each i encrypt a fresh
uniform pad seed p_i under pk_i and send (pad_oracle(p_i) XOR m_i, ct_i).

Finish (receiver): decrypt ct_c, query the pad oracle, unmask. When
decryption fails the receiver outputs a fresh uniform lambda-byte string
and only flags the failure locally; nothing about the failure reaches
the wire.

For k = 2 the single target comes from the plain key oracle; for k > 2
target j comes from the indexed oracle with input s || j. A session's
state holds exactly one secret key regardless of k.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .oracle import OracleContext, ro1, ro1_indexed, ro2
from .pke import Backend, Ciphertext, Plaintext, PublicKey, SecretKey, pt_bytes
from .rng import RandomSource

MAX_K = 0xFFFF


class ProtocolError(Exception):
    pass


class MalformedMessage(ProtocolError):
    pass


@dataclass(frozen=True)
class Msg1:
    s: bytes
    pk0: PublicKey


@dataclass(frozen=True)
class Msg2:
    masked: list[bytes]
    cts: list[Ciphertext]

    def __post_init__(self):
        if len(self.masked) != len(self.cts):
            raise ValueError("masked/ciphertext count mismatch")
        if len({len(m) for m in self.masked}) > 1:
            raise ValueError("masked strings must share one length")


@dataclass(frozen=True)
class SenderInput:
    messages: list[bytes]

    def __post_init__(self):
        if len(self.messages) < 2:
            raise ValueError("need at least two messages")
        if len({len(m) for m in self.messages}) != 1:
            raise ValueError("messages must have equal length")

    @property
    def k(self) -> int:
        return len(self.messages)

    @property
    def lam(self) -> int:
        return len(self.messages[0])


@dataclass
class ReceiverState:
    choice: int
    sk: SecretKey
    pk_all: list[PublicKey]
    ctx: OracleContext
    backend: Backend
    lam: int
    decrypt_failed: bool = field(default=False)


def _xor(a: bytes, b: bytes) -> bytes:
    return (int.from_bytes(a, "big") ^ int.from_bytes(b, "big")).to_bytes(len(a), "big")


def derive_targets(backend: Backend, ctx: OracleContext, s: bytes, k: int
                   ) -> list[PublicKey]:
    """Oracle targets q_1..q_{k-1}; k = 2 uses the unindexed oracle."""
    if k == 2:
        return [ro1(ctx, backend, s)]
    return [ro1_indexed(ctx, backend, s, j) for j in range(1, k)]


def derive_all_pks(backend: Backend, ctx: OracleContext, s: bytes, k: int,
                   pk0: PublicKey) -> list[PublicKey]:
    """The full key list from (s, pk0), as both parties compute it."""
    inv0 = backend.pk_inv(pk0)
    return [pk0] + [backend.pk_op(inv0, q) for q in derive_targets(backend, ctx, s, k)]


def receiver_round1(backend: Backend, ctx: OracleContext, k: int, choice: int,
                    rng: RandomSource) -> tuple[ReceiverState, Msg1]:
    if not 2 <= k <= MAX_K:
        raise ValueError(f"k must be in [2, {MAX_K}]")
    if not 0 <= choice < k:
        raise ValueError("choice out of range")
    if ctx.backend_id != backend.backend_id:
        raise ValueError("oracle context bound to a different backend")
    pk_c, sk_c = backend.keygen(rng)
    s = rng.read(backend.params.seed_bytes)
    if choice == 0:
        pk0 = pk_c
    else:
        targets = derive_targets(backend, ctx, s, k)
        pk0 = backend.pk_op(backend.pk_inv(pk_c), targets[choice - 1])
    pk_all = derive_all_pks(backend, ctx, s, k, pk0)
    assert pk_all[choice] == pk_c
    state = ReceiverState(choice, sk_c, pk_all, ctx, backend, ctx.lam)
    return state, Msg1(s, pk0)


def sender_round2(backend: Backend, ctx: OracleContext, sender_input: SenderInput,
                  msg1: Msg1, rng: RandomSource) -> Msg2:
    k = sender_input.k
    if sender_input.lam != ctx.lam:
        raise ValueError("message length does not match session lambda")
    if len(msg1.s) != backend.params.seed_bytes:
        raise MalformedMessage("bad seed length")
    if msg1.pk0.backend_id != backend.backend_id:
        raise MalformedMessage("first-flight key from a different backend")
    try:
        pks = derive_all_pks(backend, ctx, msg1.s, k, msg1.pk0)
    except ValueError as exc:
        raise MalformedMessage(f"first-flight key rejected: {exc}") from None
    pads: list[Plaintext] = [backend.sample_plaintext(rng) for _ in range(k)]
    cts = backend.encrypt_batch(pks, pads, rng)
    masked = [_xor(ro2(ctx, pt_bytes(p)), m)
              for p, m in zip(pads, sender_input.messages)]
    return Msg2(masked, cts)


def receiver_finish(state: ReceiverState, msg2: Msg2, rng: RandomSource) -> bytes:
    k = len(state.pk_all)
    if len(msg2.cts) != k:
        raise MalformedMessage(f"expected {k} ciphertexts, got {len(msg2.cts)}")
    if any(len(m) != state.lam for m in msg2.masked):
        raise MalformedMessage("masked string length does not match session lambda")
    pad_seed = state.backend.decrypt(state.sk, msg2.cts[state.choice])
    if pad_seed is None:
        state.decrypt_failed = True
        return rng.read(state.lam)
    state.decrypt_failed = False
    pad = ro2(state.ctx, pt_bytes(pad_seed))
    return _xor(msg2.masked[state.choice], pad)
