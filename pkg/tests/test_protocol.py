"""Protocol rounds: correctness, structure, the failure fallback."""

import pytest

from otframe.oracle import OracleContext, ro1, ro1_indexed
from otframe.params import BackendId, Tier, get_params
from otframe.pke import Ciphertext, SecretKey, get_backend
from otframe.protocol import (MalformedMessage, Msg2, SenderInput,
                              receiver_finish, receiver_round1, sender_round2)
from otframe.rng import SeededRandomSource
from otframe.wire import encode_msg1, encode_msg2

CASES = [(BackendId.ELGAMAL, Tier.TOY), (BackendId.QCMDPC, Tier.TOY),
         (BackendId.LPN, Tier.TOY)]
IDS = [f"{b.name}" for b, _ in CASES]


def session(backend_id, tier, seed, lam=32):
    backend = get_backend(get_params(backend_id, tier))
    rng = SeededRandomSource(seed)
    ctx = OracleContext(rng.read(16), backend_id, lam)
    return backend, ctx, rng


@pytest.mark.parametrize("backend_id,tier", CASES, ids=IDS)
def test_end_to_end_all_choices(backend_id, tier):
    for k in (2, 3, 4):
        for choice in range(k):
            backend, ctx, rng = session(backend_id, tier, f"e2e-{k}-{choice}")
            messages = [rng.read(32) for _ in range(k)]
            state, msg1 = receiver_round1(backend, ctx, k, choice, rng)
            msg2 = sender_round2(backend, ctx, SenderInput(messages), msg1, rng)
            assert receiver_finish(state, msg2, rng) == messages[choice]
            assert not state.decrypt_failed


@pytest.mark.parametrize("backend_id,tier", CASES, ids=IDS)
def test_correctness_rate_200_runs_per_k(backend_id, tier):
    """200 seeded runs per k in {2,3,4}, choices cycled; at most one
    failure per thousand (none for ElGamal)."""
    failures = 0
    total = 0
    for k in (2, 3, 4):
        backend, ctx, rng = session(backend_id, tier, f"rate-{k}")
        for i in range(200):
            choice = i % k
            messages = [rng.read(32) for _ in range(k)]
            state, msg1 = receiver_round1(backend, ctx, k, choice, rng)
            msg2 = sender_round2(backend, ctx, SenderInput(messages), msg1, rng)
            if receiver_finish(state, msg2, rng) != messages[choice]:
                failures += 1
            total += 1
    if backend_id == BackendId.ELGAMAL:
        assert failures == 0
    else:
        assert failures <= max(1, total // 1000)


@pytest.mark.parametrize("backend_id,tier", CASES, ids=IDS)
def test_receiver_constraints_recomputable_from_msg1(backend_id, tier):
    """Every derived key satisfies pk0 * pk_j = q_j, checkable by anyone."""
    backend, ctx, rng = session(backend_id, tier, "constraint")
    k = 4
    state, msg1 = receiver_round1(backend, ctx, k, 2, rng)
    targets = [ro1_indexed(ctx, backend, msg1.s, j) for j in range(1, k)]
    for j in range(1, k):
        assert backend.pk_op(msg1.pk0, state.pk_all[j]) == targets[j - 1]
    # k = 2 uses the unindexed oracle
    state2, msg1_2 = receiver_round1(backend, ctx, 2, 1, rng)
    assert backend.pk_op(msg1_2.pk0, state2.pk_all[1]) == ro1(ctx, backend, msg1_2.s)


def test_one_secret_key_regardless_of_k():
    backend, ctx, rng = session(BackendId.QCMDPC, Tier.TOY, "one-key")
    for k in (2, 5, 9):
        state, _ = receiver_round1(backend, ctx, k, k - 1, rng)
        assert isinstance(state.sk, SecretKey)
        assert len(state.pk_all) == k
        secrets = [v for v in vars(state).values() if isinstance(v, SecretKey)]
        assert len(secrets) == 1


def test_masking_is_xor_involution():
    backend, ctx, rng = session(BackendId.LPN, Tier.TOY, "mask")
    messages = [rng.read(32), rng.read(32)]
    state, msg1 = receiver_round1(backend, ctx, 2, 0, rng)
    msg2 = sender_round2(backend, ctx, SenderInput(messages), msg1, rng)
    out = receiver_finish(state, msg2, rng)
    pad = bytes(a ^ b for a, b in zip(msg2.masked[0], out))
    again = bytes(a ^ b for a, b in zip(msg2.masked[0], pad))
    assert again == out == messages[0]


@pytest.mark.parametrize("backend_id,tier", CASES, ids=IDS)
def test_transcripts_deterministic_under_seed(backend_id, tier):
    def run():
        backend, ctx, rng = session(backend_id, tier, "det")
        messages = [bytes([i]) * 32 for i in range(3)]
        state, msg1 = receiver_round1(backend, ctx, 3, 1, rng)
        msg2 = sender_round2(backend, ctx, SenderInput(messages), msg1, rng)
        return encode_msg1(msg1), encode_msg2(msg2), receiver_finish(state, msg2, rng)

    assert run() == run()


def test_msg1_distribution_independent_of_choice():
    """First flights for choice 0 and choice 1 are statistically close
    (toy group: both are exactly uniform; compare empirical TV distance)."""
    backend, ctx, rng = session(BackendId.ELGAMAL, Tier.TOY, "dist")
    n = 100_000
    counts = [{}, {}]
    for choice in (0, 1):
        for _ in range(n):
            _, msg1 = receiver_round1(backend, ctx, 2, choice, rng)
            counts[choice][msg1.pk0.body] = counts[choice].get(msg1.pk0.body, 0) + 1
    keys = set(counts[0]) | set(counts[1])
    assert len(keys) == 101
    tv = sum(abs(counts[0].get(x, 0) - counts[1].get(x, 0)) for x in keys) / (2 * n)
    assert tv < 0.03, f"TV distance {tv:.4f}"


def test_cross_decryption_rarely_recovers_other_pad():
    backend_id, tier = BackendId.QCMDPC, Tier.TOY
    hits = 0
    trials = 1000
    backend, ctx, rng = session(backend_id, tier, "cross-pad")
    for i in range(trials):
        messages = [rng.read(32), rng.read(32)]
        choice = i & 1
        state, msg1 = receiver_round1(backend, ctx, 2, choice, rng)
        msg2 = sender_round2(backend, ctx, SenderInput(messages), msg1, rng)
        other = backend.decrypt(state.sk, msg2.cts[1 - choice])
        if other is not None:
            from otframe.oracle import ro2
            from otframe.pke import pt_bytes
            pad = ro2(ctx, pt_bytes(other))
            recovered = bytes(a ^ b for a, b in zip(msg2.masked[1 - choice], pad))
            if recovered == messages[1 - choice]:
                hits += 1
    assert hits < trials * 0.01, f"recovered the unchosen message {hits}/{trials}"


@pytest.mark.parametrize("backend_id,tier", [(BackendId.QCMDPC, Tier.TOY),
                                             (BackendId.LPN, Tier.TOY)],
                         ids=["QCMDPC", "LPN"])
def test_decryption_failure_fallback(backend_id, tier):
    backend, ctx, rng = session(backend_id, tier, "fallback")
    messages = [rng.read(32), rng.read(32)]
    state, msg1 = receiver_round1(backend, ctx, 2, 1, rng)
    msg2 = sender_round2(backend, ctx, SenderInput(messages), msg1, rng)
    corrupted = Msg2(msg2.masked,
                     [msg2.cts[0], Ciphertext(backend_id, bytes(len(msg2.cts[1].body)))])
    out = receiver_finish(state, corrupted, rng)
    assert len(out) == 32
    assert out != messages[1]
    assert state.decrypt_failed
    out2 = receiver_finish(state, corrupted, rng)
    assert out2 != out  # fresh uniform fallback per call


def test_output_length_always_lambda():
    backend, ctx, rng = session(BackendId.QCMDPC, Tier.TOY, "lam", lam=48)
    messages = [rng.read(48), rng.read(48)]
    state, msg1 = receiver_round1(backend, ctx, 2, 0, rng)
    msg2 = sender_round2(backend, ctx, SenderInput(messages), msg1, rng)
    assert len(receiver_finish(state, msg2, rng)) == 48


def test_malformed_msg2_rejected():
    backend, ctx, rng = session(BackendId.QCMDPC, Tier.TOY, "malformed")
    messages = [rng.read(32), rng.read(32)]
    state, msg1 = receiver_round1(backend, ctx, 2, 0, rng)
    msg2 = sender_round2(backend, ctx, SenderInput(messages), msg1, rng)
    with pytest.raises(MalformedMessage):
        receiver_finish(state, Msg2(msg2.masked + [rng.read(32)],
                                    msg2.cts + [msg2.cts[0]]), rng)
    with pytest.raises(MalformedMessage):
        receiver_finish(state, Msg2([m[:16] for m in msg2.masked], msg2.cts), rng)


def test_malformed_msg1_rejected():
    backend, ctx, rng = session(BackendId.QCMDPC, Tier.TOY, "bad-msg1")
    messages = [rng.read(32), rng.read(32)]
    state, msg1 = receiver_round1(backend, ctx, 2, 0, rng)
    from otframe.pke import PublicKey
    from otframe.protocol import Msg1
    bad = Msg1(msg1.s, PublicKey(BackendId.QCMDPC, msg1.pk0.body + b"\x00"))
    with pytest.raises(MalformedMessage):
        sender_round2(backend, ctx, SenderInput(messages), bad, rng)
    bad_seed = Msg1(msg1.s[:-1], msg1.pk0)
    with pytest.raises(MalformedMessage):
        sender_round2(backend, ctx, SenderInput(messages), bad_seed, rng)


def test_input_validation():
    backend, ctx, rng = session(BackendId.QCMDPC, Tier.TOY, "validate")
    with pytest.raises(ValueError):
        receiver_round1(backend, ctx, 1, 0, rng)
    with pytest.raises(ValueError):
        receiver_round1(backend, ctx, 2, 2, rng)
    with pytest.raises(ValueError):
        SenderInput([b"abc", b"de"])
    with pytest.raises(ValueError):
        SenderInput([b"abc"])
