"""Walk the two protocol rounds in-process, once per backend.

Shows what each party computes and what actually crosses the wire:
the receiver's (seed, key) flight and the sender's (masked, ciphertext)
flight. Run: python demos/transfer_basics.py
"""

from otframe import (BackendId, OracleContext, SenderInput, Tier, get_backend,
                     get_params, receiver_finish, receiver_round1, sender_round2)
from otframe.rng import SeededRandomSource
from otframe.wire import encode_msg1, encode_msg2

for backend_id, tier in [(BackendId.ELGAMAL, Tier.B128),
                         (BackendId.QCMDPC, Tier.TOY),
                         (BackendId.LPN, Tier.TOY)]:
    backend = get_backend(get_params(backend_id, tier))
    rng = SeededRandomSource(b"demo")
    ctx = OracleContext(rng.read(16), backend_id, 32)

    secrets = [b"left message  - 32 bytes wide  .", b"right message - 32 bytes wide  ."]
    choice = 1

    state, msg1 = receiver_round1(backend, ctx, k=2, choice=choice, rng=rng)
    msg2 = sender_round2(backend, ctx, SenderInput(secrets), msg1, rng)
    output = receiver_finish(state, msg2, rng)

    print(f"== {backend_id.name} / {tier.name}")
    print(f"   receiver -> sender: {len(encode_msg1(msg1))} bytes "
          f"(seed {len(msg1.s)}B + public key {len(msg1.pk0.body)}B)")
    print(f"   sender -> receiver: {len(encode_msg2(msg2))} bytes "
          f"({len(msg2.masked)} masked strings + {len(msg2.cts)} ciphertexts)")
    print(f"   receiver chose {choice} and got: {output!r}")
    assert output == secrets[choice]
    print(f"   sender's view of the choice: none (msg1 is one key + one seed)\n")
