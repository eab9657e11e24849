"""Two-round 1-out-of-k oblivious transfer over group-structured encryption."""

from .oracle import OracleContext, ro1, ro1_indexed, ro2
from .params import BackendId, Tier, get_params, available_tiers
from .pke import (Backend, Ciphertext, Plaintext, PublicKey, SecretKey,
                  decode_value, encode_value, get_backend, pt_bytes)
from .protocol import (Msg1, Msg2, ReceiverState, SenderInput,
                       receiver_finish, receiver_round1, sender_round2)
from .rng import RandomSource, SeededRandomSource, SystemRandomSource

__all__ = [
    "Backend", "BackendId", "Ciphertext", "Msg1", "Msg2", "OracleContext",
    "Plaintext", "PublicKey", "RandomSource", "ReceiverState", "SecretKey",
    "SeededRandomSource", "SenderInput", "SystemRandomSource", "Tier",
    "available_tiers", "decode_value", "encode_value", "get_backend",
    "get_params", "pt_bytes", "receiver_finish", "receiver_round1", "ro1",
    "ro1_indexed", "ro2", "sender_round2",
]

__version__ = "0.1.0"
