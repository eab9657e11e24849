"""Known-answer test vectors.

A vector file captures one fully seeded protocol run in a line-oriented
hex format (`field = hex`, with `# seed = hex` leading): the session id,
sender messages, both wire flights and the receiver output. Verification
re-derives every field from the seed and the config lines and compares
byte-for-byte, so the vectors freeze the wire encodings across releases.
"""

from __future__ import annotations

from .oracle import OracleContext
from .params import BackendId, Tier, get_params
from .pke import get_backend
from .protocol import SenderInput, receiver_finish, receiver_round1, sender_round2
from .rng import derive_source
from .wire import encode_msg1, encode_msg2

_ORDER = ["backend", "tier", "k", "lambda", "choice", "session_id",
          "s", "msg1", "msg2", "output"]


def _compute(backend_id: BackendId, tier: Tier, k: int, lam: int, choice: int,
             seed: bytes) -> dict[str, bytes]:
    params = get_params(backend_id, tier)
    backend = get_backend(params)
    rng_r = derive_source(seed, "receiver")
    rng_s = derive_source(seed, "sender")
    rng_m = derive_source(seed, "messages")
    sid = rng_r.read(16)
    ctx = OracleContext(sid, backend_id, lam)
    messages = [rng_m.read(lam) for _ in range(k)]
    state, msg1 = receiver_round1(backend, ctx, k, choice, rng_r)
    msg2 = sender_round2(backend, ctx, SenderInput(messages), msg1, rng_s)
    output = receiver_finish(state, msg2, rng_r)
    fields = {
        "backend": bytes([backend_id]),
        "tier": bytes([tier]),
        "k": k.to_bytes(2, "big"),
        "lambda": lam.to_bytes(4, "big"),
        "choice": choice.to_bytes(2, "big"),
        "session_id": sid,
        "s": msg1.s,
        "msg1": encode_msg1(msg1),
        "msg2": encode_msg2(msg2),
        "output": output,
    }
    for i, m in enumerate(messages):
        fields[f"message_{i}"] = m
    return fields


def emit(backend_id: BackendId, tier: Tier, k: int, lam: int, choice: int,
         seed: bytes) -> str:
    fields = _compute(backend_id, tier, k, lam, choice, seed)
    lines = ["# otframe test vector", f"# seed = {seed.hex()}"]
    names = _ORDER[:5] + [f"message_{i}" for i in range(k)] + _ORDER[5:]
    lines += [f"{name} = {fields[name].hex()}" for name in names]
    return "\n".join(lines) + "\n"


def parse(text: str) -> tuple[bytes, dict[str, bytes]]:
    seed = None
    fields: dict[str, bytes] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line.lstrip("#").strip()
            if body.startswith("seed"):
                seed = bytes.fromhex(body.split("=", 1)[1].strip())
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected 'field = hex'")
        name, value = (part.strip() for part in line.split("=", 1))
        fields[name] = bytes.fromhex(value)
    if seed is None:
        raise ValueError("missing '# seed = hex' line")
    return seed, fields


def verify(text: str) -> list[str]:
    """Recompute a parsed vector; returns the names of mismatched fields."""
    seed, fields = parse(text)
    backend_id = BackendId(fields["backend"][0])
    tier = Tier(fields["tier"][0])
    k = int.from_bytes(fields["k"], "big")
    lam = int.from_bytes(fields["lambda"], "big")
    choice = int.from_bytes(fields["choice"], "big")
    expected = _compute(backend_id, tier, k, lam, choice, seed)
    mismatched = [name for name, want in expected.items()
                  if fields.get(name) != want]
    mismatched += [name for name in fields if name not in expected]
    return mismatched
