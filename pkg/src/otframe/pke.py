"""Backend contract: encryption with a group law on the public-key space.

Every backend provides keygen/encrypt/decrypt plus three structural
operations the transfer protocol needs:

  * ``pk_op`` / ``pk_inv`` / ``pk_identity`` — an abelian group on the
    whole public-key space (XOR of key material for the code backends,
    group multiplication for ElGamal), so a key can be split as
    ``pk_op(pk, pk_op(pk_inv(pk), q)) == q`` for any target ``q``;
  * ``pk_from_uniform`` — a deterministic map from fixed-width uniform
    bytes onto the key space, statistically uniform, and (for ElGamal)
    revealing no discrete log of the output;
  * ``sample_plaintext`` — a uniform draw from the message space whose
    canonical byte form feeds the pad oracle.

Values are immutable wrappers around a backend id and a canonical body
encoding; all operations are pure given an explicit random source.
Decryption failure is an in-band ``None``, never an exception.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

from .params import BackendId, ParamSet
from .rng import RandomSource


@dataclass(frozen=True)
class PublicKey:
    backend_id: BackendId
    body: bytes


@dataclass(frozen=True)
class SecretKey:
    backend_id: BackendId
    body: bytes


@dataclass(frozen=True)
class Plaintext:
    backend_id: BackendId
    body: bytes  # canonical injective encoding, fixed length per ParamSet


@dataclass(frozen=True)
class Ciphertext:
    backend_id: BackendId
    body: bytes


_VALUE_TYPES = {PublicKey, SecretKey, Plaintext, Ciphertext}


def pt_bytes(pt: Plaintext) -> bytes:
    """Canonical plaintext bytes, the pad-oracle input."""
    return pt.body


def encode_value(value) -> bytes:
    """Envelope: backend id byte | body length (2B BE) | body."""
    if type(value) not in _VALUE_TYPES:
        raise TypeError(f"not an opaque value: {type(value)!r}")
    if len(value.body) > 0xFFFF:
        raise ValueError("body exceeds envelope length field")
    return struct.pack(">BH", value.backend_id, len(value.body)) + value.body


def decode_value(buf: bytes, cls):
    """Strict envelope parse; rejects trailing bytes."""
    value, rest = decode_value_prefix(buf, cls)
    if rest:
        raise ValueError("trailing bytes after envelope")
    return value


def decode_value_prefix(buf: bytes, cls):
    """Parse one envelope off the front of buf, returning (value, rest)."""
    if len(buf) < 3:
        raise ValueError("short envelope")
    backend_raw, blen = struct.unpack(">BH", buf[:3])
    try:
        backend = BackendId(backend_raw)
    except ValueError:
        raise ValueError(f"unknown backend id {backend_raw}") from None
    if len(buf) < 3 + blen:
        raise ValueError("truncated envelope body")
    return cls(backend, bytes(buf[3:3 + blen])), buf[3 + blen:]


class Backend:
    """One instantiation of the contract, bound to a ParamSet.

    Backends are cheap to construct and hold no secret state; a protocol
    session owns one instance (the ElGamal instance also carries that
    session's exponentiation counter).
    """

    backend_id: BackendId

    def __init__(self, params: ParamSet):
        if params.backend_id != self.backend_id:
            raise ValueError("params do not match backend")
        self.params = params

    # -- core encryption --------------------------------------------------
    def keygen(self, rng: RandomSource) -> tuple[PublicKey, SecretKey]:
        raise NotImplementedError

    def encrypt(self, pk: PublicKey, pt: Plaintext, rng: RandomSource) -> Ciphertext:
        raise NotImplementedError

    def decrypt(self, sk: SecretKey, ct: Ciphertext) -> Plaintext | None:
        """Returns the plaintext, or None when decoding fails."""
        raise NotImplementedError

    def encrypt_batch(self, pks: list[PublicKey], pts: list[Plaintext],
                      rng: RandomSource) -> list[Ciphertext]:
        """Encrypt pts[i] under pks[i]; backends may share randomness."""
        if len(pks) != len(pts):
            raise ValueError("length mismatch")
        return [self.encrypt(pk, pt, rng) for pk, pt in zip(pks, pts)]

    # -- public-key group --------------------------------------------------
    def pk_op(self, a: PublicKey, b: PublicKey) -> PublicKey:
        raise NotImplementedError

    def pk_inv(self, a: PublicKey) -> PublicKey:
        raise NotImplementedError

    def pk_identity(self) -> PublicKey:
        raise NotImplementedError

    # -- sampling ----------------------------------------------------------
    @property
    def uniform_width(self) -> int:
        """Bytes of uniform input consumed by pk_from_uniform."""
        raise NotImplementedError

    def pk_from_uniform(self, data: bytes) -> PublicKey:
        raise NotImplementedError

    def sample_plaintext(self, rng: RandomSource) -> Plaintext:
        raise NotImplementedError

    # -- shared helpers ----------------------------------------------------
    def _check(self, value, cls) -> None:
        if value.backend_id != self.backend_id:
            raise ValueError(f"backend mismatch: {value.backend_id} vs {self.backend_id}")
        if not isinstance(value, cls):
            raise TypeError(f"expected {cls.__name__}")


def get_backend(params: ParamSet) -> Backend:
    # local imports: backends pull in numpy/scipy machinery
    from . import elgamal, lpn, qcmdpc

    cls = {
        BackendId.ELGAMAL: elgamal.ElGamalBackend,
        BackendId.QCMDPC: qcmdpc.QcmdpcBackend,
        BackendId.LPN: lpn.LpnBackend,
    }[params.backend_id]
    return cls(params)
