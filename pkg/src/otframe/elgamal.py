"""ElGamal backend over a prime-order group.

Two group profiles: ristretto255 for real use and the order-101 toy group
for exhaustive testing. Public keys, plaintexts and ciphertext halves are
group elements; the public-key group law is the group operation itself.

The backend counts group exponentiations (scalar multiplications) per
instance, i.e. per protocol session: key generation costs 1, a k-wise
shared-randomness encryption costs k + 1, decryption costs 1 — a full
1-out-of-2 transfer is exactly 5. The uniform-bytes-to-element maps used
by the key oracle and plaintext sampling are not exponentiations and keep
every discrete log unknown; in particular the oracle output q may never
be produced as g^H(s), since anyone knowing dlog(q) and one secret key
could derive the complementary secret key from the sum relation.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import ristretto255, toygroup
from .params import BackendId, ElGamalParams
from .pke import Backend, Ciphertext, Plaintext, PublicKey, SecretKey
from .rng import RandomSource


class _ToyOps:
    """Multiplicative order-101 subgroup of Z*_607."""

    element_size = toygroup.ELEMENT_SIZE
    scalar_size = toygroup.SCALAR_SIZE
    uniform_size = toygroup.UNIFORM_SIZE
    order = toygroup.ORDER

    decode = staticmethod(toygroup.decode)
    encode = staticmethod(toygroup.encode)
    op = staticmethod(toygroup.mul)
    inv = staticmethod(toygroup.inv)
    exp = staticmethod(toygroup.exp)
    from_uniform = staticmethod(toygroup.from_uniform)

    identity = staticmethod(toygroup.identity)

    @staticmethod
    def base():
        return toygroup.GENERATOR


class _RistrettoOps:
    """ristretto255 in additive notation, adapted to the multiplicative API."""

    element_size = ristretto255.ELEMENT_SIZE
    scalar_size = ristretto255.SCALAR_SIZE
    uniform_size = ristretto255.UNIFORM_SIZE
    order = ristretto255.ORDER

    decode = staticmethod(ristretto255.decode)
    encode = staticmethod(ristretto255.encode)
    op = staticmethod(ristretto255.add)
    inv = staticmethod(ristretto255.neg)
    from_uniform = staticmethod(ristretto255.from_uniform)

    @staticmethod
    def exp(base, k):
        return ristretto255.scalar_mul(k, base)

    @staticmethod
    def identity():
        return ristretto255.IDENTITY

    @staticmethod
    def base():
        return ristretto255.BASE


@dataclass(frozen=True)
class SharedRandCiphertextPair:
    """k ciphertexts sharing one randomness: c1 = g^r once, c2[i] = m_i * pk_i^r."""
    c1: bytes
    c2_list: list[bytes]


class ElGamalBackend(Backend):
    backend_id = BackendId.ELGAMAL

    def __init__(self, params: ElGamalParams):
        super().__init__(params)
        self.group = _ToyOps() if params.group == "toy101" else _RistrettoOps()
        self.exp_count = 0

    def _exp(self, base, k):
        self.exp_count += 1
        return self.group.exp(base, k)

    def reset_exp_count(self) -> None:
        self.exp_count = 0

    def exp_counter(self) -> int:
        """Group exponentiations performed on this instance (session)."""
        return self.exp_count

    # -- scalar/element plumbing -------------------------------------------
    def _encode_scalar(self, k: int) -> bytes:
        order = "big" if self.group.scalar_size == 1 else "little"
        return k.to_bytes(self.group.scalar_size, order)

    def _decode_scalar(self, body: bytes) -> int:
        if len(body) != self.group.scalar_size:
            raise ValueError("bad scalar length")
        order = "big" if self.group.scalar_size == 1 else "little"
        k = int.from_bytes(body, order)
        if k >= self.group.order:
            raise ValueError("scalar not reduced")
        return k

    def _elem(self, body: bytes):
        return self.group.decode(body)

    # -- core ---------------------------------------------------------------
    def keygen(self, rng: RandomSource) -> tuple[PublicKey, SecretKey]:
        sk = rng.randbelow(self.group.order)
        pk = self._exp(self.group.base(), sk)
        return (PublicKey(self.backend_id, self.group.encode(pk)),
                SecretKey(self.backend_id, self._encode_scalar(sk)))

    def encrypt(self, pk: PublicKey, pt: Plaintext, rng: RandomSource) -> Ciphertext:
        self._check(pk, PublicKey)
        self._check(pt, Plaintext)
        return self.encrypt_batch([pk], [pt], rng)[0]

    def encrypt_shared(self, pks: list[PublicKey], pts: list[Plaintext],
                       rng: RandomSource) -> SharedRandCiphertextPair:
        """k + 1 exponentiations and k + 1 group elements for k messages."""
        if len(pks) != len(pts):
            raise ValueError("length mismatch")
        r = rng.randbelow(self.group.order)
        c1 = self._exp(self.group.base(), r)
        c2 = [self.group.op(self._elem(pt.body), self._exp(self._elem(pk.body), r))
              for pk, pt in zip(pks, pts)]
        return SharedRandCiphertextPair(self.group.encode(c1),
                                        [self.group.encode(x) for x in c2])

    def encrypt_batch(self, pks, pts, rng) -> list[Ciphertext]:
        pair = self.encrypt_shared(pks, pts, rng)
        return [Ciphertext(self.backend_id, pair.c1 + c2) for c2 in pair.c2_list]

    def decrypt(self, sk: SecretKey, ct: Ciphertext) -> Plaintext | None:
        self._check(sk, SecretKey)
        self._check(ct, Ciphertext)
        es = self.group.element_size
        if len(ct.body) != 2 * es:
            return None
        try:
            c1 = self._elem(ct.body[:es])
            c2 = self._elem(ct.body[es:])
            k = self._decode_scalar(sk.body)
        except ValueError:
            return None
        m = self.group.op(c2, self.group.inv(self._exp(c1, k)))
        return Plaintext(self.backend_id, self.group.encode(m))

    # -- public-key group ----------------------------------------------------
    def pk_op(self, a: PublicKey, b: PublicKey) -> PublicKey:
        self._check(a, PublicKey)
        self._check(b, PublicKey)
        out = self.group.op(self._elem(a.body), self._elem(b.body))
        return PublicKey(self.backend_id, self.group.encode(out))

    def pk_inv(self, a: PublicKey) -> PublicKey:
        self._check(a, PublicKey)
        return PublicKey(self.backend_id,
                         self.group.encode(self.group.inv(self._elem(a.body))))

    def pk_identity(self) -> PublicKey:
        return PublicKey(self.backend_id, self.group.encode(self.group.identity()))

    # -- sampling -------------------------------------------------------------
    @property
    def uniform_width(self) -> int:
        return self.group.uniform_size

    def pk_from_uniform(self, data: bytes) -> PublicKey:
        return PublicKey(self.backend_id,
                         self.group.encode(self.group.from_uniform(data)))

    def sample_plaintext(self, rng: RandomSource) -> Plaintext:
        elem = self.group.from_uniform(rng.read(self.group.uniform_size))
        return Plaintext(self.backend_id, self.group.encode(elem))
