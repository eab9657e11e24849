"""Parameter sets for the three encryption backends.

A ParamSet names a backend and security tier and carries the backend's
constants. Registered tiers are validated at module import; in particular
the circulant-code tiers require r prime with 2 a primitive root mod r,
which makes (x^r - 1)/(x - 1) irreducible over GF(2).
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from enum import IntEnum


class BackendId(IntEnum):
    ELGAMAL = 1
    QCMDPC = 2
    LPN = 3


class Tier(IntEnum):
    TOY = 0
    B80 = 1
    B128 = 2
    B192 = 3
    B256 = 4
    MEDIUM = 5


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for the 64-bit range."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def two_is_primitive_root(r: int) -> bool:
    """ord_r(2) == r - 1, i.e. (x^r - 1)/(x - 1) is irreducible over GF(2)."""
    return all(pow(2, (r - 1) // p, r) != 1 for p in _prime_factors(r - 1))


@dataclass(frozen=True)
class ParamSet:
    backend_id: BackendId
    tier: Tier
    kappa: int  # seed/pad security parameter, bits
    lambda_default: int  # default transferred-string length, bytes

    def validate(self) -> None:
        if self.kappa % 8 != 0 or self.kappa <= 0:
            raise ValueError("kappa must be a positive multiple of 8")

    @property
    def seed_bytes(self) -> int:
        return self.kappa // 8


@dataclass(frozen=True)
class ElGamalParams(ParamSet):
    group: str = "ristretto255"  # or "toy101"


@dataclass(frozen=True)
class QcmdpcParams(ParamSet):
    r: int = 0
    w: int = 0  # total parity-check row weight; wt(f) = wt(g) = w/2
    t: int = 0  # error weight, carries the plaintext
    bf_delta: int = 0  # bit-flip threshold slack below the max UPC count
    bf_max_iter: int = 50

    @property
    def n(self) -> int:
        return 2 * self.r

    def validate(self) -> None:
        super().validate()
        if not is_prime(self.r):
            raise ValueError(f"r={self.r} is not prime")
        if not two_is_primitive_root(self.r):
            raise ValueError(f"2 is not a primitive root mod r={self.r}")
        if self.w % 2 != 0 or (self.w // 2) % 2 == 0:
            # wt(g) must be odd or g is never a unit mod x^r - 1
            raise ValueError("w must be even with w/2 odd")
        if not 0 < self.t < self.n:
            raise ValueError("t out of range")


@dataclass(frozen=True)
class LpnParams(ParamSet):
    n: int = 0  # secret length
    l1: int = 0  # rows of A
    l2: int = 0  # rows of B = code length
    rho_num: int = 1  # Bernoulli rate rho = rho_num / rho_den
    rho_den: int = 2
    rep: int = 0  # repetition factor of the code
    n_msg: int = 0  # message bits; l2 = rep * n_msg
    fail_weight: int = 0  # re-encoded residual weight above which decryption fails

    def validate(self) -> None:
        super().validate()
        if not 0 < self.rho_num * 2 <= self.rho_den:
            raise ValueError("rho must lie in (0, 1/2]")
        if self.l2 != self.rep * self.n_msg:
            raise ValueError("l2 must equal rep * n_msg")
        if self.rep % 2 == 0:
            raise ValueError("repetition factor must be odd for majority decoding")
        for dim in (self.n, self.l1, self.n_msg):
            if dim % 8 != 0:
                raise ValueError("dimensions must be byte-aligned")

    @property
    def rho(self) -> float:
        return self.rho_num / self.rho_den


_REGISTRY: dict[tuple[BackendId, Tier], ParamSet] = {}


def _register(p: ParamSet) -> None:
    p.validate()
    _REGISTRY[(p.backend_id, p.tier)] = p


_register(ElGamalParams(BackendId.ELGAMAL, Tier.TOY, kappa=64, lambda_default=32, group="toy101"))
_register(ElGamalParams(BackendId.ELGAMAL, Tier.B128, kappa=128, lambda_default=32, group="ristretto255"))

# Circulant-code tiers. The three B rows use the published (r, w, t) with
# r prime and 2 primitive; TOY is the smallest such r in [500, 1500]
# with (w, t) tuned until the empirical failure rate is <= 1e-3.
_register(QcmdpcParams(BackendId.QCMDPC, Tier.TOY, kappa=48, lambda_default=32,
                       r=509, w=10, t=7, bf_delta=0))
_register(QcmdpcParams(BackendId.QCMDPC, Tier.B128, kappa=128, lambda_default=32,
                       r=10163, w=142, t=134, bf_delta=3))
_register(QcmdpcParams(BackendId.QCMDPC, Tier.B192, kappa=192, lambda_default=32,
                       r=19853, w=206, t=199, bf_delta=3))
_register(QcmdpcParams(BackendId.QCMDPC, Tier.B256, kappa=256, lambda_default=32,
                       r=32771, w=274, t=264, bf_delta=3))

# Noise rate keeps n*rho ~ 6: a Bernoulli secret with n*rho near zero is
# all-zero often enough that ciphertexts decrypt under any key. Sizes are
# bounded by the 2-byte envelope body length on the serialized public key.
_register(LpnParams(BackendId.LPN, Tier.TOY, kappa=40, lambda_default=32,
                    n=576, l1=64, l2=21 * 40, rho_num=1, rho_den=96,
                    rep=21, n_msg=40, fail_weight=(21 * 40) // 4))
_register(LpnParams(BackendId.LPN, Tier.MEDIUM, kappa=32, lambda_default=32,
                    n=488, l1=80, l2=31 * 32, rho_num=1, rho_den=80,
                    rep=31, n_msg=32, fail_weight=(31 * 32) // 4))


def get_params(backend_id: BackendId, tier: Tier) -> ParamSet:
    try:
        return _REGISTRY[(BackendId(backend_id), Tier(tier))]
    except KeyError:
        raise ValueError(f"no registered tier {Tier(tier).name} for backend "
                         f"{BackendId(backend_id).name}") from None


def available_tiers(backend_id: BackendId) -> list[Tier]:
    return sorted(t for (b, t) in _REGISTRY if b == backend_id)


def custom_qcmdpc(r: int, w: int, t: int, *, kappa: int = 128,
                  bf_delta: int = 3) -> QcmdpcParams:
    """Unregistered parameter set; validation still applies."""
    p = QcmdpcParams(BackendId.QCMDPC, Tier.TOY, kappa=kappa, lambda_default=32,
                     r=r, w=w, t=t, bf_delta=bf_delta)
    p.validate()
    return p


def encode_qcmdpc_row(p: QcmdpcParams) -> bytes:
    """Registry row wire form: tier byte | r (4B BE) | w (2B BE) | t (2B BE)."""
    return struct.pack(">BIHH", p.tier, p.r, p.w, p.t)


def decode_qcmdpc_row(buf: bytes) -> QcmdpcParams:
    tier, r, w, t = struct.unpack(">BIHH", buf)
    reg = _REGISTRY.get((BackendId.QCMDPC, Tier(tier)))
    if isinstance(reg, QcmdpcParams) and (reg.r, reg.w, reg.t) == (r, w, t):
        return reg
    return custom_qcmdpc(r, w, t)
