"""Attack-cost summary for one (r, w, t) parameter set.

Two attacks matter for the quasi-cyclic MDPC scheme: recovering the
weight-w secret key (a low-weight codeword in the (2r, r) code, with the
sqrt(r) one-out-of-many discount) and recovering the weight-t error from
a ciphertext (plain decoding). The classical level is the cheaper of the
two Prange trial exponents; the quantum level is half the classical one
(Grover over the trial space). Stern-refined exponents ride along as an
advisory column.
"""

from __future__ import annotations

from dataclasses import dataclass

from .costs import prange_cost, quasi_cyclic_speedup_bits, stern_cost

# Named tiers: (r, w, t, claimed classical bits).
TIERS: dict[str, tuple[int, int, int, int]] = {
    "TOY": (509, 10, 7, 0),
    "B128": (10163, 142, 134, 128),
    "B192": (19853, 206, 199, 192),
    "B256": (32771, 274, 264, 256),
}


@dataclass(frozen=True)
class IsdEstimate:
    n: int
    r: int
    w: int
    t: int
    key_attack_bits: float
    message_attack_bits: float
    stern_key_bits: float
    stern_message_bits: float
    target_bits: int

    @property
    def classical_bits(self) -> float:
        return min(self.key_attack_bits, self.message_attack_bits)

    @property
    def quantum_bits(self) -> float:
        return self.classical_bits / 2


def estimate_params(r: int, w: int, t: int, target_bits: int = 0) -> IsdEstimate:
    n, k = 2 * r, r
    discount = quasi_cyclic_speedup_bits(r)
    return IsdEstimate(
        n=n, r=r, w=w, t=t,
        key_attack_bits=prange_cost(n, k, w) - discount,
        message_attack_bits=prange_cost(n, k, t),
        stern_key_bits=stern_cost(n, k, w) - discount,
        stern_message_bits=stern_cost(n, k, t),
        target_bits=target_bits,
    )


def estimate_tier(name: str) -> IsdEstimate:
    try:
        r, w, t, target = TIERS[name.upper()]
    except KeyError:
        raise ValueError(f"unknown tier {name!r}; have {sorted(TIERS)}") from None
    return estimate_params(r, w, t, target)


def attack_rows(est: IsdEstimate) -> list[dict]:
    """Flat rows for the text table and the JSON file consumed by the
    transfer tool's params subcommand."""
    def row(attack: str, bits: float) -> dict:
        return {
            "r": est.r, "w": est.w, "t": est.t,
            "attack": attack,
            "workfactor_bits": round(bits, 2),
            "target_bits": est.target_bits,
            "delta": round(bits - est.target_bits, 2),
        }

    return [
        row("key-prange", est.key_attack_bits),
        row("message-prange", est.message_attack_bits),
        row("key-stern", est.stern_key_bits),
        row("message-stern", est.stern_message_bits),
        row("classical", est.classical_bits),
        row("quantum", est.quantum_bits),
    ]


def format_table(rows: list[dict]) -> str:
    head = f"{'attack':<16}{'workfactor_bits':>16}{'target_bits':>13}{'delta':>9}"
    out = [head, "-" * len(head)]
    for r in rows:
        out.append(f"{r['attack']:<16}{r['workfactor_bits']:>16.2f}"
                   f"{r['target_bits']:>13}{r['delta']:>9.2f}")
    return "\n".join(out)
