"""Cost measurement for the backend primitives.

Reports per-operation median wall times over a number of iterations,
plus a cycle estimate at a nominal clock (read from /proc/cpuinfo when
available, else 2.4 GHz). Cycle figures are order-of-magnitude aids;
the meaningful outputs are the medians and their ratios.
"""

from __future__ import annotations

import re
import statistics
import time

from .params import BackendId, Tier, get_params
from .pke import get_backend
from .rng import RandomSource, SystemRandomSource


def nominal_ghz(default: float = 2.4) -> float:
    try:
        with open("/proc/cpuinfo") as fh:
            mhz = [float(m.group(1)) for m in
                   re.finditer(r"cpu MHz\s*:\s*([0-9.]+)", fh.read())]
        if mhz:
            return max(mhz) / 1e3
    except OSError:
        pass
    return default


def bench(backend_id: BackendId, tier: Tier, iterations: int,
          rng: RandomSource | None = None, ghz: float | None = None) -> list[dict]:
    """Three rows (keygen, encrypt, decrypt) of median costs."""
    if iterations < 1:
        raise ValueError("iterations must be positive")
    rng = rng or SystemRandomSource()
    ghz = ghz or nominal_ghz()
    backend = get_backend(get_params(backend_id, tier))

    kg_ns, enc_ns, dec_ns = [], [], []
    pk, sk = backend.keygen(rng)  # warm-up key, also primes FFT plans
    for _ in range(iterations):
        t0 = time.perf_counter_ns()
        pk, sk = backend.keygen(rng)
        kg_ns.append(time.perf_counter_ns() - t0)

        pt = backend.sample_plaintext(rng)
        t0 = time.perf_counter_ns()
        ct = backend.encrypt(pk, pt, rng)
        enc_ns.append(time.perf_counter_ns() - t0)

        t0 = time.perf_counter_ns()
        out = backend.decrypt(sk, ct)
        dec_ns.append(time.perf_counter_ns() - t0)
        if out is None:
            # decryption failure: timing still measured, result noted
            pass

    rows = []
    for op, samples in (("keygen", kg_ns), ("encrypt", enc_ns), ("decrypt", dec_ns)):
        med = statistics.median(samples)
        rows.append({
            "op": op,
            "backend": BackendId(backend_id).name,
            "tier": Tier(tier).name,
            "iterations": iterations,
            "median_ns": int(med),
            "median_ms": med / 1e6,
            "kcycles_est": med * ghz / 1e3,
        })
    return rows


def format_table(rows: list[dict]) -> str:
    head = f"{'op':<10}{'tier':<8}{'median ms':>12}{'est kcycles':>14}{'iters':>7}"
    lines = [head, "-" * len(head)]
    for r in rows:
        lines.append(f"{r['op']:<10}{r['tier']:<8}{r['median_ms']:>12.3f}"
                     f"{r['kcycles_est']:>14.1f}{r['iterations']:>7}")
    return "\n".join(lines)
