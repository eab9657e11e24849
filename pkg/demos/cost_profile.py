"""Primitive cost tables per backend tier.

The code-based tier shows the decode-heavy profile: decryption dominates
both key generation and encryption. Pass --full to include the (slower)
128-bit circulant tier. Run: python demos/cost_profile.py [--full]
"""

import sys

from otframe.bench import bench, format_table
from otframe.params import BackendId, Tier

tiers = [(BackendId.ELGAMAL, Tier.B128, 10),
         (BackendId.QCMDPC, Tier.TOY, 20),
         (BackendId.LPN, Tier.TOY, 10)]
if "--full" in sys.argv:
    tiers.append((BackendId.QCMDPC, Tier.B128, 5))

for backend_id, tier, iters in tiers:
    rows = bench(backend_id, tier, iters)
    print(f"== {backend_id.name} / {tier.name}")
    print(format_table(rows))
    med = {r["op"]: r["median_ms"] for r in rows}
    print(f"   decrypt/encrypt ratio: {med['decrypt'] / med['encrypt']:.1f}x\n")
