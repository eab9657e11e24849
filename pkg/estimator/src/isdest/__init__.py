"""Information-set-decoding work-factor estimates for QC-MDPC tiers."""

from .costs import log2_binom, prange_cost, quasi_cyclic_speedup_bits, stern_cost
from .montecarlo import measured_prange_bits
from .tiers import (IsdEstimate, TIERS, attack_rows, estimate_params,
                    estimate_tier, format_table)

__all__ = [
    "IsdEstimate", "TIERS", "attack_rows", "estimate_params", "estimate_tier",
    "format_table", "log2_binom", "measured_prange_bits", "prange_cost",
    "quasi_cyclic_speedup_bits", "stern_cost",
]
