"""Trial-counting simulation used to calibrate the Prange exponent.

Small instances only: draw a weight-w error, then repeatedly draw random
information sets until one misses the error, counting the draws. The
log2 of the average count is what prange_cost predicts.
"""

from __future__ import annotations

import random
from math import log2


def measured_prange_bits(n: int, k: int, w: int, runs: int,
                         seed: int = 0) -> float:
    rng = random.Random(seed)
    positions = list(range(n))
    total = 0
    for _ in range(runs):
        error = set(rng.sample(positions, w))
        trials = 1
        while set(rng.sample(positions, k)) & error:
            trials += 1
        total += trials
    return log2(total / runs)
