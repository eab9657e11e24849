"""Generic-decoding work factors.

Costs are log2 of the expected number of information-set trials, i.e. one
unit is one Gaussian elimination; polynomial per-trial factors are folded
into that unit, which is what a Monte-Carlo trial counter measures. A
Prange trial succeeds when a random information set misses the whole
error, so the expected trial count is C(n,w) / C(n-k,w). The collision
(Stern-style) refinement splits the information set and spends list work
to tolerate 2p error bits inside it; its degenerate point p = 0, l = 0 is
exactly the Prange estimate, so the refined minimum can never exceed it.
"""

from __future__ import annotations

from math import lgamma, log2

LN2 = 0.6931471805599453


def log2_binom(n: int, k: int) -> float:
    """log2 of the binomial coefficient; raises on an empty domain."""
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"binomial ({n}, {k}) out of domain")
    return (lgamma(n + 1) - lgamma(k + 1) - lgamma(n - k + 1)) / LN2


def prange_cost(n: int, k: int, w_target: int) -> float:
    """Expected-trial exponent for decoding w_target errors in an
    (n, k) code: log2( C(n, w) / C(n-k, w) )."""
    if not 0 <= w_target <= n:
        raise ValueError("target weight out of range")
    if w_target > n - k:
        raise ValueError("weight exceeds the redundancy; no trial can succeed")
    return log2_binom(n, w_target) - log2_binom(n - k, w_target)


def stern_cost(n: int, k: int, w_target: int,
               max_p: int = 8, max_l: int = 96) -> float:
    """Collision-refined cost, minimized over (p, l), in elimination units.

    iterations(p, l) = C(n,w) / ( C(k1,p) * C(k2,p) * C(n-k-l, w-2p) ),
    with the information set split as k = k1 + k2. Each iteration also
    builds two size-C(k1,p) lists and checks C(k1,p)*C(k2,p)/2^l
    collisions; that work is charged relative to the (n-k)^2 elimination
    that defines one trial unit. The (0, 0) point is plain Prange, so the
    minimum never exceeds it.
    """
    if not 0 <= w_target <= n:
        raise ValueError("target weight out of range")
    if w_target > n - k:
        raise ValueError("weight exceeds the redundancy; no trial can succeed")
    k1, k2 = k // 2, k - k // 2
    top = log2_binom(n, w_target)
    elim_bits = 2 * log2(max(n - k, 2))
    best = None
    for p in range(0, min(max_p, w_target // 2, k1) + 1):
        for l in range(0, max_l + 1, 4):
            rest = w_target - 2 * p
            if rest > n - k - l:
                continue
            iters = (top - log2_binom(k1, p) - log2_binom(k2, p)
                     - log2_binom(n - k - l, rest))
            if p == 0:
                per_iter = 0.0
            else:
                lists = log2_binom(k1, p) + 1
                collisions = log2_binom(k1, p) + log2_binom(k2, p) - l
                per_iter = max(0.0, max(lists, collisions) - elim_bits)
            cost = iters + per_iter
            if best is None or cost < best:
                best = cost
    assert best is not None
    return max(best, 0.0)


def quasi_cyclic_speedup_bits(r: int) -> float:
    """sqrt(r) decoding-one-out-of-many discount for key-recovery attacks
    against a quasi-cyclic code with block length r."""
    return 0.5 * log2(r)
