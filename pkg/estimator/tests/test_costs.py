"""Cost-function unit behavior."""

import math

import pytest

from isdest import (estimate_params, log2_binom, measured_prange_bits,
                    prange_cost, stern_cost)


def test_log2_binom_exact_small():
    assert log2_binom(10, 0) == 0
    assert abs(log2_binom(20, 3) - math.log2(1140)) < 1e-9
    with pytest.raises(ValueError):
        log2_binom(5, 6)
    with pytest.raises(ValueError):
        log2_binom(-1, 0)


def test_prange_zero_weight_costs_nothing():
    assert prange_cost(100, 50, 0) == 0.0


def test_prange_small_closed_form():
    # C(20,3)/C(10,3) = 1140/120 = 9.5 expected trials
    assert abs(prange_cost(20, 10, 3) - math.log2(9.5)) < 1e-9


def test_prange_domain_errors():
    with pytest.raises(ValueError):
        prange_cost(20, 10, 11)  # more errors than redundancy
    with pytest.raises(ValueError):
        prange_cost(20, 10, -1)


def test_prange_matches_trial_simulation_small():
    predicted = prange_cost(20, 10, 3)
    measured = measured_prange_bits(20, 10, 3, runs=20_000, seed=7)
    assert abs(predicted - measured) < 0.5


def test_stern_never_exceeds_prange():
    for (n, k, w) in [(20, 10, 3), (1018, 509, 7), (20326, 10163, 134),
                      (39706, 19853, 199)]:
        assert stern_cost(n, k, w) <= prange_cost(n, k, w) + 1e-9


def test_estimates_are_pure():
    a = estimate_params(10163, 142, 134, 128)
    b = estimate_params(10163, 142, 134, 128)
    assert a == b
