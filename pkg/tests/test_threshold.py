import math

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from stablecdf.errors import BracketError, DomainError
from stablecdf.tail_series import cdf_remainder_bound, pdf_remainder_bound
from stablecdf.threshold import (
    Convention, log_lhs, solve_pdf_threshold, solve_threshold, threshold_limit_behavior,
)

REFERENCE = {0.5: 0.088, 0.7: 0.402, 0.9: 1.000, 1.1: 1.860, 1.4: 3.552, 1.7: 5.612}


@pytest.mark.parametrize("alpha, expected", sorted(REFERENCE.items()))
def test_pi_convention_reproduces_reference_values(alpha, expected):
    r = solve_threshold(alpha, 30, 1e-5)
    assert r.denominator_convention is Convention.PI_FACTORIAL
    assert r.x_eps == pytest.approx(expected, rel=2e-3)


def test_alpha_convention_misses_the_reference_table():
    r = solve_threshold(0.5, 30, 1e-5, Convention.ALPHA_FACTORIAL)
    assert abs(r.x_eps / 0.088 - 1.0) > 0.02


@pytest.mark.parametrize("alpha", [0.3, 0.7, 1.0, 1.3, 2.0])
@pytest.mark.parametrize("n", [1, 3, 30, 90])
def test_residual_and_certificate(alpha, n):
    r = solve_threshold(alpha, n, 1e-5)
    assert r.residual <= 1e-12
    assert r.x_eps > 0.0
    assert cdf_remainder_bound(r.x_eps, alpha, n) <= 1e-5 * (1.0 + 1e-9)
    assert r.iterations <= 200


def test_pdf_threshold_certificate():
    r = solve_pdf_threshold(1.3, 30, 1e-5)
    assert pdf_remainder_bound(r.x_eps, 1.3, 30) <= 1e-5 * (1.0 + 1e-9)


@pytest.mark.parametrize("alpha", [0.5, 1.0, 1.7])
def test_lhs_strictly_decreasing(alpha):
    for conv in Convention:
        vals = [log_lhs(t, alpha, 30, conv) for t in np.linspace(math.log(1e-8), math.log(1e20), 400)]
        assert all(a > b for a, b in zip(vals, vals[1:]))


@settings(max_examples=40, deadline=None)
@given(st.floats(min_value=0.2, max_value=2.0), st.integers(min_value=2, max_value=100),
       st.floats(min_value=1e-14, max_value=1e-2))
def test_smaller_epsilon_gives_larger_threshold(alpha, n, eps):
    try:
        hi = solve_threshold(alpha, n, eps / 2)
    except BracketError:
        assume(False)
    assert hi.x_eps > solve_threshold(alpha, n, eps).x_eps


def test_bracket_errors():
    with pytest.raises(BracketError):
        solve_threshold(0.1, 200, 1e-2)
    with pytest.raises(BracketError):
        solve_threshold(2.0, 2, 1e-300)


def test_domain_errors():
    with pytest.raises(DomainError):
        solve_threshold(0.0, 30, 1e-5)
    with pytest.raises(DomainError):
        solve_threshold(1.0, 0, 1e-5)
    with pytest.raises(DomainError):
        solve_threshold(1.0, 30, 0.0)
    with pytest.raises(DomainError):
        threshold_limit_behavior(0.7, 1e-5, [10, 3])


def test_limit_trichotomy():
    grid = [3, 10, 30, 60, 90]
    low = [x for _, x in threshold_limit_behavior(0.7, 1e-5, grid)]
    assert all(a > b for a, b in zip(low, low[1:]))
    one = [x for _, x in threshold_limit_behavior(1.0, 1e-5, grid + [400, 2000])]
    assert all(a > b for a, b in zip(one, one[1:])) and one[-1] > 1.0 and one[-1] < 1.1
    high = [x for _, x in threshold_limit_behavior(1.3, 1e-5, grid)]
    assert high[2] < high[3] < high[4]
    assert min(high) < high[0]


def test_cached_results_are_identical():
    assert solve_threshold(1.1, 30, 1e-5) is solve_threshold(1.1, 30, 1e-5)
