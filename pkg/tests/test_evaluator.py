import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from stablecdf import evaluator
from stablecdf.errors import DomainError, OutOfValidatedRange, QuadratureFailure
from stablecdf.evaluator import EvalPolicy, cdf, pdf_tail
from stablecdf.params import theta_bound, validate
from stablecdf.quadrature import QuadratureSpec
from stablecdf.tail_series import Method
from stablecdf.threshold import solve_threshold


def test_policy_validation():
    with pytest.raises(DomainError):
        EvalPolicy(n_terms=1)
    with pytest.raises(DomainError):
        EvalPolicy(epsilon=0.0)


def test_cauchy_closed_form():
    r = cdf(validate(1.0, 0.0), 1.0)
    assert (r.value, r.bound_or_estimate, r.method) == (0.75, 0.0, Method.CLOSED_FORM_ALPHA1)


def test_series_beyond_threshold():
    r = cdf(validate(1.1, 0.0), 5.0)
    assert r.method is Method.SERIES_TAIL and r.bound_is_rigorous
    assert r.bound_or_estimate <= 1e-5
    assert r.threshold_used == pytest.approx(1.860, rel=2e-3)


def test_quadrature_below_threshold():
    r = cdf(validate(1.1, 0.0), 1.0)
    assert r.method is Method.QUADRATURE and not r.bound_is_rigorous


def test_zero_point_is_exact():
    for a, t in [(0.4, 0.9), (1.5, -1 / 3), (2.0, 0.0)]:
        r = cdf(validate(a, t, 2.0), 0.0)
        assert r.value == (1.0 - t) / 2.0 and r.method is Method.CLOSED_FORM_ZERO


def test_one_sided_law_uses_quadrature():
    r = cdf(validate(0.5, 1.0), 1e6)
    assert r.method is Method.QUADRATURE
    assert r.complement == pytest.approx(math.erf(1.0 / (2.0 * math.sqrt(1e6))), rel=1e-10)


def test_small_x_warning():
    r = cdf(validate(1.3, 0.1), 1e-6)
    assert r.warnings and "small-x" in r.warnings[0]
    assert not cdf(validate(1.3, 0.1), 0.5).warnings


def test_infinite_and_nan():
    assert cdf(validate(1.3, 0.0), math.inf).value == 1.0
    assert cdf(validate(1.3, 0.0), -math.inf).value == 0.0
    with pytest.raises(DomainError):
        cdf(validate(1.3, 0.0), math.nan)


def test_threshold_below_solver_bracket():
    r = cdf(validate(0.1, 0.0), 1e-3)
    assert r.method is Method.SERIES_TAIL and r.bound_or_estimate <= 1e-5
    assert r.threshold_used == pytest.approx(1e-8)


def test_threshold_in_caller_units():
    lam = 5.0
    r = cdf(validate(1.4, 0.0, lam), 100.0)
    assert r.threshold_used == pytest.approx(solve_threshold(1.4, 30, 1e-5).x_eps * lam ** (1 / 1.4))


@given(st.floats(min_value=0.1, max_value=2.0), st.floats(min_value=-1.0, max_value=1.0),
       st.floats(min_value=0.01, max_value=100.0), st.floats(min_value=-1e4, max_value=1e4))
@settings(max_examples=40, deadline=None)
def test_scale_reduction(alpha, u, lam, x):
    theta = u * theta_bound(alpha)
    a = cdf(validate(alpha, theta, lam), x)
    b = cdf(validate(alpha, theta, 1.0), x * lam ** (-1.0 / alpha) if lam != 1.0 else x)
    assert a.value == b.value and a.method == b.method


def test_quadrature_failure_carries_hint():
    policy = EvalPolicy(quad_spec=QuadratureSpec(rel_tol=1e-16, abs_tol=1e-300, max_subdivisions=1))
    with pytest.raises(QuadratureFailure, match="raise n_terms"):
        cdf(validate(1.5, 0.2), 0.5, policy)


def test_routing_is_deterministic():
    p = validate(1.3, 0.2)
    assert cdf(p, 2.71) == cdf(p, 2.71)


@pytest.mark.parametrize("alpha, theta", [(0.5, 0.0), (0.7, 0.2), (1.3, -0.3), (1.7, 0.1)])
def test_certified_branch_honesty(alpha, theta):
    p = validate(alpha, theta)
    for x in np.geomspace(1e-2, 1e8, 30):
        r = cdf(p, float(x))
        if r.method is Method.SERIES_TAIL:
            assert r.bound_is_rigorous and r.bound_or_estimate <= 1e-5


@pytest.mark.parametrize("alpha", [0.7, 1.3])
def test_continuity_across_routing_boundary(alpha):
    x_eps = solve_threshold(alpha, 30, 1e-5).x_eps
    p = validate(alpha, 0.0)
    below, above = cdf(p, x_eps * (1 - 1e-9)), cdf(p, x_eps)
    assert below.method is Method.QUADRATURE and above.method is Method.SERIES_TAIL
    assert abs(above.value - below.value) <= 1e-5 + below.bound_or_estimate


@pytest.mark.parametrize("alpha, theta", [(0.6, 0.5), (1.0, 0.3), (1.3, 0.0), (1.9, 0.05)])
def test_global_shape(alpha, theta):
    p = validate(alpha, theta)
    xs = np.concatenate([-np.geomspace(1e3, 1e-3, 40), [0.0], np.geomspace(1e-3, 1e3, 40)])
    reps = [cdf(p, float(x)) for x in xs]
    vals = [r.value for r in reps]
    assert all(0.0 <= v <= 1.0 for v in vals)
    assert all(r.bound_or_estimate >= 0.0 for r in reps)
    # nondecreasing up to the certified/estimated accuracy of each point
    for r0, r1 in zip(reps, reps[1:]):
        assert r1.value >= r0.value - (r0.bound_or_estimate + r1.bound_or_estimate)


def test_pdf_tail_examples():
    r = pdf_tail(validate(1.0, 0.0), 2.0)
    assert r.value == pytest.approx(1.0 / (5.0 * math.pi), rel=1e-14) and r.bound_or_estimate == 0.0
    r = pdf_tail(validate(0.5, 0.0), 1e4)
    lead = math.gamma(1.5) * math.sin(math.pi / 4) * 1e4 ** -1.5 / math.pi
    # the next term is smaller by about Γ(2)/Γ(1.5)·sin(π/2)/sin(π/4)/2·x^{-1/2}
    assert r.value == pytest.approx(lead, rel=1e-2) and r.bound_or_estimate < 1e-20
    with pytest.raises(OutOfValidatedRange):
        pdf_tail(validate(1.3, 0.0), 0.5)
    with pytest.raises(OutOfValidatedRange):
        pdf_tail(validate(1.3, 0.0), 0.0)
    with pytest.raises(OutOfValidatedRange):
        pdf_tail(validate(0.5, 1.0), 1e4)


def test_pdf_tail_scaling():
    lam, x = 4.0, 300.0
    s = lam ** (1 / 1.2)
    a = pdf_tail(validate(1.2, 0.1, lam), x)
    b = pdf_tail(validate(1.2, 0.1), x / s)
    assert a.value == pytest.approx(b.value / s, rel=1e-14)


def test_every_report_has_the_documented_fields():
    r = evaluator.cdf(validate(0.8, 0.1), -3.0)
    assert set(vars(r)) >= {"x", "params", "value", "bound_or_estimate", "bound_is_rigorous",
                            "method", "threshold_used", "warnings"}
