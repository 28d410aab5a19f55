import math

import numpy as np
import pytest

from stablecdf.closed_forms import cdf_alpha1
from stablecdf.errors import DomainError, OracleAccuracyError
from stablecdf.oracle import OracleSpec, oracle_cdf, oracle_pdf, tail_estimate
from stablecdf.params import validate
from stablecdf.quadrature import cdf_integral
from stablecdf.tail_series import cdf_series, pdf_tail_series


def test_spec_validation():
    with pytest.raises(DomainError):
        OracleSpec(t_max=0.0)
    with pytest.raises(DomainError):
        OracleSpec(panels=10)


def test_short_cutoff_is_refused():
    # the classic fixed cutoff is far too short for heavy tails
    with pytest.raises(OracleAccuracyError):
        oracle_pdf(validate(0.5, 0.0), 1.0, OracleSpec(t_max=200.0))
    assert tail_estimate(2.0, 0.0, 200.0) < 1e-300 + 1e-100


def test_gaussian_density_at_zero():
    assert oracle_pdf(validate(2.0, 0.0), 0.0) == pytest.approx(1.0 / (2.0 * math.sqrt(math.pi)), rel=1e-13)


def test_cauchy_density():
    assert oracle_pdf(validate(1.0, 0.0), 2.0) == pytest.approx(1.0 / (5.0 * math.pi), rel=1e-10)


def test_density_tail_cross_check():
    r = pdf_tail_series(10.0, 0.5, 0.0, 40)
    assert abs(oracle_pdf(validate(0.5, 0.0), 10.0) - r.value) <= r.total_bound + 1e-12


def test_gaussian_cdf_and_anchor():
    assert oracle_cdf(validate(2.0, 0.0), 1.0) == pytest.approx(0.7602499389065233, abs=1e-13)
    for a, t in [(0.4, 0.7), (1.2, -0.5), (2.0, 0.0)]:
        assert oracle_cdf(validate(a, t), 0.0) == (1.0 - t) / 2.0


def test_cdf_range_limit():
    with pytest.raises(DomainError):
        oracle_cdf(validate(1.5, 0.0), 101.0)


@pytest.mark.parametrize("theta", [0.0, 0.5, -0.5])
def test_against_cauchy_closed_form(theta):
    p = validate(1.0, theta)
    worst = max(abs(oracle_cdf(p, float(x)) - cdf_alpha1(float(x), theta)) for x in np.linspace(-10, 10, 21))
    assert worst <= 1e-8
    assert oracle_cdf(validate(1.0, 0.5), 3.0) == pytest.approx(cdf_alpha1(3.0, 0.5), abs=1e-8)


@pytest.mark.parametrize("alpha", [1.7, 2.0])
def test_far_right_is_close_to_one(alpha):
    v = oracle_cdf(validate(alpha, 0.0), 100.0)
    assert 1.0 - 1e-4 <= v <= 1.0 + 1e-12


@pytest.mark.parametrize("alpha", [1.0, 1.5])
def test_far_right_matches_heavy_tail(alpha):
    # here 1 - G(100) itself exceeds 1e-4, so compare with the series
    s = cdf_series(100.0, alpha, 0.0, 30)
    assert abs(oracle_cdf(validate(alpha, 0.0), 100.0) - s.value) <= s.total_bound + 1e-12


@pytest.mark.parametrize("alpha, theta", [(0.5, 0.0), (0.5, 0.3), (1.3, 0.0), (2.0, 0.0)])
@pytest.mark.parametrize("x", [0.5, 1.0, 5.0])
def test_against_quadrature(alpha, theta, x):
    p = validate(alpha, theta)
    for sx in (x, -x):
        assert abs(oracle_cdf(p, sx) - cdf_integral(sx, alpha, theta).value) <= 1e-7


def test_scale_is_honoured():
    p1, p3 = validate(1.4, 0.2, 1.0), validate(1.4, 0.2, 3.0)
    x = 2.0
    assert oracle_cdf(p3, x) == pytest.approx(oracle_cdf(p1, x * 3.0 ** (-1 / 1.4)), abs=1e-13)
