"""Power series of the cdf and density as |x| → ∞, with remainder bounds.

For x > 0 and θ ≠ ±1,

    1 - G(x; α, θ) = G_N(x) + R_N(x),
    G_N(x) = (1/π) Σ_{n=1}^{N-1} (-1)^{n+1} Γ(αn) sin(παn(1+θ)/2) x^{-αn} / n!,
    |R_N(x)| ≤ x^{-αN} / (π N!) · (Γ(αN) + x^{-α} Γ(α(N+1))).

The density analogue differentiates term by term. The series converges for
every x when α < 1, for x > 1 when α = 1 and is only asymptotic when α > 1.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import DomainError
from .params import sign, theta_bound
from .special import LOG_PI, log_gamma, pdf_term_log, series_term_log

DEFAULT_TERMS = 30


class Method(str, enum.Enum):
    SERIES_TAIL = "series"
    QUADRATURE = "quadrature"
    CLOSED_FORM_ALPHA1 = "closed-form-alpha1"
    CLOSED_FORM_ZERO = "closed-form-zero"


class Regime(str, enum.Enum):
    CONVERGENT_ALL_X = "convergent-all-x"
    CONVERGENT_BEYOND_ONE = "convergent-beyond-one"
    ASYMPTOTIC_ONLY = "asymptotic-only"


@dataclass(frozen=True)
class CertifiedValue:
    """A value with an absolute-error bound and the method that produced it.

    ``complement`` is 1 - value computed without cancellation when the
    producing method has it (tails far out where ``value`` rounds to 1).
    For the series, ``bound`` is the truncation bound alone and
    ``rounding`` bounds the floating-point error of the evaluation, so
    ``bound + rounding`` certifies ``value``. For quadrature the bound is
    an error estimate, not a proof.
    """

    value: float
    bound: float
    method: Method
    terms_used: int = 0
    complement: float | None = None
    notes: tuple[str, ...] = field(default=())
    rounding: float = 0.0

    @property
    def total_bound(self) -> float:
        return self.bound + self.rounding

    @property
    def rigorous(self) -> bool:
        return self.method is not Method.QUADRATURE


def _check_theta(alpha, theta):
    if abs(theta) >= 1.0:
        raise DomainError("theta", "the tail series excludes theta = ±1")
    if abs(theta) > theta_bound(alpha) * (1.0 + 1e-15):
        raise DomainError("theta", f"|theta| exceeds min(1, 2/alpha - 1) for alpha={alpha}")


def _check_x(x):
    if not x > 0.0:
        raise DomainError("x", f"tail series needs x > 0, got {x!r}")


def _check_terms(n_terms):
    if n_terms < 1:
        raise DomainError("n_terms", f"must be >= 1, got {n_terms!r}")


_EPS = 2.0 ** -52


def _sum_terms(terms):
    """fsum of log-form terms plus a bound on its floating-point error.

    A term exp(L) with L carrying absolute error ~ c·eps·(1 + |parts of L|)
    has relative error of that size; fsum adds at most half an ulp.
    """
    values = []
    err = 0.0
    for t, scale in terms:
        v = float(t)
        values.append(v)
        err += abs(v) * 4.0 * _EPS * (4.0 + scale)
    total = math.fsum(values)
    return total, err + _EPS * abs(total)


def _cdf_terms(x, alpha, theta, n_terms):
    lx = abs(math.log(x))
    for n in range(1, n_terms):
        scale = abs(math.lgamma(alpha * n)) + math.lgamma(n + 1.0) + alpha * n * lx
        yield series_term_log(n, alpha, theta, x), scale


def cdf_tail_sum(x: float, alpha: float, theta: float, n_terms: int = DEFAULT_TERMS) -> float:
    """Partial sum G_N(x) approximating 1 - G(x) for x > 0.

    Terms are built in log space and summed with :func:`math.fsum`, so
    overflow of Γ(αn) and cancellation among terms are both harmless.
    """
    _check_theta(alpha, theta)
    _check_x(x)
    _check_terms(n_terms)
    return _sum_terms(_cdf_terms(x, alpha, theta, n_terms))[0]


def _log_bound(x, alpha, n_terms, shift):
    # log of x^{-αN-s}/(πN!) (Γ(αN+s) + x^{-α} Γ(α(N+1)+s)) with s = shift
    big_n = n_terms
    lx = math.log(x)
    a = log_gamma(alpha * big_n + shift)
    b = -alpha * lx + log_gamma(alpha * (big_n + 1) + shift)
    hi, lo = max(a, b), min(a, b)
    return -(alpha * big_n + shift) * lx - LOG_PI - math.lgamma(big_n + 1.0) + hi + math.log1p(math.exp(lo - hi))


def cdf_remainder_bound(x: float, alpha: float, n_terms: int = DEFAULT_TERMS) -> float:
    """Upper bound on |1 - G(x) - G_N(x)| for x > 0."""
    _check_x(x)
    _check_terms(n_terms)
    return math.exp(_log_bound(x, alpha, n_terms, 0.0))


def pdf_remainder_bound(x: float, alpha: float, n_terms: int = DEFAULT_TERMS) -> float:
    """Upper bound on |g(x) - g_N(x)| for x > 0."""
    _check_x(x)
    _check_terms(n_terms)
    return math.exp(_log_bound(x, alpha, n_terms, 1.0))


def cdf_series(x: float, alpha: float, theta: float, n_terms: int = DEFAULT_TERMS) -> CertifiedValue:
    """cdf of the standard law from the N-term tail series.

    ``x`` is a coordinate of the standard (λ = 1) law and may be negative.
    The result is only as good as its bound; no threshold is enforced here.
    """
    s = sign(x)
    if s == 0:
        raise DomainError("x", "the tail series is undefined at x = 0")
    theta_eff = theta * s
    _check_theta(alpha, theta_eff)
    _check_terms(n_terms)
    tail, rounding = _sum_terms(_cdf_terms(abs(x), alpha, theta_eff, n_terms))
    bound = cdf_remainder_bound(abs(x), alpha, n_terms)
    if s > 0:
        value, complement = 1.0 - tail, tail
    else:
        value, complement = tail, 1.0 - tail
    # the final 1 - tail adds half an ulp of a number below 1
    return CertifiedValue(value, bound, Method.SERIES_TAIL, n_terms, complement,
                          rounding=rounding + _EPS)


def pdf_tail_series(x: float, alpha: float, theta: float, n_terms: int = DEFAULT_TERMS) -> CertifiedValue:
    """Density of the standard law from the N-term tail series."""
    s = sign(x)
    if s == 0:
        raise DomainError("x", "the tail series is undefined at x = 0")
    xa = abs(x)
    theta_eff = theta * s
    _check_theta(alpha, theta_eff)
    _check_terms(n_terms)
    lx = abs(math.log(xa))
    terms = ((pdf_term_log(n, alpha, theta_eff, xa),
              abs(math.lgamma(alpha * n + 1.0)) + math.lgamma(n + 1.0) + (alpha * n + 1.0) * lx)
             for n in range(n_terms))
    value, rounding = _sum_terms(terms)
    return CertifiedValue(value, pdf_remainder_bound(xa, alpha, n_terms), Method.SERIES_TAIL,
                          n_terms, rounding=rounding)


def convergence_regime(alpha: float, x_abs: float | None = None) -> Regime:
    """Classify the behaviour of the tail series as N → ∞.

    For α = 1 the series converges only for |x| > 1; checking ``x_abs``
    is left to the caller.
    """
    if alpha < 1.0:
        return Regime.CONVERGENT_ALL_X
    if alpha == 1.0:
        return Regime.CONVERGENT_BEYOND_ONE
    return Regime.ASYMPTOTIC_ONLY
