"""Hybrid evaluation of the cdf (and density tail) on the whole real line.

Routing for the cdf, first match wins:

1. x = 0            -> (1 - θ)/2
2. α = 1            -> generalized Cauchy closed form
3. θ* = ±1          -> quadrature (the tail series excludes these laws)
4. |x_std| ≥ x_ε^N  -> tail series, certified to ε by its remainder bound
5. otherwise        -> quadrature, with an error estimate only

Very small |x_std| is also served by quadrature but flagged: a dedicated
small-x expansion is not part of this package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import closed_forms, quadrature, tail_series, threshold
from .errors import BracketError, DomainError, OutOfValidatedRange, QuadratureFailure
from .params import StableParams, standardize
from .quadrature import QuadratureSpec
from .tail_series import Method


@dataclass(frozen=True)
class EvalPolicy:
    n_terms: int = tail_series.DEFAULT_TERMS
    epsilon: float = 1e-5
    quad_spec: QuadratureSpec = field(default_factory=QuadratureSpec)
    small_x_warning_threshold: float = 1e-4

    def __post_init__(self):
        if self.n_terms < 2:
            raise DomainError("n_terms", f"must be >= 2, got {self.n_terms!r}")
        if not self.epsilon > 0.0:
            raise DomainError("epsilon", f"must be positive, got {self.epsilon!r}")


@dataclass(frozen=True)
class EvalReport:
    """Outcome of one evaluation.

    ``threshold_used`` is x_ε^N expressed in the caller's units, i.e.
    already multiplied by λ^{1/α}. ``complement`` is 1 - value without
    cancellation (cdf queries only).
    """

    x: float
    params: StableParams
    value: float
    bound_or_estimate: float
    bound_is_rigorous: bool
    method: Method
    threshold_used: float | None = None
    warnings: tuple[str, ...] = ()
    complement: float | None = None


def _scale(params):
    return 1.0 if params.lam == 1.0 else params.lam ** (1.0 / params.alpha)


def _threshold(solver, alpha, policy):
    # a root below the bracket means the bound is already under ε at the
    # bracket's lower end, and the bound only decreases beyond it
    try:
        return solver(alpha, policy.n_terms, policy.epsilon).x_eps
    except BracketError as exc:
        if exc.side == "below":
            return exc.edge
        return math.inf


def cdf(params: StableParams, x: float, policy: EvalPolicy | None = None) -> EvalReport:
    """Distribution function G(x; α, θ, λ)."""
    policy = policy or EvalPolicy()
    x = float(x)
    if math.isnan(x):
        raise DomainError("x", "must not be NaN")
    alpha, theta = params.alpha, params.theta
    q = standardize(params, x)

    if q.sign_x == 0:
        v = closed_forms.cdf_at_zero(theta)
        return EvalReport(x, params, v, 0.0, True, Method.CLOSED_FORM_ZERO, complement=1.0 - v)

    if alpha == 1.0:
        v = closed_forms.cdf_alpha1(math.copysign(q.x_std, x), theta)
        return EvalReport(x, params, v, 0.0, True, Method.CLOSED_FORM_ALPHA1, complement=1.0 - v)

    if math.isinf(q.x_std):
        v = 1.0 if x > 0 else 0.0
        return EvalReport(x, params, v, 0.0, True, Method.SERIES_TAIL, complement=1.0 - v)

    warns = []
    x_eps = None
    if abs(q.theta_eff) < 1.0:
        x_eps = _threshold(threshold.solve_threshold, alpha, policy)
        if q.x_std >= x_eps:
            r = tail_series.cdf_series(math.copysign(q.x_std, x), alpha, theta, policy.n_terms)
            value = min(max(r.value, 0.0), 1.0)
            complement = min(max(r.complement, 0.0), 1.0)
            return EvalReport(x, params, value, r.total_bound, True, Method.SERIES_TAIL,
                              x_eps * _scale(params), (), complement)

    if q.x_std < policy.small_x_warning_threshold:
        warns.append(f"|x| = {q.x_std:.3g} (standardized) is in the small-x regime; "
                     "value comes from quadrature without a small-x expansion")
    try:
        r = quadrature.cdf_integral(math.copysign(q.x_std, x), alpha, theta, policy.quad_spec)
    except QuadratureFailure as exc:
        hint = " raise n_terms so that the certified series covers this point" if x_eps else ""
        raise QuadratureFailure(f"{exc};{hint}", exc.value, exc.estimate) from exc
    warns.extend(r.notes)
    thr = x_eps * _scale(params) if x_eps is not None and math.isfinite(x_eps) else None
    return EvalReport(x, params, r.value, r.bound, r.rigorous, r.method, thr, tuple(warns), r.complement)


def pdf_tail(params: StableParams, x: float, policy: EvalPolicy | None = None) -> EvalReport:
    """Density g(x; α, θ, λ) from the tail series, where its bound is ≤ ε.

    There is no mid-range density path; closer to the origin the call is
    refused with :class:`OutOfValidatedRange`.
    """
    policy = policy or EvalPolicy()
    x = float(x)
    alpha, theta = params.alpha, params.theta
    q = standardize(params, x)
    scale = _scale(params)
    if alpha == 1.0:
        v = closed_forms.pdf_alpha1(math.copysign(q.x_std, x), theta) / scale
        return EvalReport(x, params, v, 0.0, True, Method.CLOSED_FORM_ALPHA1)
    if q.sign_x == 0:
        raise OutOfValidatedRange("the density tail series does not cover x = 0")
    if abs(q.theta_eff) >= 1.0:
        raise OutOfValidatedRange("the density tail series excludes theta* = ±1")
    x_eps = _threshold(threshold.solve_pdf_threshold, alpha, policy)
    if q.x_std < x_eps:
        raise OutOfValidatedRange(
            f"|x| = {q.x_std:.6g} (standardized) is below the density threshold {x_eps:.6g}")
    r = tail_series.pdf_tail_series(math.copysign(q.x_std, x), alpha, theta, policy.n_terms)
    return EvalReport(x, params, r.value / scale, r.total_bound / scale, True, Method.SERIES_TAIL,
                      x_eps * scale)
