"""Threshold coordinate beyond which the N-term tail series meets accuracy ε.

The threshold x_ε^N solves

    x^{-αN} / (D N!) · (Γ(αN) + x^{-α} Γ(α(N+1))) = ε,

where D = π makes the left side the proved remainder bound. The literal
threshold equation in the source carries D = α instead; both are
available, π is the default.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from typing import Callable

from .errors import BracketError, DomainError
from .special import log_gamma

LOG_X_LO = math.log(1e-8)
LOG_X_HI = math.log(1e20)
MAX_ITER = 200


class Convention(str, enum.Enum):
    PI_FACTORIAL = "pi"
    ALPHA_FACTORIAL = "alpha"


@dataclass(frozen=True)
class ThresholdResult:
    x_eps: float
    alpha: float
    n_terms: int
    epsilon: float
    iterations: int
    residual: float
    denominator_convention: Convention


def log_lhs(log_x: float, alpha: float, n_terms: int, convention: Convention = Convention.PI_FACTORIAL,
            shift: float = 0.0) -> float:
    """Log of the left side of the threshold equation at x = exp(log_x).

    ``shift = 1`` gives the density bound x^{-αN-1}/(πN!)(Γ(αN+1) + ...).
    """
    big_n = n_terms
    d = math.pi if convention is Convention.PI_FACTORIAL else alpha
    a = log_gamma(alpha * big_n + shift)
    b = -alpha * log_x + log_gamma(alpha * (big_n + 1) + shift)
    hi, lo = max(a, b), min(a, b)
    return (-(alpha * big_n + shift) * log_x - math.log(d) - math.lgamma(big_n + 1.0)
            + hi + math.log1p(math.exp(lo - hi)))


def _bisect_log(f: Callable[[float], float], target: float, lo=LOG_X_LO, hi=LOG_X_HI):
    """Root of a strictly decreasing ``f`` on [lo, hi] by bisection in log x."""
    if f(lo) < target:
        raise BracketError(f"threshold lies below x = {math.exp(lo):.3g}", "below", math.exp(lo))
    if f(hi) > target:
        raise BracketError(f"threshold lies above x = {math.exp(hi):.3g}", "above", math.exp(hi))
    it = 0
    while it < MAX_ITER:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        it += 1
        if f(mid) > target:
            lo = mid
        else:
            hi = mid
    # closest endpoint of the final one-ulp bracket
    best = lo if abs(f(lo) - target) <= abs(f(hi) - target) else hi
    return best, it


def _check(alpha, n_terms, epsilon):
    if not 0.0 < alpha <= 2.0:
        raise DomainError("alpha", f"must lie in (0, 2], got {alpha!r}")
    if n_terms < 1:
        raise DomainError("n_terms", f"must be >= 1, got {n_terms!r}")
    if not epsilon > 0.0:
        raise DomainError("epsilon", f"must be positive, got {epsilon!r}")


@functools.lru_cache(maxsize=4096)
def solve_threshold(alpha: float, n_terms: int, epsilon: float,
                    convention: Convention = Convention.PI_FACTORIAL) -> ThresholdResult:
    """Solve for x_ε^N; cached, since the evaluator asks repeatedly."""
    convention = Convention(convention)
    _check(alpha, n_terms, epsilon)
    log_eps = math.log(epsilon)
    lx, it = _bisect_log(lambda t: log_lhs(t, alpha, n_terms, convention), log_eps)
    residual = abs(math.expm1(log_lhs(lx, alpha, n_terms, convention) - log_eps))
    return ThresholdResult(math.exp(lx), alpha, n_terms, epsilon, it, residual, convention)


@functools.lru_cache(maxsize=4096)
def solve_pdf_threshold(alpha: float, n_terms: int, epsilon: float) -> ThresholdResult:
    """Coordinate beyond which the density tail bound is at most ε."""
    _check(alpha, n_terms, epsilon)
    log_eps = math.log(epsilon)
    lx, it = _bisect_log(lambda t: log_lhs(t, alpha, n_terms, shift=1.0), log_eps)
    residual = abs(math.expm1(log_lhs(lx, alpha, n_terms, shift=1.0) - log_eps))
    return ThresholdResult(math.exp(lx), alpha, n_terms, epsilon, it, residual, Convention.PI_FACTORIAL)


def threshold_limit_behavior(alpha: float, epsilon: float, n_grid,
                             convention: Convention = Convention.PI_FACTORIAL) -> list[tuple[int, float]]:
    """Thresholds over an ascending grid of term counts.

    As N grows they tend to 0 for α < 1, to 1 for α = 1 and to ∞ for α > 1.
    """
    n_grid = list(n_grid)
    if any(b <= a for a, b in zip(n_grid, n_grid[1:])):
        raise DomainError("n_grid", "must be strictly ascending")
    return [(n, solve_threshold(alpha, n, epsilon, convention).x_eps) for n in n_grid]
