"""Parameter validation, scale reduction and the inversion symmetry.

A strictly stable law in form C has the characteristic function

    ĝ(t; α, θ, λ) = exp(-λ |t|^α exp(-iπαθ sign(t) / 2)),

with 0 < α ≤ 2, |θ| ≤ min(1, 2/α - 1) and λ > 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ContractError, DomainError

# Relative slack when comparing θ to 2/α - 1, so that e.g. θ = 1/3 at
# α = 1.5 is not rejected by a rounding of the bound itself.
_THETA_SLACK = 8 * 2.0 ** -52


@dataclass(frozen=True)
class StableParams:
    """Validated (α, θ, λ) triple of a strictly stable law."""

    alpha: float
    theta: float
    lam: float = 1.0

    def __post_init__(self):
        _check(self.alpha, self.theta, self.lam)

    @property
    def theta_bound(self) -> float:
        return theta_bound(self.alpha)


@dataclass(frozen=True)
class StandardizedQuery:
    """A query point folded onto x ≥ 0 of the standard (λ = 1) law."""

    x_std: float
    theta_eff: float
    sign_x: int


def theta_bound(alpha: float) -> float:
    return min(1.0, 2.0 / alpha - 1.0)


def _check(alpha, theta, lam):
    for name, v in (("alpha", alpha), ("theta", theta), ("lambda", lam)):
        if not math.isfinite(v):
            raise DomainError(name, f"must be finite, got {v!r}")
    if not 0.0 < alpha <= 2.0:
        raise DomainError("alpha", f"must lie in (0, 2], got {alpha!r}")
    bound = theta_bound(alpha)
    if abs(theta) > bound * (1.0 + _THETA_SLACK):
        raise DomainError(
            "theta", f"|theta| must not exceed min(1, 2/alpha - 1) = {bound:.17g}, got {theta!r}"
        )
    if not lam > 0.0:
        raise DomainError("lambda", f"must be positive, got {lam!r}")


def validate(alpha: float, theta: float, lam: float = 1.0) -> StableParams:
    """Return a :class:`StableParams` or raise :class:`DomainError`.

    Out-of-domain values are rejected, never clamped.
    """
    return StableParams(float(alpha), float(theta), float(lam))


def sign(x: float) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def standardize(params: StableParams, x: float) -> StandardizedQuery:
    """Fold ``x`` onto the positive half-line of the standard law.

    Since ĝ(t; α, θ, λ) = ĝ(t λ^{1/α}; α, θ, 1), the law with scale λ is that
    of λ^{1/α} Y with Y standard, hence G(x; λ) = G(x λ^{-1/α}; 1).
    The inversion property G(-x, θ) = 1 - G(x, -θ) then lets every
    evaluation use |x| together with θ* = θ sign(x).
    """
    s = sign(x)
    x_std = abs(x) if params.lam == 1.0 else abs(x) * params.lam ** (-1.0 / params.alpha)
    theta_eff = params.theta * s if s != 0 else params.theta
    return StandardizedQuery(x_std=x_std, theta_eff=theta_eff, sign_x=s)


def apply_inversion(g_plus: float, sign_x: int, tol: float = 1e-12) -> float:
    """Map a cdf value computed at (|x|, θ*) back to the original sign of x.

    For ``sign_x = -1`` the value returned is ``1 - g_plus``. ``sign_x = 0``
    is refused: the closed form at zero must be used instead.
    """
    if not -tol <= g_plus <= 1.0 + tol:
        raise ContractError(f"g_plus must lie in [0, 1], got {g_plus!r}")
    g_plus = min(max(g_plus, 0.0), 1.0)
    if sign_x == 1:
        return g_plus
    if sign_x == -1:
        return 1.0 - g_plus
    raise ContractError("sign_x = 0 has no inversion; use the closed form at x = 0")
