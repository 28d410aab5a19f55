"""Exact expressions: the α = 1 (generalized Cauchy) law and the value at 0."""

from __future__ import annotations

import math

from .errors import DomainError


def _sincos_half_pi(theta):
    # sin(πθ/2), cos(πθ/2) with exact values at θ = 0, ±1
    if theta == 0.0:
        return 0.0, 1.0
    if abs(theta) == 1.0:
        return math.copysign(1.0, theta), 0.0
    return math.sin(math.pi * theta / 2.0), math.cos(math.pi * theta / 2.0)


def cdf_alpha1(x: float, theta: float) -> float:
    """cdf of the α = 1 law: 1/2 + arctan((x - sin(πθ/2)) / cos(πθ/2)) / π.

    At |θ| = 1 the law is a point mass at sin(πθ/2) = ±1 and the step
    function limit is returned (1/2 exactly at the atom).
    """
    if abs(theta) > 1.0:
        raise DomainError("theta", f"|theta| must not exceed 1 for alpha = 1, got {theta!r}")
    s, c = _sincos_half_pi(theta)
    d = x - s
    if c == 0.0:
        return 1.0 if d > 0 else 0.0 if d < 0 else 0.5
    z = d / c
    # arctan of the reciprocal keeps the tails free of cancellation
    if z > 1.0:
        return 1.0 - math.atan(1.0 / z) / math.pi
    if z < -1.0:
        return -math.atan(1.0 / z) / math.pi
    return 0.5 + math.atan(z) / math.pi


def cdf_at_zero(theta: float) -> float:
    """G(0; α, θ) = (1 - θ)/2 for every admissible α."""
    return (1.0 - theta) / 2.0


def pdf_alpha1(x: float, theta: float) -> float:
    """Density of the α = 1 law, cos(πθ/2) / (π (x² - 2x sin(πθ/2) + 1))."""
    if abs(theta) >= 1.0:
        raise DomainError("theta", "the alpha = 1 density does not exist at |theta| = 1")
    s, c = _sincos_half_pi(theta)
    # x² - 2xs + 1 = (x - s)² + c², which cannot cancel
    return c / (math.pi * ((x - s) ** 2 + c * c))
