"""Log-gamma and sign-aware log-space products for the tail series terms."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

LOG_PI = math.log(math.pi)


@dataclass(frozen=True)
class LogMagnitude:
    """A real number stored as ``sign * exp(log_abs)``.

    ``sign == 0`` represents an exact zero, in which case ``log_abs`` is
    ``-inf`` and carries no information.
    """

    log_abs: float
    sign: int

    def __mul__(self, other: "LogMagnitude") -> "LogMagnitude":
        s = self.sign * other.sign
        if s == 0:
            return ZERO
        return LogMagnitude(self.log_abs + other.log_abs, s)

    def __float__(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_abs)

    @classmethod
    def of(cls, value: float) -> "LogMagnitude":
        if value == 0.0:
            return ZERO
        return cls(math.log(abs(value)), 1 if value > 0 else -1)


ZERO = LogMagnitude(-math.inf, 0)


def log_gamma(z: float) -> float:
    """Natural log of Γ(z) for real z > 0."""
    if not z > 0.0:
        raise DomainError("z", f"log_gamma needs z > 0, got {z!r}")
    return math.lgamma(z)


def sin_pi(t: float) -> float:
    """sin(πt) with exact zeros at integer t and exact reduction mod 2."""
    if t < 0.0:
        return -sin_pi(-t)
    r = math.fmod(t, 2.0)
    if r == 0.0 or r == 1.0:
        return 0.0
    if r > 1.0:
        return -_sin_pi_unit(r - 1.0)
    return _sin_pi_unit(r)


def _sin_pi_unit(r):
    # r in (0, 1); fold onto (0, 1/2] so the argument of sin stays small
    if r > 0.5:
        r = 1.0 - r
    return math.sin(math.pi * r)


def series_term_log(n: int, alpha: float, theta: float, x: float) -> LogMagnitude:
    """n-th term of the cdf tail series in log form.

    The term is (-1)^{n+1} Γ(αn) sin(παn(1+θ)/2) x^{-αn} / (π n!).
    """
    s = sin_pi(alpha * n * (1.0 + theta) / 2.0)
    if s == 0.0:
        return ZERO
    log_abs = (
        log_gamma(alpha * n)
        - math.lgamma(n + 1.0)
        - alpha * n * math.log(x)
        + math.log(abs(s))
        - LOG_PI
    )
    sgn = (1 if n % 2 == 1 else -1) * (1 if s > 0 else -1)
    return LogMagnitude(log_abs, sgn)


def pdf_term_log(n: int, alpha: float, theta: float, x: float) -> LogMagnitude:
    """n-th term of the density tail series: the cdf term times αn / x."""
    if n == 0:
        return ZERO
    t = series_term_log(n, alpha, theta, x)
    if t.sign == 0:
        return ZERO
    return LogMagnitude(t.log_abs + math.log(alpha * n) - math.log(x), t.sign)
