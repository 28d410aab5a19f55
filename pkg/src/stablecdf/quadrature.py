"""cdf of the standard law from its definite-integral representation.

For α ≠ 1 and x > 0,

    G⁺(x) = 1 - (1+θ)/4 · (1 + sign(1-α))
            + sign(1-α)/π ∫_{-πθ/2}^{π/2} exp(-x^{α/(α-1)} U(φ)) dφ,

    U(φ) = (sin(α(φ + πθ/2)) / cos φ)^{α/(1-α)} · cos(φ(1-α) - παθ/2) / cos φ.

The integrand is monotone in φ and runs between 0 and 1, with the
transition squeezed against an endpoint when x is very small or large.

Implementation notes:

* The upper tail 1 - G⁺ is integrated directly. For α > 1 it is
  (1/π)∫ e^{-s} dφ, for α < 1 it is (1/π)∫ (1 - e^{-s}) dφ, with
  s = x^{α/(α-1)} U. Far tails therefore keep full relative precision.
* With ψ = φ + πθ/2 ∈ (0, ψ_max), ψ_max = π(1+θ)/2, the lower half of the
  interval is integrated in ψ and the upper half in δ = ψ_max - ψ. Every
  sine and cosine is rewritten so that its argument is a sum of
  non-negative terms, so nothing cancels near either endpoint.
* ``policy="split"`` (default) adds breakpoints where log s crosses a few
  fixed levels, so the adaptive rule always sees the transition.
  ``policy="plain"`` is a single adaptive Gauss-Kronrod pass on each half
  and fails silently once the transition falls between the first nodes.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .closed_forms import cdf_alpha1, cdf_at_zero
from .errors import DomainError, QuadratureFailure
from .params import theta_bound
from .tail_series import CertifiedValue, Method

NEAR_ONE_DELEGATE = 1e-8
NEAR_ONE_WARN = 1e-3

# Gauss-Kronrod 15-point nodes and weights (QUADPACK qk15)
_XGK = np.array([
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0,
])
_WGK = np.array([
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
])
_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])            # 15 nodes on [-1, 1]
_W_K = np.concatenate([_WGK[:-1], _WGK[::-1]])
_W_G = np.zeros(15)
_W_G[[1, 3, 5]] = _WG[:3]
_W_G[[13, 11, 9]] = _WG[:3]
_W_G[7] = _WG[3]
_EPS = np.finfo(float).eps

_SPLIT_LEVELS = (-8.0, -4.0, 0.0, 3.0, 4.5)
_EDGE = 1e-300


@dataclass(frozen=True)
class QuadratureSpec:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_subdivisions: int = 200
    endpoint_margin: float = 1e-12
    policy: str = "split"

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise DomainError("tolerance", "rel_tol and abs_tol must be positive")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions", "must be >= 1")
        if not 0.0 < self.endpoint_margin < 1e-6:
            raise DomainError("endpoint_margin", "must lie in (0, 1e-6)")
        if self.policy not in ("split", "plain"):
            raise DomainError("policy", f"unknown policy {self.policy!r}")


def gk15(f, a: float, b: float) -> tuple[float, float]:
    """One 15-point Kronrod panel with the QUADPACK error heuristic."""
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    fv = f(center + half * _NODES)
    res_k = float(_W_K @ fv)
    res_g = float(_W_G @ fv)
    mean = 0.5 * res_k
    res_abs = float(_W_K @ np.abs(fv))
    res_asc = float(_W_K @ np.abs(fv - mean))
    err = abs((res_k - res_g) * half)
    res_asc *= abs(half)
    res_abs *= abs(half)
    if res_asc != 0.0 and err != 0.0:
        err = res_asc * min(1.0, (200.0 * err / res_asc) ** 1.5)
    if res_abs > np.finfo(float).tiny / (50.0 * _EPS):
        err = max(50.0 * _EPS * res_abs, err)
    return res_k * half, err


def adaptive_gk15(pieces, rel_tol, abs_tol, max_subdivisions):
    """Globally adaptive bisection over ``pieces = [(f, a, b), ...]``.

    Intervals are refined largest-error first until the summed error meets
    max(abs_tol, rel_tol·|I|). Ties are broken by insertion order so the
    result is deterministic. Raises :class:`QuadratureFailure` when the
    number of intervals reaches ``max_subdivisions``.
    """
    heap = []
    counter = 0
    for f, a, b in pieces:
        if b > a:
            v, e = gk15(f, a, b)
            heap.append((-e, counter, f, a, b, v))
            counter += 1
    heapq.heapify(heap)
    while True:
        total = math.fsum(item[5] for item in heap)
        err = math.fsum(-item[0] for item in heap)
        if err <= max(abs_tol, rel_tol * abs(total)):
            return total, err
        if len(heap) >= max_subdivisions:
            raise QuadratureFailure(
                f"subdivision limit {max_subdivisions} reached (estimate {err:.3g})",
                value=total, estimate=err)
        _, _, f, a, b, _ = heapq.heappop(heap)
        mid = 0.5 * (a + b)
        for lo, hi in ((a, mid), (mid, b)):
            v, e = gk15(f, lo, hi)
            heapq.heappush(heap, (-e, counter, f, lo, hi, v))
            counter += 1


class _Kernel:
    """log U and the tail integrand in the two endpoint-local variables."""

    def __init__(self, alpha, theta):
        self.alpha = alpha
        self.theta = theta
        self.psi_max = math.pi * (1.0 + theta) / 2.0
        self.c0 = math.pi * (1.0 - theta) / 2.0
        self.c1 = max(0.0, math.pi * (1.0 - alpha * (1.0 + theta) / 2.0))
        self.power = alpha / (1.0 - alpha)

    def log_u_lower(self, psi):
        a = self.alpha
        with np.errstate(divide="ignore", invalid="ignore"):
            la = np.log(np.sin(a * psi))
            lb = np.log(np.sin(psi + self.c0))
            lc = np.log(np.sin(self.c0 + psi * (1.0 - a)))
        return self._combine(la, lb, lc)

    def log_u_upper(self, delta):
        a = self.alpha
        with np.errstate(divide="ignore", invalid="ignore"):
            la = np.log(np.sin(self.c1 + a * delta))
            lb = np.log(np.sin(delta))
            lc = np.log(np.sin(self.c1 + delta * (a - 1.0)))
        return self._combine(la, lb, lc)

    def _combine(self, la, lb, lc):
        with np.errstate(invalid="ignore"):
            out = self.power * (la - lb) + lc - lb
        # -inf - (-inf) only arises exactly at an endpoint; treat as the
        # limit U -> 0 (integrand at its flat end)
        return np.where(np.isnan(out), -np.inf, out)


class _Tail:
    """Upper tail 1 - G⁺(x) as (1/π) times an integral over both halves."""

    def __init__(self, x, alpha, theta):
        self.k = _Kernel(alpha, theta)
        self.log_scale = alpha / (alpha - 1.0) * math.log(x)
        self.heavy = alpha < 1.0

    def _integrand(self, log_s):
        with np.errstate(over="ignore"):
            s = np.exp(log_s)
        if self.heavy:
            return -np.expm1(-s)
        return np.exp(-s)

    def log_s_lower(self, psi):
        return self.log_scale + self.k.log_u_lower(psi)

    def log_s_upper(self, delta):
        return self.log_scale + self.k.log_u_upper(delta)

    def f_lower(self, psi):
        return self._integrand(self.log_s_lower(np.asarray(psi, dtype=float)))

    def f_upper(self, delta):
        return self._integrand(self.log_s_upper(np.asarray(delta, dtype=float)))


def _breakpoints(log_s, lo, hi):
    """Points in (lo, hi) where the monotone ``log_s`` crosses split levels."""
    if not hi > lo > 0.0:
        return []
    g = lambda u: float(log_s(np.array([math.exp(u)]))[0])
    ulo, uhi = math.log(lo), math.log(hi)
    glo, ghi = g(ulo), g(uhi)
    pts = []
    for level in _SPLIT_LEVELS:
        if (glo - level) * (ghi - level) < 0.0 and math.isfinite(glo) and math.isfinite(ghi):
            pts.append(math.exp(brentq(lambda u: g(u) - level, ulo, uhi, xtol=1e-12)))
    return sorted(pts)


def _graded(cuts, ratio=8.0):
    # geometric sub-cuts inside wide pieces: the integrand varies like a
    # power of the endpoint distance, so each piece then sees one scale
    out = [cuts[0]]
    for a, b in zip(cuts, cuts[1:]):
        t = a * ratio
        while t < b / 2.0:
            out.append(t)
            t *= ratio
        out.append(b)
    return out


def _edge(f, margin):
    # the integrand is monotone, so on [0, margin] it lies between its limit
    # at 0 and its value at margin: take the midpoint, half the gap as error
    lim = float(f(np.array([_EDGE]))[0])
    at = float(f(np.array([margin]))[0])
    return margin * 0.5 * (lim + at), margin * 0.5 * abs(at - lim)


def _tail_integral(x, alpha, theta, spec):
    tail = _Tail(x, alpha, theta)
    psi_max = tail.k.psi_max
    m = spec.endpoint_margin
    if psi_max <= 2.0 * m:
        return 0.0, 0.0
    h = 0.5 * psi_max
    lo_end, hi_end = h, psi_max - h
    pieces = []
    for f, log_s, end in ((tail.f_lower, tail.log_s_lower, lo_end),
                          (tail.f_upper, tail.log_s_upper, hi_end)):
        cuts = [m, end]
        if spec.policy == "split":
            cuts[1:1] = _breakpoints(log_s, m, end)
            cuts = _graded(cuts)
        pieces.extend((f, a, b) for a, b in zip(cuts, cuts[1:]))
    total, err = adaptive_gk15(pieces, spec.rel_tol * math.pi, spec.abs_tol * math.pi,
                               spec.max_subdivisions)
    e1, r1 = _edge(tail.f_lower, m)
    e2, r2 = _edge(tail.f_upper, m)
    return (total + e1 + e2) / math.pi, (err + r1 + r2) / math.pi


def _check(alpha, theta):
    if alpha == 1.0:
        raise DomainError("alpha", "the integral representation excludes alpha = 1")
    if not 0.0 < alpha <= 2.0:
        raise DomainError("alpha", f"must lie in (0, 2], got {alpha!r}")
    if abs(theta) > theta_bound(alpha) * (1.0 + 1e-15):
        raise DomainError("theta", f"|theta| exceeds min(1, 2/alpha - 1) for alpha={alpha}")


def u_kernel(phi: float, alpha: float, theta: float) -> float:
    """U(φ, α, θ) on the open interval (-πθ/2, π/2)."""
    _check(alpha, theta)
    lo, hi = -math.pi * theta / 2.0, math.pi / 2.0
    if not lo < phi < hi:
        raise DomainError("phi", f"must lie in ({lo}, {hi}), got {phi!r}")
    k = _Kernel(alpha, theta)
    psi = phi - lo
    if psi <= 0.5 * k.psi_max:
        lu = k.log_u_lower(np.array([psi]))[0]
    else:
        lu = k.log_u_upper(np.array([hi - phi]))[0]
    with np.errstate(over="ignore"):
        return float(np.exp(lu))


def integrand(phi, x: float, alpha: float, theta: float):
    """exp(-x^{α/(α-1)} U(φ)), vectorized over ``phi``."""
    _check(alpha, theta)
    phi = np.asarray(phi, dtype=float)
    k = _Kernel(alpha, theta)
    lo, hi = -math.pi * theta / 2.0, math.pi / 2.0
    psi = phi - lo
    lower = psi <= 0.5 * k.psi_max
    lu = np.where(lower, k.log_u_lower(psi), k.log_u_upper(hi - phi))
    log_s = alpha / (alpha - 1.0) * math.log(x) + lu
    with np.errstate(over="ignore"):
        return np.exp(-np.exp(log_s))


def _near_one_notes(alpha):
    if abs(alpha - 1.0) < NEAR_ONE_WARN:
        return (f"alpha={alpha} is within {NEAR_ONE_WARN} of 1; the exponent alpha/(alpha-1) "
                "magnifies rounding in the integral representation",)
    return ()


def cdf_positive_integral(x: float, alpha: float, theta: float,
                          spec: QuadratureSpec | None = None) -> CertifiedValue:
    """G⁺(x, α, θ) for x > 0 of the standard law.

    The bound is the adaptive rule's error estimate, not a proof.
    """
    spec = spec or QuadratureSpec()
    _check(alpha, theta)
    if not x > 0.0:
        raise DomainError("x", f"must be positive, got {x!r}")
    tail, err = _tail_integral(x, alpha, theta, spec)
    if tail < 0.0 or tail > 1.0:
        over = -tail if tail < 0.0 else tail - 1.0
        if over > spec.abs_tol:
            raise QuadratureFailure(f"tail integral {tail!r} outside [0, 1]", value=tail, estimate=err)
        tail = min(max(tail, 0.0), 1.0)
    return CertifiedValue(1.0 - tail, err, Method.QUADRATURE, 0, tail, _near_one_notes(alpha))


def cdf_integral(x: float, alpha: float, theta: float,
                 spec: QuadratureSpec | None = None) -> CertifiedValue:
    """G(x, α, θ) of the standard law on the whole line.

    x = 0 uses the exact value (1 - θ)/2; α within 1e-8 of 1 uses the
    α = 1 closed form, since the representation breaks down there.
    """
    if x == 0.0:
        v = cdf_at_zero(theta)
        return CertifiedValue(v, 0.0, Method.CLOSED_FORM_ZERO, 0, 1.0 - v)
    if abs(alpha - 1.0) <= NEAR_ONE_DELEGATE:
        v = cdf_alpha1(x, theta)
        return CertifiedValue(v, 0.0, Method.CLOSED_FORM_ALPHA1, 0, 1.0 - v,
                              (f"alpha={alpha} treated as 1",) if alpha != 1.0 else ())
    if x > 0.0:
        return cdf_positive_integral(x, alpha, theta, spec)
    pos = cdf_positive_integral(-x, alpha, -theta, spec)
    return CertifiedValue(pos.complement, pos.bound, Method.QUADRATURE, 0, pos.value, pos.notes)
