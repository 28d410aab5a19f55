"""Row builders behind the ``errmap`` and ``table`` subcommands."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import closed_forms, quadrature, tail_series, threshold
from .errors import DomainError, QuadratureFailure
from .params import validate
from .quadrature import QuadratureSpec

DEVIATION = 1e-3

ERRMAP_COLUMNS = ("x", "n_terms", "series_value", "reference_value", "abs_error",
                  "remainder_bound", "threshold")
TABLE_COLUMNS = ("alpha", "theta", "x", "series_value", "series_tail", "series_bound",
                 "series_certified", "quad_value", "quad_tail", "quad_estimate",
                 "abs_diff", "rel_tail_diff", "quad_status")


@dataclass(frozen=True)
class GridSpec:
    x_min: float
    x_max: float
    points: int
    spacing: str = "log"

    def __post_init__(self):
        if not self.x_min < self.x_max:
            raise DomainError("grid", "x_min must be below x_max")
        if self.points < 2:
            raise DomainError("grid", "points must be >= 2")
        if self.spacing not in ("linear", "log"):
            raise DomainError("grid", f"unknown spacing {self.spacing!r}")
        if self.spacing == "log" and not self.x_min > 0:
            raise DomainError("grid", "log spacing needs x_min > 0")

    def values(self) -> np.ndarray:
        if self.spacing == "log":
            return np.geomspace(self.x_min, self.x_max, self.points)
        return np.linspace(self.x_min, self.x_max, self.points)


def _reference(x, alpha, theta, spec):
    if alpha == 1.0:
        v = closed_forms.cdf_alpha1(x, theta)
        return v, 1.0 - v
    r = quadrature.cdf_integral(x, alpha, theta, spec)
    return r.value, r.complement


def errmap_rows(alpha, theta, grid: GridSpec, n_list, epsilon=1e-5, spec=None):
    """Series error against the reference, one row per (N, x).

    The reference is the α = 1 closed form, else quadrature. Errors are
    taken between the tails (1 - G for x > 0, G for x < 0), so they stay
    meaningful where G itself rounds to 1.
    """
    if not n_list:
        raise DomainError("n_list", "at least one term count is required")
    validate(alpha, theta)
    spec = spec or QuadratureSpec()
    xs = grid.values()
    refs = {}
    for n in n_list:
        x_eps = threshold.solve_threshold(alpha, int(n), epsilon).x_eps
        for x in xs:
            x = float(x)
            if x == 0.0:
                continue
            s = tail_series.cdf_series(x, alpha, theta, int(n))
            if x not in refs:
                refs[x] = _reference(x, alpha, theta, spec)
            ref_v, ref_c = refs[x]
            err = abs(s.complement - ref_c) if x > 0 else abs(s.value - ref_v)
            yield {"x": x, "n_terms": int(n), "series_value": s.value, "reference_value": ref_v,
                   "abs_error": err, "remainder_bound": s.bound, "threshold": x_eps}


def table_rows(alphas, theta, grid: GridSpec, n_terms=30, epsilon=1e-5, spec=None):
    """Series against quadrature over a grid, per α.

    ``quad_status`` is ``failed`` when quadrature raised, ``deviates`` when
    its tail differs from a certified series tail by more than 0.1 %
    relative, else ``ok``.
    """
    spec = spec or QuadratureSpec(policy="plain")
    for alpha in alphas:
        validate(alpha, theta)
        x_eps = threshold.solve_threshold(alpha, n_terms, epsilon).x_eps
        for x in grid.values():
            x = float(x)
            row = {"alpha": alpha, "theta": theta, "x": x}
            if x == 0.0:
                s_val = s_tail = s_bound = math.nan
                certified = False
            else:
                s = tail_series.cdf_series(x, alpha, theta, n_terms)
                s_val, s_bound = s.value, s.bound
                s_tail = s.complement if x > 0 else s.value
                certified = abs(x) >= x_eps and s_bound <= epsilon
            try:
                if alpha == 1.0:
                    q_val = closed_forms.cdf_alpha1(x, theta)
                    q_est, q_comp = 0.0, 1.0 - q_val
                else:
                    r = quadrature.cdf_integral(x, alpha, theta, spec)
                    q_val, q_est, q_comp = r.value, r.bound, r.complement
                q_tail = q_comp if x > 0 else q_val
                status = "ok"
            except QuadratureFailure:
                q_val = q_tail = q_est = math.nan
                status = "failed"
            abs_diff = abs(q_val - s_val)
            rel = abs(q_tail - s_tail) / s_tail if s_tail and s_tail > 0 else math.nan
            if status == "ok" and certified and rel > DEVIATION:
                status = "deviates"
            row.update(series_value=s_val, series_tail=s_tail, series_bound=s_bound,
                       series_certified=certified, quad_value=q_val, quad_tail=q_tail,
                       quad_estimate=q_est, abs_diff=abs_diff, rel_tail_diff=rel, quad_status=status)
            yield row


def divergence_points(rows) -> dict[float, float | None]:
    """First x per α where quadrature fails or deviates from the series."""
    out: dict[float, float | None] = {}
    for row in rows:
        out.setdefault(row["alpha"], None)
        if out[row["alpha"]] is None and row["quad_status"] != "ok":
            out[row["alpha"]] = row["x"]
    return out
