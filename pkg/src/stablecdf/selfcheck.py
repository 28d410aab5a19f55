"""Fast invariant checks run by ``stablecdf selfcheck``."""

from __future__ import annotations

import math

from . import closed_forms, evaluator, quadrature, tail_series, threshold
from .params import validate

REFERENCE_THRESHOLDS = {0.5: 0.088, 0.7: 0.402, 0.9: 1.000, 1.1: 1.860, 1.4: 3.552, 1.7: 5.612}


def _thresholds():
    worst = max(abs(threshold.solve_threshold(a, 30, 1e-5).x_eps / ref - 1.0)
                for a, ref in REFERENCE_THRESHOLDS.items())
    return worst <= 0.02, f"max relative deviation {worst:.2e} (N=30, eps=1e-5)"


def _alpha1_series():
    worst = 0.0
    for theta in (0.0, 0.5, -0.5):
        for x in (1.5, 2.0, 5.0, 10.0):
            r = tail_series.cdf_series(x, 1.0, theta, 60)
            err = abs(r.value - closed_forms.cdf_alpha1(x, theta))
            # closed form: atan, a division and 1 - t, a few ulps at most
            if err > r.total_bound + 4 * 2.0 ** -52:
                return False, f"bound violated at theta={theta}, x={x}"
            worst = max(worst, err)
    return True, f"max error {worst:.2e} within remainder bounds"


def _inversion():
    worst = 0.0
    for alpha, theta in ((0.6, 0.4), (1.3, 0.2), (1.8, -0.1)):
        for x in (0.3, 2.0, 20.0):
            a = evaluator.cdf(validate(alpha, theta), -x)
            b = evaluator.cdf(validate(alpha, -theta), x)
            gap = abs(a.value + b.value - 1.0)
            if gap > 2 * (a.bound_or_estimate + b.bound_or_estimate) + 1e-12:
                return False, f"gap {gap:.2e} at alpha={alpha}, theta={theta}, x={x}"
            worst = max(worst, gap)
    return True, f"max |G(-x,θ) + G(x,-θ) - 1| = {worst:.2e}"


def _gaussian():
    worst = max(abs(quadrature.cdf_integral(x, 2.0, 0.0).value
                    - 0.5 * math.erfc(-x / 2.0)) for x in (-5, -2, -1, 0, 1, 2, 5))
    return worst <= 1e-7, f"max error vs Phi(x/sqrt 2) {worst:.2e}"


def run():
    return [(name, *fn()) for name, fn in (("threshold-table", _thresholds),
                                           ("alpha1-series", _alpha1_series),
                                           ("inversion", _inversion),
                                           ("gaussian", _gaussian))]
