"""Quadrature for integrands with inverse-square-root endpoint behavior.

Both engines substitute x = mid + half*cos(theta), which turns the
sqrt((x_right - x)(x - x_left)) factor into half*sin(theta) exactly and
makes the theta-integrand smooth and even about both panel ends, where
the trapezoid rule converges superalgebraically.  Node counts double
from ``n_start`` until successive estimates agree.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import QuadratureError

__all__ = ["QuadratureResult", "sqrt_well_integral", "chebyshev_weighted_integral"]

DEFAULT_N_START = 64
DEFAULT_N_MAX = 1 << 16


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    nodes: int


def _doubling_trapezoid(f_theta, abs_tol, rel_tol, n_start, n_max, edge_half_sum=0.0):
    """Trapezoid on [0, pi] with node doubling.

    ``edge_half_sum`` carries (f(0) + f(pi))/2 for integrands whose limits
    at the panel ends do not vanish (a classically allowed region that
    reaches a domain endpoint); its weight halves with each refinement
    automatically.
    """
    n = n_start
    theta = np.linspace(0.0, np.pi, n + 1)
    total = (float(np.sum(f_theta(theta[1:-1]))) + edge_half_sum) * (np.pi / n)
    while n < n_max:
        mids = (np.arange(n) + 0.5) * (np.pi / n)
        new_sum = float(np.sum(f_theta(mids)))
        n *= 2
        refined = 0.5 * total + new_sum * (np.pi / n)
        diff = abs(refined - total)
        total = refined
        if diff <= max(abs_tol, rel_tol * abs(total)):
            return QuadratureResult(total, diff, n)
    # roundoff in the integrand can stall refinement just above the target;
    # accept if the change is still two orders below the working precision
    if diff <= 100.0 * max(abs_tol, rel_tol * abs(total)):
        return QuadratureResult(total, diff, n)
    raise QuadratureError(
        f"no convergence at {n_max} nodes (last change {diff:.3e})"
    )


def sqrt_well_integral(
    radicand,
    x_left: float,
    x_right: float,
    *,
    abs_tol: float = 1e-13,
    rel_tol: float = 1e-13,
    n_start: int = DEFAULT_N_START,
    n_max: int = DEFAULT_N_MAX,
) -> QuadratureResult:
    """Integral of sqrt(max(radicand(x), 0)) over [x_left, x_right].

    ``radicand`` must be vectorized, vanish linearly at both endpoints and
    be positive between them (tiny negative excursions from root-location
    roundoff are clipped).
    """
    if not x_right > x_left:
        return QuadratureResult(0.0, 0.0, 0)
    width = x_right - x_left
    half = 0.5 * width

    def f_theta(theta):
        # distance to x_left computed without cancellation near theta = pi
        c = np.cos(0.5 * theta)
        x = x_left + width * c * c
        g = np.maximum(radicand(x), 0.0)
        return half * np.sin(theta) * np.sqrt(g)

    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        # limits at the panel ends, linearly extrapolated: zero at a simple
        # turning point, finite when the allowed region reaches an endpoint
        eps = 1e-7
        f0 = 2.0 * float(f_theta(eps)) - float(f_theta(2.0 * eps))
        fpi = 2.0 * float(f_theta(np.pi - eps)) - float(f_theta(np.pi - 2.0 * eps))
        edge = 0.5 * (max(f0, 0.0) + max(fpi, 0.0))
        return _doubling_trapezoid(f_theta, abs_tol, rel_tol, n_start, n_max, edge)


def chebyshev_weighted_integral(
    weight,
    y1: float,
    y2: float,
    *,
    abs_tol: float = 1e-14,
    rel_tol: float = 1e-13,
    n_start: int = DEFAULT_N_START,
    n_max: int = DEFAULT_N_MAX,
) -> QuadratureResult:
    """Integral of sqrt((y2-y)(y-y1)) / weight(y) over [y1, y2].

    The square-root factor is eliminated analytically by the substitution,
    so only 1/weight is sampled; weight must not vanish on [y1, y2].
    """
    if not y2 > y1:
        return QuadratureResult(0.0, 0.0, 0)
    mid = 0.5 * (y1 + y2)
    half = 0.5 * (y2 - y1)

    def f_theta(theta):
        y = mid + half * np.cos(theta)
        s = np.sin(theta)
        return half * half * s * s / weight(y)

    return _doubling_trapezoid(f_theta, abs_tol, rel_tol, n_start, n_max)
