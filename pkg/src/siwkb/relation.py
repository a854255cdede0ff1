"""Interrelation between Langer-corrected WKB and the SWKB condition.

For every conventional family the two semiclassical integrands coincide
pointwise under a half-step shift of the shape parameter:

    E_n(a) - (V_-(x, a) + (hbar^2/4) f1'(x)) = E_(n+1/2)(a~) - W^2(x, a~)

with a~ = a - hbar/2 and E_(n+1/2)(a~) = g(a~ + (n+1/2) hbar) - g(a~),
the natural continuation of the shape-invariance spectrum to half-integer
index.  Consequently the Langer-corrected action at (a, n) equals the
SWKB-form action at (a~, n+1/2), both (n+1/2) pi hbar.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ShiftedParameterError
from .families import Params, get_family
from .quantize import Scheme, _evaluate_action, _well_minimum, action_integral

__all__ = [
    "RelationSample",
    "shifted_params",
    "half_level_energy",
    "integrand_identity_residual",
    "identity_samples",
    "half_shift_action_check",
]


@dataclass(frozen=True)
class RelationSample:
    """Both sides of the half-shift integrand identity at one point."""

    x: float
    lhs: float
    rhs: float
    residual: float


def shifted_params(family, p: Params) -> Params:
    """Parameters whose internal shape parameter is a - hbar/2.

    Only the structural constraints (positive spectral slope dg/da at the
    shifted parameter) are enforced; the shift is an algebraic device, so
    wavefunction-regularity bounds do not apply.
    """
    family = get_family(family)
    ip = family.internal(p)
    p_shift = family.shift_internal_a(p, -0.5 * ip.hbar)
    ip_shift = family.internal(p_shift)
    a_t = ip_shift.a
    if ip.a != 0.0:
        if a_t == 0.0 or (a_t > 0.0) != (ip.a > 0.0):
            raise ShiftedParameterError(
                f"{family.name}: shifted parameter {a_t} crosses zero"
            )
    slope = family.dg_da(p_shift, a_t)
    if not slope > 0.0:
        raise ShiftedParameterError(
            f"{family.name}: dg/da = {slope} not positive at shifted parameter"
        )
    return p_shift


def half_level_energy(family, p_shift: Params, n: int) -> float:
    """E_(n+1/2) evaluated with the shifted parameter set."""
    return get_family(family).shape_energy(p_shift, n + 0.5)


def _identity_sides(family, p: Params, n: int, x):
    family = get_family(family)
    ip = family.require_valid(p)
    family.check_domain(x)
    p_shift = shifted_params(family, p)
    ip_shift = family.internal(p_shift)
    energy = family.exact_energy(p, n)
    x = np.asarray(x, dtype=float)
    lhs = energy - family._v_langer(ip, x)
    w_shift = family._w(ip_shift, x)
    rhs = half_level_energy(family, p_shift, n) - w_shift * w_shift
    return lhs, rhs


def integrand_identity_residual(family, p: Params, n: int, x):
    """lhs - rhs of the half-shift integrand identity; exactly 0 analytically."""
    lhs, rhs = _identity_sides(family, p, n, x)
    return lhs - rhs


def identity_samples(family, p: Params, n: int, xs) -> list[RelationSample]:
    """Per-point records of the identity over a grid of interior points."""
    lhs, rhs = _identity_sides(family, p, n, xs)
    lhs = np.atleast_1d(lhs)
    rhs = np.atleast_1d(rhs)
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    return [
        RelationSample(float(x), float(a), float(b), float(a - b))
        for x, a, b in zip(xs, lhs, rhs)
    ]


def half_shift_action_check(family, p: Params, n: int) -> tuple[float, float]:
    """(Langer-corrected action at (a, n), SWKB-form action at (a~, n+1/2)).

    Both integrals are evaluated independently through the quadrature
    machinery and should agree with each other and with (n+1/2) pi hbar.
    """
    family = get_family(family)
    ip = family.require_valid(p)
    langer_action = action_integral(family, p, n, Scheme.LANGER_WKB).action

    p_shift = shifted_params(family, p)
    ip_shift = family.internal(p_shift)
    energy_half = half_level_energy(family, p_shift, n)

    def w_squared(x):
        w = family._w(ip_shift, x)
        return w * w

    well = _well_minimum(family, w_squared)
    value, _, _, _, degenerate = _evaluate_action(
        family, w_squared, energy_half, ip.hbar, well
    )
    swkb_action = 0.0 if degenerate else value
    return langer_action, swkb_action
