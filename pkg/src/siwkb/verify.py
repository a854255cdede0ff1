"""Verification grids and checks used by both the CLI and the test suite.

Each check returns a list of record dicts with at least the keys
``check``, ``family``, ``value``, ``tol`` and ``passed``; the CLI turns
them into JSON/CSV rows and the acceptance tests assert on them.  All
randomness is driven by an explicit seed, so reports are reproducible.
"""

from __future__ import annotations

import math

import numpy as np

from . import closedform, numerov, relation
from .errors import NoBoundRegionError, SiwkbError
from .families import FAMILIES, Params, get_family
from .quantize import (
    Scheme,
    action_integral,
    asymptotic_slope,
    predicted_asymptotic_slope,
    turning_points_analytic,
    turning_points_numeric,
)

__all__ = [
    "BASE_GRID",
    "default_grid",
    "grid_levels",
    "energy_scale",
    "check_langer_exactness",
    "check_swkb_exactness",
    "check_wkb_dichotomy",
    "check_closedform",
    "check_oracle",
    "check_identity",
    "check_asymptotics",
    "check_structural",
    "check_turning_agreement",
    "run_all_checks",
    "CHECKS",
]

# Five parameter sets per family, all inside the validity bounds with
# comfortable margin (>= 0.2 hbar at hbar = 1).
BASE_GRID: dict[str, tuple[Params, ...]] = {
    "harmonic": tuple(Params(omega=w) for w in (0.5, 1.0, 2.0, 3.7, 5.0)),
    "morse": tuple(Params(A=a) for a in (1.3, 2.0, 2.5, 3.3, 6.1)),
    "coulomb": tuple(
        Params(ell=l, e2=e) for l, e in ((0.8, 1.0), (1.0, 2.0), (1.5, 2.0), (2.0, 3.4), (3.0, 1.0))
    ),
    "rosen-morse-trig": tuple(
        Params(A=a, B=b) for a, b in ((0.8, 0.4), (1.0, 0.5), (1.5, -1.0), (2.5, 3.0), (3.2, 1.3))
    ),
    "rosen-morse-hyp": tuple(
        Params(A=a, B=b) for a, b in ((2.0, 1.0), (2.5, -2.0), (3.5, 3.0), (4.0, 2.0), (5.0, 0.5))
    ),
    "eckart": tuple(
        Params(A=a, B=b) for a, b in ((1.0, 9.0), (1.0, 16.0), (1.5, 30.0), (0.8, 10.0), (2.0, 25.0))
    ),
    "oscillator-3d": tuple(
        Params(ell=l, omega=w) for l, w in ((0.8, 1.0), (1.0, 1.0), (1.5, 2.0), (2.0, 0.5), (3.0, 3.0))
    ),
    "scarf-trig": tuple(
        Params(A=a, B=b) for a, b in ((1.5, 0.5), (2.0, -1.0), (2.5, 1.2), (3.0, 0.0), (4.0, 2.5))
    ),
    "scarf-hyp": tuple(
        Params(A=a, B=b) for a, b in ((1.2, 0.5), (2.0, 1.0), (2.5, -1.5), (3.5, 2.0), (5.0, 0.0))
    ),
    "poschl-teller": tuple(
        Params(A=a, B=b) for a, b in ((1.5, 3.0), (2.0, 4.5), (2.5, 3.5), (3.0, 5.0), (4.2, 6.0))
    ),
}

MAX_LEVELS = 6


def default_grid(family_name: str, seed: int | None = None) -> tuple[Params, ...]:
    """The hard-coded parameter sets, optionally jittered within validity."""
    base = BASE_GRID[family_name]
    if seed is None:
        return base
    rng = np.random.default_rng(seed + sum(map(ord, family_name)))
    fam = get_family(family_name)
    out = []
    for p in base:
        jittered = p
        for key in fam.param_names:
            val = getattr(jittered, key)
            jittered = jittered.replace(**{key: val * (1.0 + 0.02 * rng.uniform(-1, 1))})
        out.append(jittered if fam.validate(jittered).valid else p)
    return tuple(out)


def grid_levels(family_name: str, p: Params, cap: int = MAX_LEVELS) -> range:
    count = get_family(family_name).bound_state_count(p)
    top = cap if count is math.inf else min(cap, int(count))
    return range(top)


def energy_scale(family_name: str, p: Params, xs, n_top: int) -> float:
    """max(1, |E_top|, sup |V_-| on the grid): reference for relative tolerances."""
    fam = get_family(family_name)
    with np.errstate(over="ignore", invalid="ignore"):
        vmax = float(np.max(np.abs(fam.potential_minus(p, xs))))
    e_top = abs(fam.exact_energy(p, n_top)) if n_top >= 0 else 0.0
    return max(1.0, e_top, vmax)


def _interior_grid(family_name: str, p: Params, n_pts: int = 200) -> np.ndarray:
    """Points spanning the classically relevant region of the first levels."""
    fam = get_family(family_name)
    count = fam.bound_state_count(p)
    n_ref = 1 if count is math.inf else min(1, int(count) - 1)
    tp = turning_points_analytic(fam, p, n_ref)
    pad = 0.25 * (tp.x_right - tp.x_left)
    lo = tp.x_left - pad
    hi = tp.x_right + pad
    dom = fam.domain
    # never approach a wall more than halfway beyond the turning point,
    # where diverging f1 magnitudes would swamp pointwise identities in
    # roundoff without probing anything new
    if math.isfinite(dom.left):
        lo = max(lo, dom.left + 0.5 * (tp.x_left - dom.left))
    if math.isfinite(dom.right):
        hi = min(hi, dom.right - 0.5 * (dom.right - tp.x_right))
    return np.linspace(lo, hi, n_pts)


def _record(check, family, p, passed, value, tol, **extra):
    rec = {
        "check": check,
        "family": family,
        "params": p.as_dict() if isinstance(p, Params) else p,
        "passed": bool(passed),
        "value": float(value),
        "tol": float(tol),
    }
    rec.update(extra)
    return rec


# ----------------------------------------------------------------------
# exactness of the quantization conditions
# ----------------------------------------------------------------------
def _exactness(check_name, scheme, tol_hbar, seed=None, families=None):
    records = []
    for name in families or FAMILIES:
        for p in default_grid(name, seed):
            for n in grid_levels(name, p):
                qr = action_integral(name, p, n, scheme)
                resid = abs(qr.residual)
                records.append(
                    _record(
                        check_name, name, p, resid <= tol_hbar * p.hbar, resid,
                        tol_hbar * p.hbar, n=n, scheme=scheme.value,
                        action=qr.action, target=qr.target, degenerate=qr.degenerate,
                    )
                )
    return records


def check_langer_exactness(seed=None, tol_hbar=1e-8, families=None):
    return _exactness("langer-exactness", Scheme.LANGER_WKB, tol_hbar, seed, families)


def check_swkb_exactness(seed=None, tol_hbar=1e-8, families=None):
    records = _exactness("swkb-exactness", Scheme.SWKB, tol_hbar, seed, families)
    for rec in records:
        if rec["n"] == 0 and not rec["degenerate"]:
            rec["passed"] = False
    return records


def check_wkb_dichotomy(seed=None, tol_hbar=1e-8, fail_floor=1e-3, families=None):
    """Plain WKB: exact for Class I, visibly inexact for every other family."""
    records = []
    wanted = families or FAMILIES
    for name in wanted:
        if name not in ("harmonic", "morse"):
            continue
        records.extend(_exactness("wkb-class-i-exact", Scheme.WKB, tol_hbar, seed, [name]))
    for name in wanted:
        if name in ("harmonic", "morse"):
            continue
        worst = 0.0
        computed = 0
        hbar = 1.0
        for p in default_grid(name, seed):
            hbar = p.hbar
            for n in grid_levels(name, p):
                try:
                    qr = action_integral(name, p, n, Scheme.WKB)
                except (NoBoundRegionError, SiwkbError):
                    continue
                computed += 1
                worst = max(worst, abs(qr.residual))
        records.append(
            _record(
                "wkb-correction-needed", name, {"grid": "default"},
                computed > 0 and worst > fail_floor * hbar, worst, fail_floor * hbar,
                computed_levels=computed,
            )
        )
    return records


# ----------------------------------------------------------------------
# closed-form integrals
# ----------------------------------------------------------------------
def check_closedform(seed=0, samples=1000, tol=1e-10, spot_tol=1e-14):
    records = []
    rng = np.random.default_rng(seed)
    for kind in closedform.ClosedFormKind:
        worst = 0.0
        for _ in range(samples):
            y1, y2 = closedform.sample_arguments(kind, rng)
            exact = closedform.evaluate(kind, y1, y2)
            ref = closedform.numeric_reference(kind, y1, y2)
            worst = max(worst, abs(exact - ref) / (1.0 + abs(exact)))
        records.append(
            _record(
                "closedform-vs-quadrature", kind.value, {"samples": samples},
                worst <= tol, worst, tol,
            )
        )
    spots = [
        ("I0", -1.0, 1.0, math.pi / 2.0),
        ("I1a", 1.0, 4.0, math.pi / 2.0),
    ]
    for tag, y1, y2, expected in spots:
        err = abs(closedform.evaluate(tag, y1, y2) - expected)
        records.append(
            _record(
                "closedform-spot", tag, {"y1": y1, "y2": y2}, err <= spot_tol, err, spot_tol,
            )
        )
    return records


# ----------------------------------------------------------------------
# independent Schroedinger oracle
# ----------------------------------------------------------------------
def check_oracle(seed=None, tol=1e-6, n_cap=4, families=None, cfg=None):
    records = []
    for name in families or FAMILIES:
        for p in default_grid(name, seed):
            for n in grid_levels(name, p, cap=n_cap):
                exact = get_family(name).exact_energy(p, n)
                solved = numerov.eigenvalue(name, p, n, cfg)
                err = abs(solved - exact)
                bound = tol * (1.0 + abs(exact))
                records.append(
                    _record(
                        "oracle-spectrum", name, p, err <= bound, err, bound,
                        n=n, exact=exact, solved=solved,
                    )
                )
    return records


# ----------------------------------------------------------------------
# half-shift identity
# ----------------------------------------------------------------------
def check_identity(seed=None, tol_scale=1e-12, action_tol_hbar=2e-8, families=None):
    records = []
    for name in families or FAMILIES:
        for p in default_grid(name, seed):
            xs = _interior_grid(name, p, 200)
            n_ref = max(grid_levels(name, p))
            scale = energy_scale(name, p, xs, n_ref)
            resid = float(np.max(np.abs(relation.integrand_identity_residual(name, p, n_ref, xs))))
            records.append(
                _record(
                    "identity-pointwise", name, p, resid <= tol_scale * scale,
                    resid, tol_scale * scale, n=n_ref,
                )
            )
            langer, swkb = relation.half_shift_action_check(name, p, 0)
            target = 0.5 * math.pi * p.hbar
            err = max(abs(langer - swkb), abs(langer - target), abs(swkb - target))
            records.append(
                _record(
                    "identity-half-shift", name, p, err <= action_tol_hbar * p.hbar,
                    err, action_tol_hbar * p.hbar, n=0,
                    langer_action=langer, swkb_action=swkb,
                )
            )
    return records


# ----------------------------------------------------------------------
# singular-endpoint asymptotics
# ----------------------------------------------------------------------
def check_asymptotics(seed=None, slope_rtol=1e-6, psi_tol=1e-3, cfg=None):
    records = []
    for name in ("coulomb", "oscillator-3d"):
        fam = get_family(name)
        for p in default_grid(name, seed):
            predicted = predicted_asymptotic_slope(name, p, "left")
            measured = asymptotic_slope(name, p, "left")
            err = abs(measured - predicted) / abs(predicted)
            records.append(
                _record(
                    "asymptotic-slope", name, p, err <= slope_rtol, err, slope_rtol,
                    predicted=predicted, measured=measured,
                )
            )
            a_over_h = fam.internal(p).a / p.hbar
            slope = numerov.singular_loglog_slope(name, p, cfg)
            err = abs(slope - (-a_over_h))
            records.append(
                _record(
                    "wavefunction-exponent", name, p, err <= psi_tol, err, psi_tol,
                    predicted=-a_over_h, measured=slope,
                )
            )
    return records


# ----------------------------------------------------------------------
# structural identities
# ----------------------------------------------------------------------
def check_structural(seed=None, tol_scale=1e-12, families=None):
    records = []
    for name in families or FAMILIES:
        fam = get_family(name)
        for p in default_grid(name, seed):
            ip = fam.require_valid(p)
            xs = _interior_grid(name, p, 400)
            n_ref = max(grid_levels(name, p))
            scale = energy_scale(name, p, xs, n_ref)
            h = ip.hbar

            ip_next = fam.internal(fam.shift_internal_a(p, h))
            lhs = fam._v_plus(ip, xs) + fam._g(ip, ip.a)
            rhs = fam._v_minus(ip_next, xs) + fam._g(ip, ip.a + h)
            shape_resid = float(np.max(np.abs(lhs - rhs)))
            records.append(
                _record(
                    "shape-invariance", name, p, shape_resid <= tol_scale * scale,
                    shape_resid, tol_scale * scale,
                )
            )

            pde = fam._w(ip, xs) * fam._dw_da(ip, xs) - fam._w_prime(ip, xs) + 0.5 * fam._dg_da(ip, ip.a)
            pde_resid = float(np.max(np.abs(pde)))
            records.append(
                _record(
                    "shape-pde", name, p, pde_resid <= tol_scale * scale,
                    pde_resid, tol_scale * scale,
                )
            )

            if fam.class_tag in ("IA", "IB"):
                f2, f2p = fam.f2_and_derivative(p, xs)
                ric = ip.alpha * f2 - f2p - ip.eps
            else:
                f1, f1p = fam.f1_and_derivative(p, xs)
                ric = f1 * f1 - f1p - ip.lam
            ric_resid = float(np.max(np.abs(ric)))
            records.append(
                _record(
                    "riccati-f1", name, p, ric_resid <= tol_scale * scale,
                    ric_resid, tol_scale * scale,
                )
            )
            if fam.class_tag.startswith("III"):
                f1, _ = fam.f1_and_derivative(p, xs)
                f2, f2p = fam.f2_and_derivative(p, xs)
                ric2 = f1 * f2 - f2p - ip.eps
                ric2_resid = float(np.max(np.abs(ric2)))
                records.append(
                    _record(
                        "riccati-f2", name, p, ric2_resid <= tol_scale * scale,
                        ric2_resid, tol_scale * scale,
                    )
                )
    return records


# ----------------------------------------------------------------------
# analytic vs numeric turning points
# ----------------------------------------------------------------------
def check_turning_agreement(seed=None, tol=1e-9, families=None):
    records = []
    for name in families or FAMILIES:
        fam = get_family(name)
        for p in default_grid(name, seed):
            for n in grid_levels(name, p):
                energy = fam.exact_energy(p, n)
                analytic = turning_points_analytic(name, p, n)
                numeric = turning_points_numeric(name, p, Scheme.LANGER_WKB, energy)
                err = max(
                    abs(analytic.x_left - numeric.x_left) / (1.0 + abs(numeric.x_left)),
                    abs(analytic.x_right - numeric.x_right) / (1.0 + abs(numeric.x_right)),
                )
                records.append(
                    _record(
                        "turning-points", name, p, err <= tol, err, tol, n=n,
                        x_left=numeric.x_left, x_right=numeric.x_right,
                    )
                )
    return records


CHECKS = {
    "langer": check_langer_exactness,
    "swkb": check_swkb_exactness,
    "wkb-dichotomy": check_wkb_dichotomy,
    "closedform": check_closedform,
    "oracle": check_oracle,
    "identity": check_identity,
    "asymptotics": check_asymptotics,
    "structural": check_structural,
    "turning-points": check_turning_agreement,
}


def run_all_checks(seed=None, families=None):
    """Run the full verification battery; returns (records, all_passed)."""
    records = []
    records.extend(check_langer_exactness(seed, families=families))
    records.extend(check_swkb_exactness(seed, families=families))
    records.extend(check_wkb_dichotomy(seed, families=families))
    records.extend(check_closedform(seed=0 if seed is None else seed))
    records.extend(check_structural(seed, families=families))
    records.extend(check_turning_agreement(seed, families=families))
    records.extend(check_identity(seed, families=families))
    records.extend(check_asymptotics(seed))
    records.extend(check_oracle(seed, families=families))
    return records, all(r["passed"] for r in records)
