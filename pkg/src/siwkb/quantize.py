"""Quantization actions for the three semiclassical schemes.

The action at energy E is the integral of sqrt(E - V_eff) between the
classical turning points, in units with 2m = 1.  The effective potential
depends on the scheme:

* ``wkb``         V_eff = V_-
* ``langer-wkb``  V_eff = V_- + (hbar^2/4) f1'
* ``swkb``        V_eff = W^2

The plain and Langer-corrected schemes quantize to (n + 1/2) pi hbar,
SWKB to n pi hbar.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    AmbiguousRegionError,
    NoBoundRegionError,
    NoSolutionError,
    OutOfSpectrumError,
    ValidationError,
)
from .families import Family, Params, get_family
from .quadrature import sqrt_well_integral
from .rootfind import golden_minimize, march_to_wall, refine_root

__all__ = [
    "Scheme",
    "TurningPoints",
    "QuantizationResult",
    "SpectrumRow",
    "SpectrumReport",
    "turning_points_numeric",
    "turning_points_analytic",
    "action_integral",
    "solve_energy",
    "asymptotic_slope",
    "predicted_asymptotic_slope",
    "spectrum_report",
]

DEGENERACY_RTOL = 1e-10
TURNING_XTOL = 1e-13
ACTION_TOL_HBAR = 1e-10


class Scheme(enum.Enum):
    """Quantization scheme: phase constant nu and effective-potential rule."""

    WKB = "wkb"
    LANGER_WKB = "langer-wkb"
    SWKB = "swkb"

    @property
    def nu(self) -> float:
        return 0.0 if self is Scheme.SWKB else 0.5

    def effective_potential(self, family: Family, p: Params):
        family = get_family(family)
        ip = family.require_valid(p)
        if self is Scheme.WKB:
            def raw(x):
                return family._v_minus(ip, x)
        elif self is Scheme.LANGER_WKB:
            def raw(x):
                return family._v_langer(ip, x)
        else:
            def raw(x):
                w = family._w(ip, x)
                return w * w

        def veff(x):
            with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
                return raw(x)

        return veff

    @classmethod
    def from_name(cls, name) -> "Scheme":
        if isinstance(name, cls):
            return name
        key = str(name).lower().replace("_", "-")
        aliases = {"wkb": cls.WKB, "langer-wkb": cls.LANGER_WKB, "langer": cls.LANGER_WKB, "langerwkb": cls.LANGER_WKB, "swkb": cls.SWKB}
        try:
            return aliases[key]
        except KeyError:
            raise ValidationError(f"unknown scheme {name!r}; known: wkb, langer-wkb, swkb") from None


ALL_SCHEMES = (Scheme.WKB, Scheme.LANGER_WKB, Scheme.SWKB)


@dataclass(frozen=True)
class TurningPoints:
    x_left: float
    x_right: float
    transformed_left: float
    transformed_right: float
    method: str


@dataclass(frozen=True)
class QuantizationResult:
    family: str
    n: int
    scheme: Scheme
    energy: float
    action: float
    target: float
    residual: float
    turning: TurningPoints
    quad_error_estimate: float
    nodes_used: int
    degenerate: bool = False


# ----------------------------------------------------------------------
# scan grids and well location
# ----------------------------------------------------------------------
def _scan_grid(family: Family) -> np.ndarray:
    dom = family.domain
    left_inf = math.isinf(dom.left)
    right_inf = math.isinf(dom.right)
    if left_inf and right_inf:
        t = np.linspace(-0.5 * np.pi + 1e-6, 0.5 * np.pi - 1e-6, 2001)
        return np.tan(t)
    if right_inf:
        near = dom.left + np.geomspace(1e-12, 1.0, 600)
        t = np.linspace(1e-4, 0.5 * np.pi - 1e-6, 1500)
        far = dom.left + 1.0 + np.tan(t)
        return np.unique(np.concatenate([near, far]))
    width = dom.width
    inner = np.linspace(dom.left + 1e-3 * width, dom.right - 1e-3 * width, 1400)
    lefts = dom.left + width * np.geomspace(1e-12, 1e-3, 300)
    rights = dom.right - width * np.geomspace(1e-12, 1e-3, 300)
    return np.unique(np.concatenate([lefts, inner, rights]))


def _well_minimum(family: Family, veff) -> tuple[float, float]:
    xs = _scan_grid(family)
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        vals = np.asarray(veff(xs), dtype=float)
    vals = np.where(np.isnan(vals), np.inf, vals)
    i = int(np.argmin(vals))
    lo = xs[max(i - 1, 0)]
    hi = xs[min(i + 1, len(xs) - 1)]
    return golden_minimize(lambda x: float(veff(x)), lo, hi)


def _endpoint_limited(veff, energy: float, endpoint: float, sign: float) -> bool:
    """True when E - V_eff stays positive up to a finite endpoint with an
    integrable inverse-first-power divergence (finite action, no turning
    point on that side)."""
    if not math.isfinite(endpoint):
        return False
    d = 1e-9
    excess = (energy - float(veff(endpoint + sign * d))) * d * d
    return abs(excess) <= 1e-5 * (1.0 + abs(energy))

def _locate_turning(family: Family, veff, energy: float, x_star: float):
    """Refined turning points around x_star; a side where the classically
    allowed region reaches a finite endpoint integrably returns the
    endpoint itself as the integration limit."""
    dom = family.domain

    def g(x):
        return energy - float(veff(x))

    try:
        lo_l, hi_l = march_to_wall(g, x_star, dom.left, -1)
    except NoBoundRegionError:
        if not _endpoint_limited(veff, energy, dom.left, +1.0):
            raise
        lo_l = hi_l = dom.left
    try:
        lo_r, hi_r = march_to_wall(g, x_star, dom.right, +1)
    except NoBoundRegionError:
        if not _endpoint_limited(veff, energy, dom.right, -1.0):
            raise
        lo_r = hi_r = dom.right

    # defensive scan: a simple well must cross E exactly twice
    scan_l = lo_l if lo_l > dom.left else x_star - 0.5 * (x_star - dom.left)
    scan_r = hi_r if hi_r < dom.right else x_star + 0.5 * (dom.right - x_star)
    xs = np.concatenate(
        [np.linspace(scan_l, x_star, 1024), np.linspace(x_star, scan_r, 1024)[1:]]
    )
    gv = energy - np.asarray(veff(xs), dtype=float)
    gv = np.where(np.isnan(gv), -np.inf, gv)
    crossings = int(np.count_nonzero(np.diff(np.signbit(gv))))
    if crossings > 2:
        raise AmbiguousRegionError(
            f"{family.name}: {crossings} sign changes of E - V_eff in the scan window"
        )

    x_left = dom.left if lo_l == dom.left else refine_root(g, lo_l, hi_l, xtol_rel=TURNING_XTOL)
    x_right = dom.right if hi_r == dom.right else refine_root(g, lo_r, hi_r, xtol_rel=TURNING_XTOL)
    return x_left, x_right


def turning_points_numeric(family, p: Params, scheme, energy: float) -> TurningPoints:
    """Locate the two roots of E - V_eff by bracketed bisection plus secant."""
    family = get_family(family)
    scheme = Scheme.from_name(scheme)
    veff = scheme.effective_potential(family, p)
    x_star, v_min = _well_minimum(family, veff)
    if not energy > v_min + DEGENERACY_RTOL * (1.0 + abs(energy)):
        raise NoBoundRegionError(
            f"{family.name}: E={energy} does not exceed the effective-potential "
            f"minimum {v_min}"
        )
    x_left, x_right = _locate_turning(family, veff, energy, x_star)
    return TurningPoints(
        x_left=x_left,
        x_right=x_right,
        transformed_left=float(family.transform(p, x_left)),
        transformed_right=float(family.transform(p, x_right)),
        method="numeric",
    )


# ----------------------------------------------------------------------
# analytic turning points (Langer-corrected scheme at the exact energies)
# ----------------------------------------------------------------------
def _quadratic_roots(a2: float, a1: float, a0: float) -> tuple[float, float]:
    disc = a1 * a1 - 4.0 * a2 * a0
    if disc < 0.0:
        raise ValidationError(f"negative discriminant {disc} in turning-point quadratic")
    q = -0.5 * (a1 + math.copysign(math.sqrt(disc), a1 if a1 != 0.0 else 1.0))
    if q == 0.0:
        r = math.sqrt(-a0 / a2) if a2 != 0.0 else 0.0
        return -r, r
    r1, r2 = q / a2, a0 / q
    return (r1, r2) if r1 <= r2 else (r2, r1)


def turning_points_analytic(family, p: Params, n: int) -> TurningPoints:
    """Closed-form turning points of the Langer-corrected action at E_n.

    The roots are produced in the family's transformed variable and mapped
    back to x through the inverse of the monotone transform.
    """
    family = get_family(family)
    ip = family.require_valid(p)
    count = family.bound_state_count(p)
    if n >= count:
        raise OutOfSpectrumError(f"{family.name}: n={n} beyond bound_state_count={count}")
    a, b, lam, h = ip.a, ip.b, ip.lam, ip.hbar
    an = a + n * h
    tag = family.class_tag

    if tag == "IA":
        t_hi = math.sqrt(-(2 * n + 1) * h * ip.eps)
        t_lo, t_hi = -t_hi, t_hi
    elif tag == "IB":
        al = ip.alpha
        t_lo, t_hi = _quadratic_roots(
            1.0, al * (2.0 * a - h), al * al * (a * a + n * h * (2.0 * a + n * h))
        )
    elif tag in ("IIA", "IIB1", "IIB2", "IIB3"):
        c0 = b * b / an**2 + lam * (an**2 - a * a + a * h - 0.25 * h * h)
        t_lo, t_hi = _quadratic_roots((a - 0.5 * h) ** 2, 2.0 * b, c0)
    elif tag == "IIIA":
        om = ip.omega
        t_lo, t_hi = _quadratic_roots(
            (a - 0.5 * h) ** 2, -om * (a + 0.5 * h + 2.0 * n * h), 0.25 * om * om
        )
    elif tag == "IIIB1":
        c0 = b * b - a * h + 0.25 * h * h - 2.0 * a * n * h - (n * h) ** 2
        t_lo, t_hi = _quadratic_roots(an**2, b * (2.0 * a - h), c0)
    elif tag == "IIIB2":
        c0 = b * b + a * h - 0.25 * h * h + 2.0 * a * n * h + (n * h) ** 2
        t_lo, t_hi = _quadratic_roots(an**2, -b * (2.0 * a - h), c0)
    elif tag == "IIIB3":
        c0 = b * b - a * h + 0.25 * h * h - 2.0 * a * n * h - (n * h) ** 2
        t_lo, t_hi = _quadratic_roots(an**2, -b * (2.0 * a - h), c0)
    else:  # pragma: no cover
        raise ValidationError(f"no analytic turning points for class {tag}")

    xa = float(family.inverse_transform(p, t_lo))
    xb = float(family.inverse_transform(p, t_hi))
    if not family.transform_increasing:
        xa, xb = xb, xa
        t_lo, t_hi = t_hi, t_lo
    return TurningPoints(
        x_left=xa, x_right=xb, transformed_left=t_lo, transformed_right=t_hi,
        method="analytic",
    )


# ----------------------------------------------------------------------
# action integrals
# ----------------------------------------------------------------------
def _action_between(veff, energy, x_left, x_right, hbar):
    result = sqrt_well_integral(
        lambda x: energy - np.asarray(veff(x), dtype=float),
        x_left,
        x_right,
        abs_tol=1e-12 * hbar,
        rel_tol=1e-13,
    )
    return result


def _evaluate_action(family: Family, veff, energy: float, hbar: float, well=None):
    """(action, err, nodes, turning, degenerate) for a well-shaped V_eff."""
    x_star, v_min = _well_minimum(family, veff) if well is None else well
    if not energy > v_min + DEGENERACY_RTOL * (1.0 + abs(energy)):
        tp = TurningPoints(x_star, x_star, math.nan, math.nan, "numeric")
        return 0.0, 0.0, 0, tp, True
    x_left, x_right = _locate_turning(family, veff, energy, x_star)
    tp = TurningPoints(x_left, x_right, math.nan, math.nan, "numeric")
    if x_right - x_left < 1e-10 * (1.0 + abs(x_left)):
        return 0.0, 0.0, 0, tp, True
    q = _action_between(veff, energy, x_left, x_right, hbar)
    return q.value, q.error_estimate, q.nodes, tp, False


def action_integral(family, p: Params, n: int, scheme) -> QuantizationResult:
    """Action of scheme at the exact level energy, with its quantization residual.

    A degenerate classically allowed region (SWKB at n = 0, where E_0 = 0
    touches the minimum of W^2) yields action 0 by contract.
    """
    family = get_family(family)
    scheme = Scheme.from_name(scheme)
    ip = family.require_valid(p)
    energy = family.exact_energy(p, n)
    target = (n + scheme.nu) * math.pi * ip.hbar
    veff = scheme.effective_potential(family, p)
    action, err, nodes, tp, degenerate = _evaluate_action(family, veff, energy, ip.hbar)
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        tp = TurningPoints(
            tp.x_left,
            tp.x_right,
            float(family.transform(p, tp.x_left)),
            float(family.transform(p, tp.x_right)),
            "numeric",
        )
    return QuantizationResult(
        family=family.name,
        n=n,
        scheme=scheme,
        energy=energy,
        action=action,
        target=target,
        residual=action - target,
        turning=tp,
        quad_error_estimate=err,
        nodes_used=nodes,
        degenerate=degenerate,
    )


def solve_energy(family, p: Params, n: int, scheme) -> float:
    """Invert the quantization condition: E with action(E) = (n + nu) pi hbar.

    Bisection on E exploits strict monotonicity of the action in energy.
    Raises NoSolutionError when the target exceeds the action attainable
    below the continuum edge (level beyond the scheme's spectrum).
    """
    family = get_family(family)
    scheme = Scheme.from_name(scheme)
    ip = family.require_valid(p)
    if n < 0 or int(n) != n:
        raise ValidationError("level index n must be a non-negative integer")
    target = (n + scheme.nu) * math.pi * ip.hbar
    veff = scheme.effective_potential(family, p)
    x_star, v_min = _well_minimum(family, veff)
    if target == 0.0:
        return v_min

    well = (x_star, v_min)

    def action_at(energy):
        value, _, _, _, degenerate = _evaluate_action(family, veff, energy, ip.hbar, well)
        return 0.0 if degenerate else value

    ceiling = family.ceiling(p)
    lo = v_min + 1e-12 * (1.0 + abs(v_min))
    if math.isinf(ceiling):
        span = max(ip.hbar, 1e-2 * (1.0 + abs(v_min)))
        hi = v_min + span
        for _ in range(80):
            if action_at(hi) >= target:
                break
            span *= 2.0
            hi = v_min + span
        else:  # pragma: no cover
            raise NoSolutionError(f"{family.name}: target {target} not bracketed")
    else:
        hi = None
        prev_action = -math.inf
        for k in range(1, 64):
            cand = ceiling - (ceiling - v_min) * 0.5**k
            if not cand < ceiling - 1e-14 * (1.0 + abs(ceiling)):
                break  # candidate no longer separable from the continuum edge
            cand_action = action_at(cand)
            if cand_action >= target:
                hi = cand
                break
            if prev_action > 0.0 and cand_action - prev_action <= 1e-9 * ip.hbar:
                break  # action has plateaued below the target
            prev_action = cand_action
        if hi is None:
            raise NoSolutionError(
                f"{family.name}: target {target/math.pi:.3f}*pi*hbar exceeds the "
                f"supremum of the {scheme.value} action below the continuum edge"
            )

    f_hi = action_at(hi) - target
    f_lo = -target
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        f_mid = action_at(mid) - target
        if abs(f_mid) <= ACTION_TOL_HBAR * ip.hbar:
            return mid
        if f_lo * f_mid <= 0.0:
            hi, f_hi = mid, f_mid
        else:
            lo, f_lo = mid, f_mid
        if hi - lo <= 4e-16 * (1.0 + abs(mid)):
            return mid
    return 0.5 * (lo + hi)


# ----------------------------------------------------------------------
# singular-endpoint asymptotics
# ----------------------------------------------------------------------
def asymptotic_slope(family, p: Params, side: str = "left", test_energy: float | None = None) -> float:
    """Numeric limit of sqrt(V_langer - E)/|f1| toward a singular endpoint.

    Richardson extrapolation in the endpoint distance removes the linear
    and quadratic corrections; the limit is independent of the fixed test
    energy offset.
    """
    family = get_family(family)
    ip = family.require_valid(p)
    family._require_singular(side)
    energy = ip.hbar if test_energy is None else test_energy
    veff = Scheme.LANGER_WKB.effective_potential(family, p)
    dom = family.domain
    width = dom.width if math.isfinite(dom.width) else 1.0
    d0 = 1e-4 * width
    endpoint = dom.left if side == "left" else dom.right
    sign = 1.0 if side == "left" else -1.0

    def value(d):
        x = endpoint + sign * d
        q2 = float(veff(x)) - energy
        f1 = float(family._f1(ip, x))
        return math.sqrt(max(q2, 0.0)) / abs(f1)

    v1, v2, v3 = value(d0), value(0.5 * d0), value(0.25 * d0)
    r1 = 2.0 * v2 - v1
    r2 = 2.0 * v3 - v2
    return (4.0 * r2 - r1) / 3.0


def predicted_asymptotic_slope(family, p: Params, side: str = "left") -> float:
    """Closed-form value of the singular-endpoint slope for valid parameters."""
    family = get_family(family)
    family.require_valid(p)
    return family.asymptotic_slope_prediction(p, side)


# ----------------------------------------------------------------------
# spectrum report
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class SchemeCell:
    status: str
    solved: float | None = None
    action: float | None = None
    target: float | None = None
    residual: float | None = None
    degenerate: bool = False


@dataclass(frozen=True)
class SpectrumRow:
    n: int
    status: str
    exact: float | None
    cells: dict = field(default_factory=dict)


@dataclass(frozen=True)
class SpectrumReport:
    family: str
    params: dict
    hbar: float
    schemes: tuple
    rows: tuple


def spectrum_report(family, p: Params, n_max: int, schemes=ALL_SCHEMES) -> SpectrumReport:
    """Per-level comparison of exact, scheme-solved and action residuals.

    Rows cover n = 0 .. n_max-1; levels beyond the bound spectrum are
    carried as flagged rows rather than aborting the report.
    """
    family = get_family(family)
    family.require_valid(p)
    schemes = tuple(Scheme.from_name(s) for s in schemes)
    rows = []
    for n in range(n_max):
        try:
            exact = family.exact_energy(p, n)
        except OutOfSpectrumError:
            rows.append(SpectrumRow(n=n, status="out-of-spectrum", exact=None, cells={}))
            continue
        cells = {}
        for scheme in schemes:
            try:
                qr = action_integral(family, p, n, scheme)
                solved = solve_energy(family, p, n, scheme)
                cells[scheme.value] = SchemeCell(
                    status="ok",
                    solved=solved,
                    action=qr.action,
                    target=qr.target,
                    residual=qr.residual,
                    degenerate=qr.degenerate,
                )
            except (NoSolutionError, NoBoundRegionError, AmbiguousRegionError) as exc:
                cells[scheme.value] = SchemeCell(status=f"error: {exc}")
        rows.append(SpectrumRow(n=n, status="ok", exact=exact, cells=cells))
    return SpectrumReport(
        family=family.name,
        params=p.as_dict(),
        hbar=p.hbar,
        schemes=tuple(s.value for s in schemes),
        rows=tuple(rows),
    )
