"""Independent spectral oracle: Numerov shooting for -hbar^2 psi'' + V_- psi = E psi.

The solver never consults the shape-invariance spectrum.  Levels are
isolated by Sturm node counting of the left-shot solution and refined by
bisection on the log-derivative mismatch of inward integrations from both
ends, with fourth-order Numerov stepping throughout.

Grids adapt to the domain:

* families on (0, inf) with a singular origin use a logarithmic radial
  grid q = ln r and the reduced function u = psi / sqrt(r), whose Numerov
  coefficient is r^2 (V - E)/hbar^2 + 1/4;
* whole-line families use a uniform grid on a box truncated where the
  accumulated decay exponent of the tail exceeds a fixed margin;
* finite trigonometric domains use a uniform grid inset by a few steps,
  seeded with the regular power series at each wall.

Energy brackets are floored by the Hardy-corrected potential
V + hbar^2/(4 d^2) near singular endpoints, which bounds the spectrum
from below even where V itself is unbounded (integrable attractive
singularities).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import BracketError, OracleError, OutOfSpectrumError, TruncationError
from .families import Params, get_family
from .quantize import _well_minimum
from .rootfind import march_to_wall

__all__ = ["SolverConfig", "eigenvalue", "node_count", "singular_loglog_slope"]

_RENORM = 1e150
_T_CAP = 0.45
_PHASE_MARGIN = 16.0


@dataclass(frozen=True)
class SolverConfig:
    grid_points: int = 4000
    box_left: float | None = None
    box_right: float | None = None
    match_point: float | None = None
    energy_bracket: tuple[float, float] | None = None
    tolerance: float = 1e-7
    max_grid_points: int = 1 << 17


_DEFAULT_CFG = SolverConfig()


# ----------------------------------------------------------------------
# Numerov sweeps on precomputed coefficient arrays
# ----------------------------------------------------------------------
def _coefficients(P, Q, h, energy):
    t = np.minimum(h * h * (P - energy * Q) / 12.0, _T_CAP)
    return ((2.0 + 10.0 * t) / (1.0 - t)).tolist()


def _count_sweep(c, u0, u1) -> int:
    nodes = 0
    up, uc = u0, u1
    for ci in c[1:-1]:
        un = ci * uc - up
        if un * uc < 0.0:
            nodes += 1
        if un > _RENORM or un < -_RENORM:
            inv = 1.0 / abs(un)
            uc *= inv
            un *= inv
        up, uc = uc, un
    return nodes


def _forward_to(c, u0, u1, stop):
    """Shoot rightward; return (u[stop-1], u[stop], u[stop+1]) on one scale."""
    up, uc = u0, u1
    for i in range(1, stop):
        un = c[i] * uc - up
        if un > _RENORM or un < -_RENORM:
            inv = 1.0 / abs(un)
            uc *= inv
            un *= inv
        up, uc = uc, un
    return up, uc, c[stop] * uc - up


def _backward_to(c, uN, uNm1, stop):
    """Shoot leftward; return (u[stop-1], u[stop], u[stop+1]) on one scale."""
    down, dc = uN, uNm1
    for i in range(len(c) - 1, stop + 1, -1):
        um = c[i - 1] * dc - down
        if um > _RENORM or um < -_RENORM:
            inv = 1.0 / abs(um)
            dc *= inv
            um *= inv
        down, dc = dc, um
    return c[stop] * dc - down, dc, down


# ----------------------------------------------------------------------
# well reference and grids
# ----------------------------------------------------------------------
def _reference_potential(family, p: Params, veff):
    """V plus the Hardy endpoint terms hbar^2/(4 d^2) at singular walls."""
    dom = family.domain
    h2 = 0.25 * p.hbar**2

    def ref(x):
        x = np.asarray(x, dtype=float)
        v = np.asarray(veff(x), dtype=float)
        if dom.singular_left and math.isfinite(dom.left):
            v = v + h2 / (x - dom.left) ** 2
        if dom.singular_right and math.isfinite(dom.right):
            v = v + h2 / (dom.right - x) ** 2
        return v

    return ref


@dataclass(frozen=True)
class _Grid:
    kind: str          # "log" or "linear"
    coord: np.ndarray  # Numerov coordinate (q = ln r for "log")
    r: np.ndarray      # physical coordinate
    h: float
    vgrid: np.ndarray  # V_- at the nodes
    P: np.ndarray
    Q: np.ndarray
    seed_left: tuple[float, float]
    seed_right: tuple[float, float]
    floor: float       # valid lower bound for bound-state energies
    edge_cap: float    # largest energy the box can still confine


def _series_exponent(veff, endpoint, sign, hbar, probe):
    """Regular-solution exponent s and first series coefficient mu at a wall."""
    d1, d2 = probe, 2.0 * probe
    c0 = float(veff(endpoint + sign * d1)) * d1 * d1
    c0b = float(veff(endpoint + sign * d2)) * d2 * d2
    c1 = (c0b - c0) / d1
    c0 = c0 - c1 * d1
    s = 0.5 * (1.0 + math.sqrt(max(1.0 + 4.0 * c0 / hbar**2, 0.0)))
    mu = c1 / (2.0 * s * hbar**2) if s > 0 else 0.0
    return s, mu


def _extend_edge(veff, energy, start, direction, hbar, phase_target=_PHASE_MARGIN):
    """March outward accumulating the decay exponent integral of sqrt(V-E)/hbar."""
    x = start
    phase = 0.0
    for _ in range(200000):
        step = max(0.02, 0.02 * abs(x))
        mid = x + 0.5 * direction * step
        kappa = math.sqrt(max(float(veff(mid)) - energy, 0.0)) / hbar
        phase += step * kappa
        x += direction * step
        if phase >= phase_target:
            return x
    raise TruncationError("tail decay margin not reached while extending the box")


def _turning_estimate(ref, energy, x_star, limit, direction):
    lo, hi = march_to_wall(lambda x: energy - float(ref(x)), x_star, limit, direction)
    return lo if direction < 0 else hi


def _build_grid(family, p: Params, veff, ref, e_top, x_star, n_points, cfg) -> _Grid:
    dom = family.domain
    hbar = p.hbar
    h2 = 0.25 * hbar**2
    if dom.singular_left and math.isinf(dom.right):
        if cfg.box_left is not None:
            r_lo = cfg.box_left
        else:
            r_tp = _turning_estimate(ref, e_top, x_star, 0.0, -1)
            r_lo = min(1e-8, 1e-4 * r_tp)
        if cfg.box_right is not None:
            r_hi = cfg.box_right
        else:
            x_out = _turning_estimate(ref, e_top, x_star, math.inf, +1)
            r_hi = _extend_edge(veff, e_top, x_out, +1, hbar)
        q = np.linspace(math.log(r_lo), math.log(r_hi), n_points + 1)
        r = np.exp(q)
        v = np.asarray(veff(r), dtype=float)
        P = (r * r * v) / hbar**2 + 0.25
        Q = r * r / hbar**2
        s, _ = _series_exponent(veff, 0.0, +1, hbar, 1e-6)
        seed = (math.exp(q[0] * (s - 0.5)), math.exp(q[1] * (s - 0.5)))
        corr = v + h2 / (r * r)
        return _Grid(
            "log", q, r, float(q[1] - q[0]), v, P, Q, seed, (0.0, 1.0),
            float(np.min(corr)), float(min(corr[0], corr[-1])),
        )

    if math.isinf(dom.left) and math.isinf(dom.right):
        if cfg.box_left is not None:
            x_lo = cfg.box_left
        else:
            x_in = _turning_estimate(ref, e_top, x_star, -math.inf, -1)
            x_lo = _extend_edge(veff, e_top, x_in, -1, hbar)
        if cfg.box_right is not None:
            x_hi = cfg.box_right
        else:
            x_out = _turning_estimate(ref, e_top, x_star, math.inf, +1)
            x_hi = _extend_edge(veff, e_top, x_out, +1, hbar)
        x = np.linspace(x_lo, x_hi, n_points + 1)
        with np.errstate(over="ignore"):
            v = np.asarray(veff(x), dtype=float)
        v = np.minimum(v, 1e280)
        P = v / hbar**2
        Q = np.full_like(v, 1.0 / hbar**2)
        return _Grid(
            "linear", x, x, float(x[1] - x[0]), v, P, Q, (0.0, 1.0), (0.0, 1.0),
            float(np.min(v)), float(min(v[0], v[-1])),
        )

    # finite interval with singular walls: u = ln tan(xi/2) resolves both
    # 1/d^2 endpoints logarithmically; phi = psi/sqrt(dx/du) obeys
    # phi'' = [ (dx/du)^2 (V - E)/hbar^2 + 1/4 + sin(xi)^2/4 ] phi
    width = dom.width
    scale = width / math.pi
    probe = 1e-7 * width
    s_l, _ = _series_exponent(veff, dom.left, +1, hbar, probe)
    s_r, _ = _series_exponent(veff, dom.right, -1, hbar, probe)

    def u_of_x(x_val):
        xi = (x_val - dom.left) / scale
        return math.log(math.tan(0.5 * xi))

    def u_extent(s_exp):
        # capped where the mapped wall distance reaches float resolution
        return min(31.0, max(14.0, 14.0 / max(s_exp - 0.5, 0.12)))

    u_lo = u_of_x(cfg.box_left) if cfg.box_left is not None else -u_extent(s_l)
    u_hi = u_of_x(cfg.box_right) if cfg.box_right is not None else u_extent(s_r)
    u = np.linspace(u_lo, u_hi, n_points + 1)
    xi = 2.0 * np.arctan(np.exp(u))
    x = dom.left + scale * xi
    sin_xi = np.sin(xi)
    g2 = (scale * sin_xi) ** 2
    v = np.asarray(veff(x), dtype=float)
    P = g2 * v / hbar**2 + 0.25 + 0.25 * sin_xi**2
    Q = g2 / hbar**2
    seed_l = (math.exp(u[0] * (s_l - 0.5)), math.exp(u[1] * (s_l - 0.5)))
    seed_r = (math.exp(-u[-1] * (s_r - 0.5)), math.exp(-u[-2] * (s_r - 0.5)))
    corr = hbar**2 * P / Q
    return _Grid(
        "sine", u, x, float(u[1] - u[0]), v, P, Q, seed_l, seed_r,
        float(np.min(corr)), float(min(corr[0], corr[-1])),
    )


# ----------------------------------------------------------------------
# level isolation and refinement on a fixed grid
# ----------------------------------------------------------------------
def _count_at(grid: _Grid, energy: float) -> int:
    c = _coefficients(grid.P, grid.Q, grid.h, energy)
    return _count_sweep(c, *grid.seed_left)


def _mismatch(grid: _Grid, energy: float, m: int) -> float:
    c = _coefficients(grid.P, grid.Q, grid.h, energy)
    lm1, lm, lp1 = _forward_to(c, *grid.seed_left, m)
    rm1, rm, rp1 = _backward_to(c, *grid.seed_right, m)
    lm = lm if lm != 0.0 else 1e-300
    rm = rm if rm != 0.0 else 1e-300
    return (lp1 - lm1) / (2.0 * grid.h * lm) - (rp1 - rm1) / (2.0 * grid.h * rm)


def _match_index(grid: _Grid, energy: float, cfg: SolverConfig) -> int:
    n = len(grid.coord) - 1
    if cfg.match_point is not None:
        m = int(np.searchsorted(grid.r, cfg.match_point))
    else:
        inside = np.nonzero(grid.vgrid <= energy)[0]
        m = int(inside[-1]) if len(inside) else n // 2
    return min(max(m, 2), n - 2)


def _solve_on_grid(grid: _Grid, n: int, lo: float, hi: float, cfg: SolverConfig) -> float:
    c_lo, c_hi = _count_at(grid, lo), _count_at(grid, hi)
    if not (c_lo <= n < c_hi):
        raise BracketError(
            f"node count never hits level {n} inside the bracket "
            f"({lo}, {hi}): counts ({c_lo}, {c_hi})"
        )
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        c_mid = _count_at(grid, mid)
        if c_mid > n:
            hi, c_hi = mid, c_mid
        else:
            lo, c_lo = mid, c_mid
        if c_lo == n and c_hi == n + 1 and hi - lo <= 1e-3 * (1.0 + abs(mid)):
            break
        if hi - lo <= 1e-15 * (1.0 + abs(mid)):
            return 0.5 * (lo + hi)
    # refine on the log-derivative mismatch at the outer turning point
    m = _match_index(grid, 0.5 * (lo + hi), cfg)
    f_lo, f_hi = _mismatch(grid, lo, m), _mismatch(grid, hi, m)
    if (f_lo < 0.0) == (f_hi < 0.0):
        # a mismatch pole interferes; the node-count transition still pins E_n
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if _count_at(grid, mid) > n:
                hi = mid
            else:
                lo = mid
            if hi - lo <= 1e-15 * (1.0 + abs(mid)):
                break
        return 0.5 * (lo + hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        f_mid = _mismatch(grid, mid, m)
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
        if hi - lo <= 1e-15 * (1.0 + abs(mid)):
            break
    return 0.5 * (lo + hi)


# ----------------------------------------------------------------------
# public operations
# ----------------------------------------------------------------------
def _initial_bracket(family, grid: _Grid, n: int, ceiling: float):
    lo = grid.floor + 1e-12 * (1.0 + abs(grid.floor))
    hi_cap = min(ceiling, grid.edge_cap)
    span = 0.5 * (1.0 + abs(lo))
    hi = min(lo + span, hi_cap)
    for _ in range(200):
        if _count_at(grid, hi) > n:
            return lo, hi
        if hi >= hi_cap - 1e-12 * (1.0 + abs(hi_cap)):
            raise BracketError(
                f"{family.name}: node count never reaches {n + 1} below the "
                f"continuum/box edge {hi_cap}"
            )
        span *= 2.0
        hi = min(lo + span, hi_cap - 1e-12 * (1.0 + abs(hi_cap)))
    raise BracketError(f"{family.name}: bracket expansion failed for level {n}")


def _box_energy(ref, n, x_star, v_floor, ceiling, hbar):
    """Energy used to size the box: a margin above the target level region."""
    delta = 1e-3 * (1.0 + abs(x_star))
    curv = (
        float(ref(x_star + delta)) + float(ref(x_star - delta)) - 2.0 * float(ref(x_star))
    ) / delta**2
    spacing = hbar * math.sqrt(max(2.0 * curv, 0.0))
    guess = v_floor + (n + 2.0) * max(spacing, 0.5 * hbar) + 0.5 * (1.0 + abs(v_floor))
    if math.isfinite(ceiling):
        guess = min(guess, v_floor + 0.98 * (ceiling - v_floor))
    return guess


def _auto_box_cfg(family, p, veff, ref, x_star, cfg, e_turning, e_decay, phase_target):
    """cfg with explicit box edges: turning points located at ``e_turning``,
    tail margins accumulated at the (lower) level energy ``e_decay``."""
    dom = family.domain
    hbar = p.hbar
    if dom.singular_left and math.isinf(dom.right):
        r_tp = _turning_estimate(ref, e_turning, x_star, 0.0, -1)
        x_out = _turning_estimate(ref, e_turning, x_star, math.inf, +1)
        return replace(
            cfg,
            box_left=cfg.box_left if cfg.box_left is not None else min(1e-8, 1e-4 * r_tp),
            box_right=cfg.box_right
            if cfg.box_right is not None
            else _extend_edge(veff, e_decay, x_out, +1, hbar, phase_target),
        )
    if math.isinf(dom.left) and math.isinf(dom.right):
        x_in = _turning_estimate(ref, e_turning, x_star, -math.inf, -1)
        x_out = _turning_estimate(ref, e_turning, x_star, math.inf, +1)
        return replace(
            cfg,
            box_left=cfg.box_left
            if cfg.box_left is not None
            else _extend_edge(veff, e_decay, x_in, -1, hbar, phase_target),
            box_right=cfg.box_right
            if cfg.box_right is not None
            else _extend_edge(veff, e_decay, x_out, +1, hbar, phase_target),
        )
    return cfg  # finite domain: the sine-mapped grid fixes its own extent


def eigenvalue(family, p: Params, n: int, cfg: SolverConfig | None = None) -> float:
    """Level-n eigenvalue of H_- by two-sided Numerov shooting.

    On each candidate box the grid is doubled until the eigenvalue moves by
    less than a tenth of the tolerance; the box is then enlarged (turning
    points re-anchored at the solved level, longer tail margins) until the
    converged value stops moving, confirming truncation independence.
    """
    family = get_family(family)
    family.require_valid(p)
    cfg = cfg or _DEFAULT_CFG
    count = family.bound_state_count(p)
    if n >= count:
        raise OutOfSpectrumError(f"{family.name}: n={n} beyond bound_state_count={count}")

    def veff(x):
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            return family.potential_minus(p, x)

    ref = _reference_potential(family, p, veff)
    x_star, v_floor = _well_minimum(family, ref)
    ceiling = family.ceiling(p)
    tol = cfg.tolerance

    def converge_on_box(box_cfg, e_hint):
        n_pts = cfg.grid_points

        def solve_at(points, bracket):
            grid = _build_grid(family, p, veff, ref, None, x_star, points, box_cfg)
            if bracket is not None:
                lo, hi = bracket
                if not (_count_at(grid, lo) <= n < _count_at(grid, hi)):
                    lo, hi = _initial_bracket(family, grid, n, ceiling)
            elif box_cfg.energy_bracket is not None:
                lo, hi = box_cfg.energy_bracket
            else:
                lo, hi = _initial_bracket(family, grid, n, ceiling)
            return _solve_on_grid(grid, n, lo, hi, box_cfg)

        if e_hint is None:
            e_prev = solve_at(n_pts, None)
        else:
            width = 1e-3 * (1.0 + abs(e_hint))
            e_prev = solve_at(n_pts, (e_hint - width, e_hint + width))
        while n_pts < cfg.max_grid_points:
            n_pts *= 2
            width = 1e-4 * (1.0 + abs(e_prev))
            e_new = solve_at(n_pts, (e_prev - width, e_prev + width))
            if abs(e_new - e_prev) <= 0.1 * tol * (1.0 + abs(e_new)):
                return e_new
            e_prev = e_new
        raise OracleError(
            f"{family.name}: eigenvalue not converged at {cfg.max_grid_points} points"
        )

    e_top = _box_energy(ref, n, x_star, v_floor, ceiling, p.hbar)
    energy = None
    for _ in range(12):
        box_cfg = _auto_box_cfg(family, p, veff, ref, x_star, cfg, e_top, e_top, _PHASE_MARGIN)
        try:
            energy = converge_on_box(box_cfg, None)
            break
        except BracketError:
            if cfg.energy_bracket is not None:
                raise  # the user's bracket genuinely misses the level
            # the box reference energy undershot the level: raise it and retry
            if math.isfinite(ceiling):
                gap = ceiling - e_top
                if gap <= 1e-12 * (1.0 + abs(ceiling)):
                    raise
                e_top = ceiling - 0.25 * gap
            else:
                e_top = v_floor + 4.0 * (e_top - v_floor)
    if energy is None:
        raise BracketError(f"{family.name}: no box contained level {n}")

    fixed_box = (
        box_cfg is cfg  # finite domain
        or cfg.box_left is not None
        or cfg.box_right is not None
        or cfg.energy_bracket is not None
    )
    if fixed_box:
        return energy
    for attempt in range(3):
        if math.isfinite(ceiling):
            e_anchor = energy + 0.75 * (ceiling - energy)
        else:
            e_anchor = energy + 0.5 * (1.0 + abs(energy))
        wide_cfg = _auto_box_cfg(
            family, p, veff, ref, x_star, cfg, e_anchor, energy,
            phase_target=24.0 + 12.0 * attempt,
        )
        e_wide = converge_on_box(wide_cfg, energy)
        if abs(e_wide - energy) <= tol * (1.0 + abs(energy)):
            return e_wide
        energy = e_wide
    raise TruncationError(
        f"{family.name}: eigenvalue still moving as the box is enlarged "
        f"(last value {energy})"
    )


def node_count(family, p: Params, energy: float, cfg: SolverConfig | None = None) -> int:
    """Sign changes of the left-shot wavefunction strictly inside the box."""
    family = get_family(family)
    family.require_valid(p)
    cfg = cfg or _DEFAULT_CFG

    def veff(x):
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            return family.potential_minus(p, x)

    ref = _reference_potential(family, p, veff)
    x_star, v_floor = _well_minimum(family, ref)
    ceiling = family.ceiling(p)
    e_box = max(energy, v_floor) + 0.5 * (1.0 + abs(v_floor))
    if math.isfinite(ceiling):
        e_box = min(e_box, v_floor + 0.98 * (ceiling - v_floor))
    grid = _build_grid(family, p, veff, ref, e_box, x_star, cfg.grid_points, cfg)
    return _count_at(grid, energy)


def singular_loglog_slope(family, p: Params, cfg: SolverConfig | None = None) -> float:
    """Fitted slope of ln psi against ln |f1| approaching the singular origin.

    The converged ground-state energy is used and the radial equation is
    re-integrated on a fine mesh spanning the last decade before the
    endpoint; the regular solution obeys psi ~ |f1|^(-a/hbar).
    """
    family = get_family(family)
    ip = family.require_valid(p)
    if not family.domain.singular_left:
        raise OracleError(f"{family.name}: no singular left endpoint")
    energy = eigenvalue(family, p, 0, cfg)

    def veff(x):
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            return family.potential_minus(p, x)

    s, mu = _series_exponent(veff, family.domain.left, +1, p.hbar, 1e-6)
    h = 5e-7
    r0 = family.domain.left + 1e-6
    npts = int(4e-4 / h)
    r = r0 + h * np.arange(npts + 1)
    v = np.asarray(veff(r), dtype=float)
    t = np.minimum(h * h * (v - energy) / (12.0 * p.hbar**2), _T_CAP)
    c = ((2.0 + 10.0 * t) / (1.0 - t)).tolist()
    d = r - family.domain.left
    psi = np.empty(npts + 1)
    psi[0] = d[0] ** s * (1.0 + mu * d[0])
    psi[1] = d[1] ** s * (1.0 + mu * d[1])
    for i in range(1, npts):
        psi[i + 1] = c[i] * psi[i] - psi[i - 1]
    window = (d >= 2e-5) & (d <= 2e-4)
    f1 = np.abs(np.asarray(family._f1(ip, r[window]), dtype=float))
    slope = np.polyfit(np.log(f1), np.log(np.abs(psi[window])), 1)[0]
    return float(slope)
