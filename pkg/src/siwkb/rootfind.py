"""Bracketed scalar root finding and well-minimum location."""

from __future__ import annotations

import math

from .errors import NoBoundRegionError

__all__ = ["refine_root", "golden_minimize", "march_to_wall"]

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def refine_root(g, lo: float, hi: float, *, xtol_rel: float = 1e-13, f_lo=None, f_hi=None):
    """Root of g in [lo, hi] (sign change required) to |dx| <= xtol_rel*(1+|x|).

    Bisection narrows the bracket, then secant steps (kept inside the
    bracket, with bisection fallback) polish the root.
    """
    flo = g(lo) if f_lo is None else f_lo
    fhi = g(hi) if f_hi is None else f_hi
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise ValueError("refine_root requires a sign change on [lo, hi]")

    # bisection to a moderate bracket
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if hi - lo <= 1e-6 * (1.0 + abs(mid)):
            break
        fmid = g(mid)
        if fmid == 0.0:
            return mid
        if flo * fmid < 0.0:
            hi, fhi = mid, fmid
        else:
            lo, flo = mid, fmid

    # secant polish, safeguarded by the bracket
    x_prev, f_prev = lo, flo
    x_cur, f_cur = hi, fhi
    for _ in range(80):
        if f_cur != f_prev:
            x_new = x_cur - f_cur * (x_cur - x_prev) / (f_cur - f_prev)
        else:
            x_new = 0.5 * (lo + hi)
        if not (lo < x_new < hi):
            x_new = 0.5 * (lo + hi)
        f_new = g(x_new)
        if f_new == 0.0:
            return x_new
        if flo * f_new < 0.0:
            hi, fhi = x_new, f_new
        else:
            lo, flo = x_new, f_new
        step = abs(x_new - x_cur)
        x_prev, f_prev = x_cur, f_cur
        x_cur, f_cur = x_new, f_new
        if step <= xtol_rel * (1.0 + abs(x_new)) or (hi - lo) <= xtol_rel * (1.0 + abs(x_new)):
            break
    return x_cur


def golden_minimize(f, lo: float, hi: float, *, iters: int = 90):
    """Golden-section minimum of a unimodal f on [lo, hi]; returns (x, f(x))."""
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
        if b - a <= 1e-14 * (1.0 + abs(a) + abs(b)):
            break
    x = 0.5 * (a + b)
    return x, f(x)


def march_to_wall(g, x_inside: float, limit: float, direction: int):
    """Bracket the sign change of g between x_inside (g>0) and a wall.

    direction=-1 marches toward ``limit`` on the left, +1 on the right;
    ``limit`` may be +-inf (geometric step doubling) or finite (geometric
    approach to the endpoint).  Returns (lo, hi) with the root inside.
    """
    if math.isfinite(limit):
        prev = x_inside
        for k in range(1, 1000):
            x = limit + (x_inside - limit) * 0.5**k
            if g(x) < 0.0:
                return (x, prev) if x < prev else (prev, x)
            prev = x
        raise NoBoundRegionError("no wall found approaching the finite endpoint")
    step = max(1.0, 0.5 * abs(x_inside))
    prev = x_inside
    for _ in range(200):
        x = x_inside + direction * step
        if g(x) < 0.0:
            return (x, prev) if x < prev else (prev, x)
        prev = x
        step *= 2.0
    raise NoBoundRegionError("no wall found on the unbounded side")
