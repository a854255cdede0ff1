"""Catalog of the ten conventional shape-invariant potential families.

Every family is generated by a superpotential W(x, a) = a*f1(x) + f2(x)
with an additive shape-invariance step a -> a + hbar.  The partner
potentials are V_-/+ = W^2 -/+ hbar*W', the spectrum of the lower partner
is E_n = g(a + n*hbar) - g(a) with E_0 = 0, and the generalized Langer
correction is (hbar^2/4) * f1'(x).

Families fall into three structural classes:

* Class I    W = f2(x) + alpha*a        (f1 = alpha constant)
* Class II   W = a*f1(x) + b/a          (f2 constant)
* Class III  W = a*f1(x) + f2(x)        (neither constant)

with the Riccati constraints f1' = f1^2 - lambda and, for Class III,
f2' = f1*f2 - eps.  Parameters exposed to callers are the conventional
physical ones (A, B, omega, ell, e2); the internal (a, b) mapping is
recorded in every validity report.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, OutOfSpectrumError, UnsupportedFamilyError, ValidationError

__all__ = [
    "DomainSpec",
    "Params",
    "InternalParams",
    "SpectrumLevel",
    "ValidityReport",
    "Family",
    "FAMILIES",
    "FAMILY_NAMES",
    "get_family",
    "superpotential",
    "superpotential_prime",
    "potential_minus",
    "potential_plus",
    "f1_and_derivative",
    "langer_term",
    "exact_energy",
    "bound_state_count",
    "validate",
    "spectrum",
]


@dataclass(frozen=True)
class DomainSpec:
    """Open interval on which a family lives, with endpoint singularity flags.

    An endpoint is flagged singular exactly when |f1| diverges there.
    """

    left: float
    right: float
    singular_left: bool = False
    singular_right: bool = False

    @property
    def width(self) -> float:
        return self.right - self.left

    def contains(self, x) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all(x > self.left) and np.all(x < self.right))


@dataclass(frozen=True)
class Params:
    """Physical (table-row) parameters; each family reads the fields it uses."""

    hbar: float = 1.0
    omega: float | None = None
    A: float | None = None
    B: float | None = None
    ell: float | None = None
    e2: float | None = None

    def replace(self, **kw) -> "Params":
        return dataclasses.replace(self, **kw)

    def as_dict(self) -> dict:
        out = {"hbar": self.hbar}
        for key in ("omega", "A", "B", "ell", "e2"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        return out


@dataclass(frozen=True)
class InternalParams:
    """Structural-form parameters: W = a*f1 + f2-part, spectrum from g(a)."""

    a: float
    b: float
    lam: int
    alpha: float
    eps: float
    omega: float
    hbar: float

    def as_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "lambda": self.lam,
            "alpha": self.alpha,
            "epsilon": self.eps,
            "omega": self.omega,
            "hbar": self.hbar,
        }


@dataclass(frozen=True)
class SpectrumLevel:
    n: int
    energy: float
    g_shift: float


@dataclass(frozen=True)
class ValidityReport:
    family: str
    valid: bool
    violations: tuple[str, ...]
    internal: InternalParams | None


def _finite(*vals) -> bool:
    return all(v is not None and math.isfinite(v) for v in vals)


class Family:
    """Base class; concrete families supply mapping, primitives and constraints."""

    name: str = ""
    display_name: str = ""
    class_tag: str = ""
    param_names: tuple[str, ...] = ()
    lam: int = 0
    domain: DomainSpec = DomainSpec(-math.inf, math.inf)
    transform_increasing: bool = True

    # ------------------------------------------------------------------
    # parameter handling
    # ------------------------------------------------------------------
    def internal(self, p: Params) -> InternalParams:
        missing = [k for k in self.param_names if getattr(p, k) is None]
        if missing:
            raise ValidationError(f"{self.name}: missing parameters {missing}")
        if not _finite(p.hbar, *(getattr(p, k) for k in self.param_names)):
            raise ValidationError(f"{self.name}: parameters must be finite")
        if p.hbar <= 0:
            raise ValidationError(f"{self.name}: hbar must be > 0")
        return self._map(p)

    def _map(self, p: Params) -> InternalParams:
        raise NotImplementedError

    def _constraints(self, ip: InternalParams, p: Params) -> list[str]:
        """Return human-readable violation messages (empty when valid)."""
        raise NotImplementedError

    def validate(self, p: Params) -> ValidityReport:
        try:
            ip = self.internal(p)
        except ValidationError as exc:
            return ValidityReport(self.name, False, (str(exc),), None)
        violations = self._constraints(ip, p)
        return ValidityReport(self.name, not violations, tuple(violations), ip)

    def require_valid(self, p: Params) -> InternalParams:
        report = self.validate(p)
        if not report.valid:
            raise ValidationError(f"{self.name}: " + "; ".join(report.violations))
        return report.internal

    # ------------------------------------------------------------------
    # coordinate domain
    # ------------------------------------------------------------------
    def check_domain(self, x) -> None:
        if not self.domain.contains(x):
            raise DomainError(
                f"{self.name}: x must lie strictly inside "
                f"({self.domain.left}, {self.domain.right})"
            )

    # ------------------------------------------------------------------
    # structural primitives (subclass/class-level)
    # ------------------------------------------------------------------
    def _f1(self, ip: InternalParams, x):
        raise NotImplementedError

    def _f1_prime(self, ip: InternalParams, x):
        f1 = self._f1(ip, x)
        return f1 * f1 - ip.lam

    def _f2(self, ip: InternalParams, x):
        raise NotImplementedError

    def _f2_prime(self, ip: InternalParams, x):
        raise NotImplementedError

    def _w(self, ip: InternalParams, x):
        raise NotImplementedError

    def _w_prime(self, ip: InternalParams, x):
        raise NotImplementedError

    def _dw_da(self, ip: InternalParams, x):
        raise NotImplementedError

    def _g(self, ip: InternalParams, a):
        raise NotImplementedError

    def _dg_da(self, ip: InternalParams, a):
        raise NotImplementedError

    # Partner potentials in analytically grouped form.  The naive
    # W^2 -/+ hbar W' cancels catastrophically near singular endpoints
    # (the leading f1^2 pieces annihilate), so each structural class
    # combines the coefficients first.
    def _v_minus(self, ip: InternalParams, x):
        w = self._w(ip, x)
        return w * w - ip.hbar * self._w_prime(ip, x)

    def _v_plus(self, ip: InternalParams, x):
        w = self._w(ip, x)
        return w * w + ip.hbar * self._w_prime(ip, x)

    def _v_langer(self, ip: InternalParams, x):
        return self._v_minus(ip, x) + 0.25 * ip.hbar**2 * self._f1_prime(ip, x)

    # ------------------------------------------------------------------
    # public operations
    # ------------------------------------------------------------------
    def superpotential(self, p: Params, x):
        self.check_domain(x)
        return self._w(self.require_valid(p), x)

    def superpotential_prime(self, p: Params, x):
        self.check_domain(x)
        return self._w_prime(self.require_valid(p), x)

    def dw_da(self, p: Params, x):
        self.check_domain(x)
        return self._dw_da(self.require_valid(p), x)

    def f1_and_derivative(self, p: Params, x):
        self.check_domain(x)
        ip = self.require_valid(p)
        return self._f1(ip, x), self._f1_prime(ip, x)

    def f2_and_derivative(self, p: Params, x):
        self.check_domain(x)
        ip = self.require_valid(p)
        return self._f2(ip, x), self._f2_prime(ip, x)

    def potential_minus(self, p: Params, x):
        self.check_domain(x)
        return self._v_minus(self.require_valid(p), x)

    def potential_plus(self, p: Params, x):
        self.check_domain(x)
        return self._v_plus(self.require_valid(p), x)

    def langer_term(self, p: Params, x):
        """Generalized Langer correction (hbar^2/4) f1'(x); zero for Class I."""
        self.check_domain(x)
        ip = self.require_valid(p)
        return 0.25 * ip.hbar**2 * self._f1_prime(ip, x)

    def g_of_a(self, p: Params, a_value: float) -> float:
        return self._g(self.internal(p), a_value)

    def dg_da(self, p: Params, a_value: float) -> float:
        return self._dg_da(self.internal(p), a_value)

    def shape_energy(self, p: Params, steps: float) -> float:
        """g(a + steps*hbar) - g(a) for a real (possibly half-integer) step count."""
        ip = self.internal(p)
        return self._g(ip, ip.a + steps * ip.hbar) - self._g(ip, ip.a)

    def bound_state_count(self, p: Params):
        """Number of bound levels, or math.inf for an infinite tower."""
        self.require_valid(p)
        return self._count(self.internal(p), p)

    def _count(self, ip: InternalParams, p: Params):
        return math.inf

    def exact_energy(self, p: Params, n: int) -> float:
        if n < 0 or int(n) != n:
            raise ValidationError("level index n must be a non-negative integer")
        count = self.bound_state_count(p)
        if n >= count:
            raise OutOfSpectrumError(
                f"{self.name}: level n={n} is beyond the last bound state "
                f"(bound_state_count={count})"
            )
        if n == 0:
            return 0.0
        return self.shape_energy(p, n)

    def spectrum(self, p: Params, n_max: int) -> list[SpectrumLevel]:
        ip = self.require_valid(p)
        count = self.bound_state_count(p)
        levels = []
        for n in range(min(n_max, count if count is not math.inf else n_max)):
            levels.append(
                SpectrumLevel(n, self.exact_energy(p, n), self._g(ip, ip.a + n * ip.hbar))
            )
        return levels

    def ceiling(self, p: Params) -> float:
        """Continuum edge: the smaller limit of W^2 at the open ends (inf if confined)."""
        self.require_valid(p)
        return self._ceiling(self.internal(p))

    def _ceiling(self, ip: InternalParams) -> float:
        return math.inf

    def shift_internal_a(self, p: Params, delta: float) -> Params:
        """Physical parameters whose internal a is shifted by delta (b unchanged)."""
        raise NotImplementedError

    # transformed coordinate used by the closed-form turning-point formulas
    def transform(self, p: Params, x):
        raise NotImplementedError

    def inverse_transform(self, p: Params, t):
        raise NotImplementedError

    def asymptotic_slope_prediction(self, p: Params, side: str) -> float:
        """Closed-form limit of sqrt(V_langer - E)/|f1| at a singular endpoint."""
        raise UnsupportedFamilyError(f"{self.name}: no singular endpoint on side {side!r}")

    def _require_singular(self, side: str) -> None:
        ok = (side == "left" and self.domain.singular_left) or (
            side == "right" and self.domain.singular_right
        )
        if not ok:
            raise UnsupportedFamilyError(
                f"{self.name}: endpoint {side!r} is not singular"
            )

    def __repr__(self) -> str:
        return f"<Family {self.name} ({self.class_tag})>"


# ----------------------------------------------------------------------
# Class I: W = f2(x) + alpha*a,  alpha*f2 - f2' = eps
# ----------------------------------------------------------------------
class _ClassI(Family):
    def _f1(self, ip, x):
        return ip.alpha + 0.0 * np.asarray(x, dtype=float)

    def _f1_prime(self, ip, x):
        return 0.0 * np.asarray(x, dtype=float)

    def _w(self, ip, x):
        return self._f2(ip, x) + ip.alpha * ip.a

    def _w_prime(self, ip, x):
        return self._f2_prime(ip, x)

    def _dw_da(self, ip, x):
        return ip.alpha + 0.0 * np.asarray(x, dtype=float)

    def _g(self, ip, a):
        return -a * (ip.alpha**2 * a + 2.0 * ip.eps)

    def _dg_da(self, ip, a):
        return -2.0 * (ip.alpha**2 * a + ip.eps)

    def _v_signed(self, ip, x, sgn):
        f2 = self._f2(ip, x)
        al, a, h = ip.alpha, ip.a, ip.hbar
        return f2 * f2 + al * (2.0 * a + sgn * h) * f2 + (al * a) ** 2 - sgn * ip.eps * h

    def _v_minus(self, ip, x):
        return self._v_signed(ip, x, -1.0)

    def _v_plus(self, ip, x):
        return self._v_signed(ip, x, +1.0)

    def _v_langer(self, ip, x):
        return self._v_minus(ip, x)


class Harmonic(_ClassI):
    """W = (omega/2) x on the whole line; evenly spaced tower E_n = n hbar omega."""

    name = "harmonic"
    display_name = "Harmonic Oscillator"
    class_tag = "IA"
    param_names = ("omega",)
    lam = 0
    domain = DomainSpec(-math.inf, math.inf)

    def _map(self, p):
        # W is independent of a; eps = -omega/2 fixes the spectrum scale.
        return InternalParams(a=0.0, b=0.0, lam=0, alpha=0.0, eps=-0.5 * p.omega, omega=p.omega, hbar=p.hbar)

    def _constraints(self, ip, p):
        return [] if p.omega > 0 else ["omega > 0 violated"]

    def _f2(self, ip, x):
        return 0.5 * ip.omega * np.asarray(x, dtype=float)

    def _f2_prime(self, ip, x):
        return 0.5 * ip.omega + 0.0 * np.asarray(x, dtype=float)

    def shift_internal_a(self, p, delta):
        return p

    def transform(self, p, x):
        return 0.5 * p.omega * np.asarray(x, dtype=float)

    def inverse_transform(self, p, t):
        return 2.0 * np.asarray(t, dtype=float) / p.omega


class Morse(_ClassI):
    """W = A - exp(-x); finite anharmonic ladder E_n = n hbar (2A - n hbar)."""

    name = "morse"
    display_name = "Morse"
    class_tag = "IB"
    param_names = ("A",)
    lam = 1  # f1 = alpha = -1, so f1' = 0 = f1^2 - 1
    domain = DomainSpec(-math.inf, math.inf)

    def _map(self, p):
        return InternalParams(a=-p.A, b=0.0, lam=1, alpha=-1.0, eps=0.0, omega=0.0, hbar=p.hbar)

    def _constraints(self, ip, p):
        return [] if p.A > 0 else ["A > 0 violated"]

    def _f2(self, ip, x):
        return -np.exp(-np.asarray(x, dtype=float))

    def _f2_prime(self, ip, x):
        return np.exp(-np.asarray(x, dtype=float))

    def _count(self, ip, p):
        return max(0, math.ceil(p.A / p.hbar))

    def _ceiling(self, ip):
        return ip.a**2

    def shift_internal_a(self, p, delta):
        return p.replace(A=p.A - delta)

    def transform(self, p, x):
        return -np.exp(-np.asarray(x, dtype=float))

    def inverse_transform(self, p, t):
        return -np.log(-np.asarray(t, dtype=float))


# ----------------------------------------------------------------------
# Class II: W = a*f1 + b/a,  f1' = f1^2 - lam
# ----------------------------------------------------------------------
class _ClassII(Family):
    def _f2(self, ip, x):
        return ip.b / ip.a + 0.0 * np.asarray(x, dtype=float)

    def _f2_prime(self, ip, x):
        return 0.0 * np.asarray(x, dtype=float)

    def _w(self, ip, x):
        return ip.a * self._f1(ip, x) + ip.b / ip.a

    def _w_prime(self, ip, x):
        return ip.a * self._f1_prime(ip, x)

    def _dw_da(self, ip, x):
        return self._f1(ip, x) - ip.b / ip.a**2

    def _g(self, ip, a):
        return -ip.b**2 / a**2 - ip.lam * a**2

    def _dg_da(self, ip, a):
        return 2.0 * ip.b**2 / a**3 - 2.0 * ip.lam * a

    def _v_signed(self, ip, x, sgn):
        f1 = self._f1(ip, x)
        a, b, h, lam = ip.a, ip.b, ip.hbar, ip.lam
        return a * (a + sgn * h) * f1 * f1 + 2.0 * b * f1 + (b / a) ** 2 - sgn * a * lam * h

    def _v_minus(self, ip, x):
        return self._v_signed(ip, x, -1.0)

    def _v_plus(self, ip, x):
        return self._v_signed(ip, x, +1.0)

    def _v_langer(self, ip, x):
        f1 = self._f1(ip, x)
        a, b, h, lam = ip.a, ip.b, ip.hbar, ip.lam
        return (
            (a - 0.5 * h) ** 2 * f1 * f1
            + 2.0 * b * f1
            + (b / a) ** 2
            + lam * (a * h - 0.25 * h * h)
        )


class Coulomb(_ClassII):
    """Radial Coulomb problem: W = -ell/r + e2/(2 ell), f1 = -1/r."""

    name = "coulomb"
    display_name = "Coulomb"
    class_tag = "IIA"
    param_names = ("ell", "e2")
    lam = 0
    domain = DomainSpec(0.0, math.inf, singular_left=True)

    def _map(self, p):
        return InternalParams(a=p.ell, b=0.5 * p.e2, lam=0, alpha=0.0, eps=0.0, omega=0.0, hbar=p.hbar)

    def _constraints(self, ip, p):
        out = []
        if not p.e2 > 0:
            out.append("e2 > 0 violated")
        if not p.ell > 0.5 * p.hbar:
            out.append("ell > hbar/2 violated")
        return out

    def _f1(self, ip, x):
        return -1.0 / np.asarray(x, dtype=float)

    def _ceiling(self, ip):
        return (ip.b / ip.a) ** 2

    def shift_internal_a(self, p, delta):
        return p.replace(ell=p.ell + delta)

    def transform(self, p, x):
        return -1.0 / np.asarray(x, dtype=float)

    def inverse_transform(self, p, t):
        return -1.0 / np.asarray(t, dtype=float)

    def asymptotic_slope_prediction(self, p, side):
        self._require_singular(side)
        return p.ell - 0.5 * p.hbar


class RosenMorseTrig(_ClassII):
    """W = -A cot x - B/A on (0, pi); infinite tower with both walls singular."""

    name = "rosen-morse-trig"
    display_name = "Rosen-Morse (Trigonometric)"
    class_tag = "IIB1"
    param_names = ("A", "B")
    lam = -1
    domain = DomainSpec(0.0, math.pi, singular_left=True, singular_right=True)

    def _map(self, p):
        return InternalParams(a=p.A, b=-p.B, lam=-1, alpha=0.0, eps=0.0, omega=0.0, hbar=p.hbar)

    def _constraints(self, ip, p):
        return [] if p.A > 0.5 * p.hbar else ["A > hbar/2 violated"]

    def _f1(self, ip, x):
        return -1.0 / np.tan(np.asarray(x, dtype=float))

    def _f1_prime(self, ip, x):
        return 1.0 / np.sin(np.asarray(x, dtype=float)) ** 2

    def shift_internal_a(self, p, delta):
        return p.replace(A=p.A + delta)

    def transform(self, p, x):
        return -1.0 / np.tan(np.asarray(x, dtype=float))

    def inverse_transform(self, p, t):
        return 0.5 * math.pi + np.arctan(np.asarray(t, dtype=float))

    def asymptotic_slope_prediction(self, p, side):
        self._require_singular(side)
        return p.A - 0.5 * p.hbar


class RosenMorseHyp(_ClassII):
    """W = A tanh x + B/A on the line; finitely many levels below (A - |B|/A)^2."""

    name = "rosen-morse-hyp"
    display_name = "Rosen-Morse (Hyperbolic)"
    class_tag = "IIB2"
    param_names = ("A", "B")
    lam = 1
    domain = DomainSpec(-math.inf, math.inf)
    transform_increasing = False

    def _map(self, p):
        return InternalParams(a=-p.A, b=-p.B, lam=1, alpha=0.0, eps=0.0, omega=0.0, hbar=p.hbar)

    def _constraints(self, ip, p):
        out = []
        if not p.A > 0:
            out.append("A > 0 violated")
        elif not p.A**2 > abs(p.B):
            out.append("A^2 > |B| violated")
        return out

    def _f1(self, ip, x):
        return -np.tanh(np.asarray(x, dtype=float))

    def _f1_prime(self, ip, x):
        return -1.0 / np.cosh(np.asarray(x, dtype=float)) ** 2

    def _count(self, ip, p):
        return max(0, math.ceil((p.A - math.sqrt(abs(p.B))) / p.hbar))

    def _ceiling(self, ip):
        a_abs, b_abs = abs(ip.a), abs(ip.b)
        return (a_abs - b_abs / a_abs) ** 2

    def shift_internal_a(self, p, delta):
        return p.replace(A=p.A - delta)

    def transform(self, p, x):
        return -np.tanh(np.asarray(x, dtype=float))

    def inverse_transform(self, p, t):
        return np.arctanh(-np.asarray(t, dtype=float))


class Eckart(_ClassII):
    """W = -A coth r + B/A on (0, inf); requires B > A^2 for binding."""

    name = "eckart"
    display_name = "Eckart"
    class_tag = "IIB3"
    param_names = ("A", "B")
    lam = 1
    domain = DomainSpec(0.0, math.inf, singular_left=True)

    def _map(self, p):
        return InternalParams(a=p.A, b=p.B, lam=1, alpha=0.0, eps=0.0, omega=0.0, hbar=p.hbar)

    def _constraints(self, ip, p):
        out = []
        if not p.A > 0.5 * p.hbar:
            out.append("A > hbar/2 violated")
        if p.A > 0 and not p.B > p.A**2:
            out.append("B > A^2 violated")
        return out

    def _f1(self, ip, x):
        return -1.0 / np.tanh(np.asarray(x, dtype=float))

    def _f1_prime(self, ip, x):
        return 1.0 / np.sinh(np.asarray(x, dtype=float)) ** 2

    def _count(self, ip, p):
        return max(0, math.ceil((math.sqrt(p.B) - p.A) / p.hbar))

    def _ceiling(self, ip):
        return (ip.b / ip.a - ip.a) ** 2

    def shift_internal_a(self, p, delta):
        return p.replace(A=p.A + delta)

    def transform(self, p, x):
        return -1.0 / np.tanh(np.asarray(x, dtype=float))

    def inverse_transform(self, p, t):
        t = np.asarray(t, dtype=float)
        return 0.5 * np.log((1.0 - t) / (-1.0 - t))

    def asymptotic_slope_prediction(self, p, side):
        self._require_singular(side)
        return p.A - 0.5 * p.hbar


# ----------------------------------------------------------------------
# Class IIIA: W = a*f1 - omega/(2 f1),  f1 = -1/r
# ----------------------------------------------------------------------
class Oscillator3D(Family):
    """Radial oscillator: W = (omega/2) r - ell/r; tower E_n = 2 n hbar omega."""

    name = "oscillator-3d"
    display_name = "3D Oscillator"
    class_tag = "IIIA"
    param_names = ("ell", "omega")
    lam = 0
    domain = DomainSpec(0.0, math.inf, singular_left=True)

    def _map(self, p):
        return InternalParams(a=p.ell, b=0.0, lam=0, alpha=0.0, eps=-p.omega, omega=p.omega, hbar=p.hbar)

    def _constraints(self, ip, p):
        out = []
        if not p.omega > 0:
            out.append("omega > 0 violated")
        if not p.ell > 0.5 * p.hbar:
            out.append("ell > hbar/2 violated")
        return out

    def _f1(self, ip, x):
        return -1.0 / np.asarray(x, dtype=float)

    def _f2(self, ip, x):
        return 0.5 * ip.omega * np.asarray(x, dtype=float)

    def _f2_prime(self, ip, x):
        return 0.5 * ip.omega + 0.0 * np.asarray(x, dtype=float)

    def _w(self, ip, x):
        x = np.asarray(x, dtype=float)
        return ip.a * self._f1(ip, x) + 0.5 * ip.omega * x

    def _w_prime(self, ip, x):
        return ip.a * self._f1_prime(ip, x) + 0.5 * ip.omega

    def _dw_da(self, ip, x):
        return self._f1(ip, x)

    def _g(self, ip, a):
        return 2.0 * ip.omega * a

    def _dg_da(self, ip, a):
        return 2.0 * ip.omega + 0.0 * a

    def _v_signed(self, ip, x, sgn):
        f1 = self._f1(ip, x)
        a, h, om = ip.a, ip.hbar, ip.omega
        return a * (a + sgn * h) * f1 * f1 - om * (a - sgn * 0.5 * h) + 0.25 * om * om / (f1 * f1)

    def _v_minus(self, ip, x):
        return self._v_signed(ip, x, -1.0)

    def _v_plus(self, ip, x):
        return self._v_signed(ip, x, +1.0)

    def _v_langer(self, ip, x):
        f1 = self._f1(ip, x)
        a, h, om = ip.a, ip.hbar, ip.omega
        return (a - 0.5 * h) ** 2 * f1 * f1 - om * (a + 0.5 * h) + 0.25 * om * om / (f1 * f1)

    def shift_internal_a(self, p, delta):
        return p.replace(ell=p.ell + delta)

    def transform(self, p, x):
        return 1.0 / np.asarray(x, dtype=float) ** 2

    def inverse_transform(self, p, t):
        return 1.0 / np.sqrt(np.asarray(t, dtype=float))

    transform_increasing = False

    def asymptotic_slope_prediction(self, p, side):
        self._require_singular(side)
        return p.ell - 0.5 * p.hbar


# ----------------------------------------------------------------------
# Class IIIB: W = a*f1 + b*sqrt(|f1^2 - lam|)
# ----------------------------------------------------------------------
class _ClassIIIB(Family):
    def _f2(self, ip, x):
        f1 = self._f1(ip, x)
        return ip.b * np.sqrt(np.abs(f1 * f1 - ip.lam))

    def _f2_prime(self, ip, x):
        return self._f1(ip, x) * self._f2(ip, x)

    def _w(self, ip, x):
        return ip.a * self._f1(ip, x) + self._f2(ip, x)

    def _w_prime(self, ip, x):
        return ip.a * self._f1_prime(ip, x) + self._f2_prime(ip, x)

    def _dw_da(self, ip, x):
        return self._f1(ip, x)

    def _g(self, ip, a):
        return -ip.lam * a**2

    def _dg_da(self, ip, a):
        return -2.0 * ip.lam * a

    def _v_signed(self, ip, x, sgn):
        f1 = self._f1(ip, x)
        f2 = self._f2(ip, x)
        a, h, lam = ip.a, ip.hbar, ip.lam
        return a * (a + sgn * h) * f1 * f1 + (2.0 * a + sgn * h) * f1 * f2 + f2 * f2 - sgn * a * lam * h

    def _v_minus(self, ip, x):
        return self._v_signed(ip, x, -1.0)

    def _v_plus(self, ip, x):
        return self._v_signed(ip, x, +1.0)

    def _v_langer(self, ip, x):
        f1 = self._f1(ip, x)
        f2 = self._f2(ip, x)
        a, h, lam = ip.a, ip.hbar, ip.lam
        return (
            (a - 0.5 * h) ** 2 * f1 * f1
            + (2.0 * a - h) * f1 * f2
            + f2 * f2
            + lam * (a * h - 0.25 * h * h)
        )


class ScarfTrig(_ClassIIIB):
    """W = A tan x - B sec x on (-pi/2, pi/2); both walls singular."""

    name = "scarf-trig"
    display_name = "Scarf (Trigonometric)"
    class_tag = "IIIB1"
    param_names = ("A", "B")
    lam = -1
    domain = DomainSpec(-0.5 * math.pi, 0.5 * math.pi, singular_left=True, singular_right=True)

    def _map(self, p):
        return InternalParams(a=p.A, b=-p.B, lam=-1, alpha=0.0, eps=0.0, omega=0.0, hbar=p.hbar)

    def _constraints(self, ip, p):
        return [] if p.A > abs(p.B) + 0.5 * p.hbar else ["A > |B| + hbar/2 violated"]

    def _f1(self, ip, x):
        return np.tan(np.asarray(x, dtype=float))

    def _f1_prime(self, ip, x):
        return 1.0 / np.cos(np.asarray(x, dtype=float)) ** 2

    def _f2(self, ip, x):
        return ip.b / np.cos(np.asarray(x, dtype=float))

    def shift_internal_a(self, p, delta):
        return p.replace(A=p.A + delta)

    def transform(self, p, x):
        return np.sin(np.asarray(x, dtype=float))

    def inverse_transform(self, p, t):
        return np.arcsin(np.asarray(t, dtype=float))

    def asymptotic_slope_prediction(self, p, side):
        self._require_singular(side)
        if side == "left":
            return p.A + p.B - 0.5 * p.hbar
        return p.A - p.B - 0.5 * p.hbar


class ScarfHyp(_ClassIIIB):
    """W = A tanh x + B sech x on the line; ladder E_n = n hbar (2A - n hbar)."""

    name = "scarf-hyp"
    display_name = "Scarf (Hyperbolic)"
    class_tag = "IIIB2"
    param_names = ("A", "B")
    lam = 1
    domain = DomainSpec(-math.inf, math.inf)

    def _map(self, p):
        return InternalParams(a=-p.A, b=p.B, lam=1, alpha=0.0, eps=0.0, omega=0.0, hbar=p.hbar)

    def _constraints(self, ip, p):
        return [] if p.A > 0.5 * p.hbar else ["A > hbar/2 violated"]

    def _f1(self, ip, x):
        return -np.tanh(np.asarray(x, dtype=float))

    def _f1_prime(self, ip, x):
        return -1.0 / np.cosh(np.asarray(x, dtype=float)) ** 2

    def _f2(self, ip, x):
        return ip.b / np.cosh(np.asarray(x, dtype=float))

    def _count(self, ip, p):
        return max(0, math.ceil(p.A / p.hbar))

    def _ceiling(self, ip):
        return ip.a**2

    def shift_internal_a(self, p, delta):
        return p.replace(A=p.A - delta)

    def transform(self, p, x):
        return np.sinh(np.asarray(x, dtype=float))

    def inverse_transform(self, p, t):
        return np.arcsinh(np.asarray(t, dtype=float))


class PoschlTeller(_ClassIIIB):
    """W = A coth r - B csch r on (0, inf); needs B > A + hbar/2 at the wall."""

    name = "poschl-teller"
    display_name = "Poschl-Teller (Hyperbolic)"
    class_tag = "IIIB3"
    param_names = ("A", "B")
    lam = 1
    domain = DomainSpec(0.0, math.inf, singular_left=True)

    def _map(self, p):
        return InternalParams(a=-p.A, b=-p.B, lam=1, alpha=0.0, eps=0.0, omega=0.0, hbar=p.hbar)

    def _constraints(self, ip, p):
        out = []
        if not p.A > 0:
            out.append("A > 0 violated")
        if not p.B > p.A + 0.5 * p.hbar:
            out.append("B > A + hbar/2 violated")
        return out

    def _f1(self, ip, x):
        return -1.0 / np.tanh(np.asarray(x, dtype=float))

    def _f1_prime(self, ip, x):
        return 1.0 / np.sinh(np.asarray(x, dtype=float)) ** 2

    def _f2(self, ip, x):
        return ip.b / np.sinh(np.asarray(x, dtype=float))

    def _count(self, ip, p):
        return max(0, math.ceil(p.A / p.hbar))

    def _ceiling(self, ip):
        return ip.a**2

    def shift_internal_a(self, p, delta):
        return p.replace(A=p.A - delta)

    def transform(self, p, x):
        return np.cosh(np.asarray(x, dtype=float))

    def inverse_transform(self, p, t):
        return np.arccosh(np.asarray(t, dtype=float))

    def asymptotic_slope_prediction(self, p, side):
        self._require_singular(side)
        return p.B - p.A - 0.5 * p.hbar


# ----------------------------------------------------------------------
# registry and module-level operations
# ----------------------------------------------------------------------
FAMILIES: dict[str, Family] = {
    fam.name: fam
    for fam in (
        Harmonic(),
        Morse(),
        Coulomb(),
        RosenMorseTrig(),
        RosenMorseHyp(),
        Eckart(),
        Oscillator3D(),
        ScarfTrig(),
        ScarfHyp(),
        PoschlTeller(),
    )
}

FAMILY_NAMES = tuple(FAMILIES)


def get_family(family) -> Family:
    if isinstance(family, Family):
        return family
    try:
        return FAMILIES[family]
    except KeyError:
        raise ValidationError(
            f"unknown family {family!r}; known: {', '.join(FAMILY_NAMES)}"
        ) from None


def superpotential(family, p: Params, x):
    return get_family(family).superpotential(p, x)


def superpotential_prime(family, p: Params, x):
    return get_family(family).superpotential_prime(p, x)


def potential_minus(family, p: Params, x):
    return get_family(family).potential_minus(p, x)


def potential_plus(family, p: Params, x):
    return get_family(family).potential_plus(p, x)


def f1_and_derivative(family, p: Params, x):
    return get_family(family).f1_and_derivative(p, x)


def langer_term(family, p: Params, x):
    return get_family(family).langer_term(p, x)


def exact_energy(family, p: Params, n: int) -> float:
    return get_family(family).exact_energy(p, n)


def bound_state_count(family, p: Params):
    return get_family(family).bound_state_count(p)


def validate(family, p: Params) -> ValidityReport:
    return get_family(family).validate(p)


def spectrum(family, p: Params, n_max: int) -> list[SpectrumLevel]:
    return get_family(family).spectrum(p, n_max)
