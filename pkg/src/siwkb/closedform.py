"""The nine reference integrals int sqrt((y2-y)(y-y1))/w(y) dy in closed form.

Each kind is defined by its weight w and a domain constraint on (y1, y2)
that keeps the weight's poles outside the integration interval.  The
closed forms serve as exact oracles for the quadrature engine, and the
``numeric_reference`` path evaluates the defining integral independently
with the same cosine substitution used for the action integrals.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from .errors import DomainError
from .quadrature import chebyshev_weighted_integral

__all__ = ["ClosedFormKind", "evaluate", "numeric_reference", "sample_arguments"]

PI = math.pi


class ClosedFormKind(enum.Enum):
    I0 = "I0"
    I1A = "I1a"
    I1B = "I1b"
    I2A = "I2a"
    I2B = "I2b"
    I3 = "I3"
    I4 = "I4"
    I5A = "I5a"
    I5B = "I5b"

    @classmethod
    def from_name(cls, name) -> "ClosedFormKind":
        if isinstance(name, cls):
            return name
        for member in cls:
            if member.value.lower() == str(name).lower():
                return member
        raise DomainError(f"unknown integral kind {name!r}")


def _w_one(y):
    return np.ones_like(np.asarray(y, dtype=float))


def _w_y(y):
    return np.asarray(y, dtype=float)


def _w_y2(y):
    y = np.asarray(y, dtype=float)
    return y * y


def _w_1py2(y):
    y = np.asarray(y, dtype=float)
    return 1.0 + y * y


def _w_1my2(y):
    y = np.asarray(y, dtype=float)
    return 1.0 - y * y


def _w_y2m1(y):
    y = np.asarray(y, dtype=float)
    return y * y - 1.0


# kind -> (weight, constraint predicate, constraint text)
_KIND_TABLE = {
    ClosedFormKind.I0: (_w_one, lambda y1, y2: True, "y1 < y2"),
    ClosedFormKind.I1A: (_w_y, lambda y1, y2: 0 < y1, "0 < y1 < y2"),
    ClosedFormKind.I1B: (_w_y, lambda y1, y2: y2 < 0, "y1 < y2 < 0"),
    ClosedFormKind.I2A: (_w_y2, lambda y1, y2: y2 < 0, "y1 < y2 < 0"),
    ClosedFormKind.I2B: (_w_y2, lambda y1, y2: 0 < y1, "0 < y1 < y2"),
    ClosedFormKind.I3: (_w_1py2, lambda y1, y2: True, "y1 < y2"),
    ClosedFormKind.I4: (_w_1my2, lambda y1, y2: -1 < y1 and y2 < 1, "-1 < y1 < y2 < 1"),
    ClosedFormKind.I5A: (_w_y2m1, lambda y1, y2: 1 < y1, "1 < y1 < y2"),
    ClosedFormKind.I5B: (_w_y2m1, lambda y1, y2: y2 < -1, "y1 < y2 < -1"),
}

# poles of each weight, re-checked defensively even though the constraints
# already exclude them from [y1, y2]
_POLES = {
    ClosedFormKind.I1A: (0.0,),
    ClosedFormKind.I1B: (0.0,),
    ClosedFormKind.I2A: (0.0,),
    ClosedFormKind.I2B: (0.0,),
    ClosedFormKind.I4: (-1.0, 1.0),
    ClosedFormKind.I5A: (-1.0, 1.0),
    ClosedFormKind.I5B: (-1.0, 1.0),
}


def _check(kind: ClosedFormKind, y1: float, y2: float) -> None:
    if not (math.isfinite(y1) and math.isfinite(y2)):
        raise DomainError(f"{kind.value}: arguments must be finite")
    if not y1 < y2:
        raise DomainError(f"{kind.value}: requires y1 < y2")
    _, pred, text = _KIND_TABLE[kind]
    if not pred(y1, y2):
        raise DomainError(f"{kind.value}: constraint {text} violated by ({y1}, {y2})")
    for pole in _POLES.get(kind, ()):
        if y1 <= pole <= y2:
            raise DomainError(f"{kind.value}: weight pole at {pole} inside [{y1}, {y2}]")


def evaluate(kind, y1: float, y2: float) -> float:
    """Closed-form value of the integral; zero-width intervals return 0."""
    kind = ClosedFormKind.from_name(kind)
    if y1 == y2:
        return 0.0
    _check(kind, y1, y2)
    if kind is ClosedFormKind.I0:
        return PI / 8.0 * (y2 - y1) ** 2
    if kind is ClosedFormKind.I1A:
        return 0.5 * PI * (y1 + y2) - PI * math.sqrt(y1 * y2)
    if kind is ClosedFormKind.I1B:
        return 0.5 * PI * (y1 + y2) + PI * math.sqrt(y1 * y2)
    if kind is ClosedFormKind.I2A:
        root = math.sqrt(y1 * y2)
        return -PI * (y2 * root + y1 * (root + 2.0 * y2)) / (2.0 * y1 * y2)
    if kind is ClosedFormKind.I2B:
        root = math.sqrt(y1 * y2)
        return PI * (y1 + y2 - 2.0 * root) / (2.0 * root)
    if kind is ClosedFormKind.I3:
        inner = math.sqrt(1.0 + y1 * y1) * math.sqrt(1.0 + y2 * y2) - y1 * y2 + 1.0
        return PI / math.sqrt(2.0) * math.sqrt(inner) - PI
    if kind is ClosedFormKind.I4:
        return 0.5 * PI * (
            2.0
            - math.sqrt((1.0 - y1) * (1.0 - y2))
            - math.sqrt((1.0 + y1) * (1.0 + y2))
        )
    if kind is ClosedFormKind.I5A:
        return 0.5 * PI * (
            math.sqrt((y1 + 1.0) * (y2 + 1.0))
            - math.sqrt((y1 - 1.0) * (y2 - 1.0))
            - 2.0
        )
    # I5B
    return 0.5 * PI * (
        math.sqrt((y1 - 1.0) * (y2 - 1.0))
        - math.sqrt((y1 + 1.0) * (y2 + 1.0))
        - 2.0
    )


def numeric_reference(kind, y1: float, y2: float) -> float:
    """Independent quadrature of the defining integral (oracle path)."""
    kind = ClosedFormKind.from_name(kind)
    if y1 == y2:
        return 0.0
    _check(kind, y1, y2)
    weight = _KIND_TABLE[kind][0]
    return chebyshev_weighted_integral(weight, y1, y2, abs_tol=1e-14, rel_tol=5e-14).value


def sample_arguments(kind, rng: np.random.Generator, scale: float = 4.0) -> tuple[float, float]:
    """Random (y1, y2) satisfying the kind's domain constraint."""
    kind = ClosedFormKind.from_name(kind)
    u = np.sort(rng.uniform(0.02, scale, size=2))
    lo, hi = float(u[0]), float(u[1])
    if hi - lo < 1e-3:
        hi = lo + 1e-3
    if kind in (ClosedFormKind.I0, ClosedFormKind.I3):
        shift = rng.uniform(-scale, scale)
        return lo + shift - scale / 2, hi + shift - scale / 2
    if kind in (ClosedFormKind.I1A, ClosedFormKind.I2B):
        return lo, hi
    if kind in (ClosedFormKind.I1B, ClosedFormKind.I2A):
        return -hi, -lo
    if kind is ClosedFormKind.I4:
        u = np.sort(rng.uniform(-0.98, 0.98, size=2))
        lo, hi = float(u[0]), float(u[1])
        if hi - lo < 1e-3:
            hi = min(lo + 1e-3, 0.985)
        return lo, hi
    if kind is ClosedFormKind.I5A:
        return 1.0 + lo, 1.0 + hi
    return -1.0 - hi, -1.0 - lo
