"""Quadrature engine on integrals with known values."""

import math

import numpy as np
import pytest

from siwkb.quadrature import chebyshev_weighted_integral, sqrt_well_integral


def test_half_circle_area():
    # int_{-1}^{1} sqrt(1 - x^2) dx = pi/2
    res = sqrt_well_integral(lambda x: 1.0 - x * x, -1.0, 1.0)
    assert res.value == pytest.approx(math.pi / 2, abs=1e-13)
    assert res.error_estimate <= 1e-12


def test_harmonic_action():
    # int sqrt(E - x^2) dx over the allowed region = pi E / 2
    energy = 3.7
    r = math.sqrt(energy)
    res = sqrt_well_integral(lambda x: energy - x * x, -r, r)
    assert res.value == pytest.approx(math.pi * energy / 2, rel=1e-13)


def test_doubling_invariance():
    res = sqrt_well_integral(lambda x: (2.0 - x) * (x + 1.0) * (1.0 + 0.1 * x * x), -1.0, 2.0)
    assert res.error_estimate <= 1e-10


def test_zero_width():
    res = sqrt_well_integral(lambda x: 1.0 - x * x, 0.5, 0.5)
    assert res.value == 0.0 and res.nodes == 0


def test_weighted_engine_against_arcsin_form():
    # int_{y1}^{y2} sqrt((y2-y)(y-y1)) dy = (pi/8)(y2-y1)^2
    y1, y2 = 0.3, 2.1
    res = chebyshev_weighted_integral(lambda y: np.ones_like(y), y1, y2)
    assert res.value == pytest.approx(math.pi / 8 * (y2 - y1) ** 2, rel=1e-13)


def test_integrable_endpoint_divergence():
    # allowed region reaching x = 0 with a 1/x divergence: exactly
    # int_0^2 sqrt(2/x - 1) dx = pi
    res = sqrt_well_integral(lambda x: 2.0 / x - 1.0, 0.0, 2.0)
    assert res.value == pytest.approx(math.pi, rel=1e-12)
