"""Half-shift interrelation between Langer-corrected WKB and SWKB."""

import math

import numpy as np
import pytest

from siwkb import Params, Scheme, half_shift_action_check, integrand_identity_residual, shifted_params
from siwkb.quantize import turning_points_numeric
from siwkb.relation import half_level_energy
from siwkb.verify import BASE_GRID, energy_scale, _interior_grid

PI = math.pi


def test_harmonic_identity_is_trivially_zero():
    for x in (-1.3, 0.0, 0.4, 2.2):
        assert integrand_identity_residual("harmonic", Params(omega=1.0), 2, x) == pytest.approx(0.0, abs=1e-14)


def test_coulomb_pointwise_identity():
    resid = integrand_identity_residual("coulomb", Params(ell=1.5, e2=2.0), 0, 3.0)
    assert abs(float(resid)) <= 1e-12


def test_eckart_identity_on_grid():
    p = Params(A=1.25, B=9.0)
    xs = _interior_grid("eckart", p, 100)
    scale = energy_scale("eckart", p, xs, 1)
    resid = integrand_identity_residual("eckart", p, 1, xs)
    assert np.max(np.abs(resid)) <= 1e-12 * scale


@pytest.mark.parametrize(
    "family,p,n,target_halfpi",
    [
        ("harmonic", Params(omega=1.0), 1, 3.0),
        ("coulomb", Params(ell=1.5, e2=2.0), 0, 1.0),
        ("poschl-teller", Params(A=3.0, B=5.0), 0, 1.0),
    ],
)
def test_half_shift_actions(family, p, n, target_halfpi):
    langer, swkb = half_shift_action_check(family, p, n)
    target = target_halfpi * 0.5 * PI
    assert langer == pytest.approx(target, abs=2e-8)
    assert swkb == pytest.approx(target, abs=2e-8)
    assert abs(langer - swkb) <= 2e-8


def test_shifted_params_mapping():
    p_shift = shifted_params("coulomb", Params(ell=1.5, e2=2.0))
    assert p_shift.ell == pytest.approx(1.0)
    p_shift = shifted_params("morse", Params(A=2.0))
    assert p_shift.A == pytest.approx(2.5)
    p_shift = shifted_params("poschl-teller", Params(A=2.5, B=5.0))
    assert p_shift.A == pytest.approx(3.0)


def test_turning_point_correspondence():
    """Zeros of the two integrands coincide: Langer turning points at (a, n)
    equal the SWKB-form turning points at (a - hbar/2, n + 1/2)."""
    for family, p in [("coulomb", Params(ell=1.5, e2=2.0)), ("eckart", Params(A=1.25, B=9.0))]:
        from siwkb import exact_energy, get_family

        fam = get_family(family)
        n = 1
        tp = turning_points_numeric(family, p, Scheme.LANGER_WKB, exact_energy(family, p, n))
        p_shift = shifted_params(family, p)
        ip_shift = fam.internal(p_shift)
        e_half = half_level_energy(family, p_shift, n)

        def w_sq(x):
            w = fam._w(ip_shift, x)
            return w * w

        for x in (tp.x_left, tp.x_right):
            assert abs(e_half - float(w_sq(x))) <= 1e-8 * (1.0 + abs(e_half))


@pytest.mark.parametrize("name", list(BASE_GRID))
def test_identity_across_all_families(name):
    p = BASE_GRID[name][0]
    xs = _interior_grid(name, p, 50)
    scale = energy_scale(name, p, xs, 0)
    resid = integrand_identity_residual(name, p, 0, xs)
    assert np.max(np.abs(resid)) <= 1e-12 * scale


def test_identity_samples_records():
    from siwkb import identity_samples

    xs = np.linspace(1.0, 3.0, 5)
    samples = identity_samples("coulomb", Params(ell=1.5, e2=2.0), 0, xs)
    assert len(samples) == 5
    for s in samples:
        assert s.residual == pytest.approx(s.lhs - s.rhs)
        assert abs(s.residual) <= 1e-12
