"""Family catalog: superpotentials, partner potentials, spectra, validity."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from siwkb import (
    FAMILIES,
    DomainError,
    OutOfSpectrumError,
    Params,
    ValidationError,
    bound_state_count,
    exact_energy,
    f1_and_derivative,
    get_family,
    langer_term,
    potential_minus,
    potential_plus,
    superpotential,
    superpotential_prime,
    validate,
)
from siwkb.verify import BASE_GRID, energy_scale, grid_levels, _interior_grid

REPRESENTATIVE = {name: grid[1] for name, grid in BASE_GRID.items()}


def test_registry_has_ten_families():
    assert len(FAMILIES) == 10
    tags = {fam.class_tag for fam in FAMILIES.values()}
    assert tags == {"IA", "IB", "IIA", "IIB1", "IIB2", "IIB3", "IIIA", "IIIB1", "IIIB2", "IIIB3"}


def test_superpotential_values():
    assert superpotential("harmonic", Params(omega=2.0), 1.0) == pytest.approx(1.0, abs=1e-15)
    assert superpotential("coulomb", Params(ell=1.0, e2=2.0), 1.0) == pytest.approx(0.0, abs=1e-15)
    # table row A - exp(-x); agrees with the f2 + alpha*a decomposition
    assert superpotential("morse", Params(A=2.0), 0.0) == pytest.approx(1.0, abs=1e-15)


def test_partner_potential_values():
    assert potential_minus("harmonic", Params(omega=2.0), 0.0) == pytest.approx(-1.0, abs=1e-15)
    assert potential_minus("morse", Params(A=1.0), 0.0) == pytest.approx(-1.0, abs=1e-15)


@pytest.mark.parametrize("name", list(FAMILIES))
def test_partner_gap_is_twice_w_prime(name):
    p = REPRESENTATIVE[name]
    xs = _interior_grid(name, p, 64)
    gap = potential_plus(name, p, xs) - potential_minus(name, p, xs)
    expected = 2.0 * p.hbar * superpotential_prime(name, p, xs)
    assert np.allclose(gap, expected, rtol=1e-12, atol=1e-12)


def test_f1_values():
    assert f1_and_derivative("harmonic", Params(omega=1.0), 0.3) == (0.0, 0.0)
    f1, f1p = f1_and_derivative("coulomb", Params(ell=1.0, e2=2.0), 2.0)
    assert (f1, f1p) == pytest.approx((-0.5, 0.25), abs=1e-15)
    f1, f1p = f1_and_derivative("morse", Params(A=1.0), 0.7)
    assert (f1, f1p) == (-1.0, 0.0)
    # coth r = 2 at r = arccoth(2)
    r = 0.5 * math.log(3.0)
    f1, f1p = f1_and_derivative("eckart", Params(A=1.0, B=9.0), r)
    assert (f1, f1p) == pytest.approx((-2.0, 3.0), rel=1e-14)


def test_langer_term_values():
    assert langer_term("morse", Params(A=2.0), 1.3) == 0.0
    assert langer_term("coulomb", Params(ell=1.0, e2=2.0), 2.0) == pytest.approx(1.0 / 16.0, abs=1e-16)
    assert langer_term("rosen-morse-trig", Params(A=1.0, B=0.5), math.pi / 2) == pytest.approx(0.25, abs=1e-15)


def test_exact_energies():
    assert exact_energy("harmonic", Params(omega=1.0), 3) == pytest.approx(3.0, abs=1e-14)
    assert exact_energy("morse", Params(A=2.0), 1) == pytest.approx(3.0, abs=1e-14)
    assert exact_energy("coulomb", Params(ell=1.0, e2=2.0), 1) == pytest.approx(0.75, abs=1e-14)
    assert exact_energy("eckart", Params(A=1.0, B=9.0), 1) == pytest.approx(57.75, abs=1e-12)


@pytest.mark.parametrize("name", list(FAMILIES))
def test_ground_state_energy_is_exactly_zero(name):
    assert exact_energy(name, REPRESENTATIVE[name], 0) == 0.0


@pytest.mark.parametrize("name", list(FAMILIES))
def test_spectrum_strictly_increasing(name):
    p = REPRESENTATIVE[name]
    levels = [exact_energy(name, p, n) for n in grid_levels(name, p, cap=8)]
    assert all(b > a for a, b in zip(levels, levels[1:]))


def test_bound_state_counts():
    assert bound_state_count("harmonic", Params(omega=1.0)) is math.inf
    assert bound_state_count("coulomb", Params(ell=1.0, e2=2.0)) is math.inf
    assert bound_state_count("rosen-morse-trig", Params(A=1.0, B=0.5)) is math.inf
    assert bound_state_count("scarf-trig", Params(A=2.0, B=0.5)) is math.inf
    assert bound_state_count("oscillator-3d", Params(ell=1.0, omega=1.0)) is math.inf
    assert bound_state_count("morse", Params(A=2.5)) == 3
    assert bound_state_count("eckart", Params(A=1.0, B=9.0)) == 2
    assert bound_state_count("scarf-hyp", Params(A=1.2, B=0.5)) == 2
    assert bound_state_count("poschl-teller", Params(A=2.5, B=5.0)) == 3


def test_out_of_spectrum():
    with pytest.raises(OutOfSpectrumError):
        exact_energy("morse", Params(A=2.5), 3)


def test_validation_failures():
    rep = validate("coulomb", Params(ell=0.4, e2=2.0))
    assert not rep.valid and any("hbar/2" in v for v in rep.violations)
    assert validate("harmonic", Params(omega=1.0)).valid
    rep = validate("scarf-trig", Params(A=1.0, B=0.7))
    assert not rep.valid
    rep = validate("eckart", Params(A=1.0, B=0.8))
    assert not rep.valid and any("A^2" in v for v in rep.violations)
    rep = validate("poschl-teller", Params(A=3.0, B=1.0))
    assert not rep.valid
    assert not validate("morse", Params(A=float("nan"))).valid
    assert not validate("harmonic", Params(omega=1.0, hbar=-1.0)).valid
    with pytest.raises(ValidationError):
        exact_energy("harmonic", Params(), 0)  # omega missing


def test_validity_report_records_internal_mapping():
    rep = validate("morse", Params(A=2.0))
    assert rep.valid
    assert rep.internal.a == -2.0 and rep.internal.alpha == -1.0
    rep = validate("coulomb", Params(ell=1.5, e2=2.0))
    assert rep.internal.a == 1.5 and rep.internal.b == 1.0


def test_domain_errors():
    with pytest.raises(DomainError):
        superpotential("coulomb", Params(ell=1.0, e2=2.0), -0.5)
    with pytest.raises(DomainError):
        potential_minus("rosen-morse-trig", Params(A=1.0, B=0.0), 3.5)
    with pytest.raises(DomainError):
        langer_term("scarf-trig", Params(A=2.0, B=0.5), 1.7)


@pytest.mark.parametrize("name", list(FAMILIES))
@pytest.mark.parametrize("hbar", [1.0, 0.5])
def test_shape_invariance_identity(name, hbar):
    """V_+(x, a) + g(a) equals V_-(x, a + hbar) + g(a + hbar) pointwise."""
    fam = get_family(name)
    p = REPRESENTATIVE[name].replace(hbar=hbar)
    if not fam.validate(p).valid:
        p = BASE_GRID[name][-1].replace(hbar=hbar)
    ip = fam.require_valid(p)
    xs = _interior_grid(name, p, 200)
    scale = energy_scale(name, p, xs, 0)
    ip_next = fam.internal(fam.shift_internal_a(p, hbar))
    lhs = fam._v_plus(ip, xs) + fam._g(ip, ip.a)
    # g at the stepped parameter, with the family constants held fixed
    rhs = fam._v_minus(ip_next, xs) + fam._g(ip, ip.a + hbar)
    assert np.max(np.abs(lhs - rhs)) <= 1e-12 * scale


@pytest.mark.parametrize("name", list(FAMILIES))
def test_shape_pde(name):
    """W dW/da - dW/dx + (1/2) dg/da vanishes identically."""
    fam = get_family(name)
    p = REPRESENTATIVE[name]
    ip = fam.require_valid(p)
    xs = _interior_grid(name, p, 200)
    scale = energy_scale(name, p, xs, 0)
    resid = fam._w(ip, xs) * fam._dw_da(ip, xs) - fam._w_prime(ip, xs) + 0.5 * fam._dg_da(ip, ip.a)
    assert np.max(np.abs(resid)) <= 1e-12 * scale


@pytest.mark.parametrize("name", list(FAMILIES))
def test_riccati_constraints(name):
    fam = get_family(name)
    p = REPRESENTATIVE[name]
    ip = fam.require_valid(p)
    xs = _interior_grid(name, p, 200)
    scale = energy_scale(name, p, xs, 0)
    if fam.class_tag in ("IA", "IB"):
        f2, f2p = fam.f2_and_derivative(p, xs)
        resid = ip.alpha * f2 - f2p - ip.eps
    else:
        f1, f1p = fam.f1_and_derivative(p, xs)
        resid = f1 * f1 - f1p - ip.lam
    assert np.max(np.abs(resid)) <= 1e-12 * scale
    if fam.class_tag.startswith("III"):
        f1, _ = fam.f1_and_derivative(p, xs)
        f2, f2p = fam.f2_and_derivative(p, xs)
        assert np.max(np.abs(f1 * f2 - f2p - ip.eps)) <= 1e-12 * scale


@pytest.mark.parametrize("name", [n for n in FAMILIES if n != "scarf-hyp"])
def test_superpotential_slope_positive(name):
    # unbroken-SUSY convention; scarf-hyp is the lone exception, where W'
    # changes sign in the tails while the zero-energy ground state stays
    # normalizable (W itself still has a single zero)
    p = REPRESENTATIVE[name]
    xs = _interior_grid(name, p, 400)
    assert np.all(superpotential_prime(name, p, xs) > 0.0)


def test_scarf_hyp_w_has_single_zero():
    p = REPRESENTATIVE["scarf-hyp"]
    xs = np.linspace(-12.0, 12.0, 4001)
    w = get_family("scarf-hyp").superpotential(p, xs)
    assert int(np.count_nonzero(np.diff(np.signbit(w)))) == 1


@given(x=st.floats(min_value=-8.0, max_value=8.0))
@settings(max_examples=300, deadline=None)
def test_morse_partner_identity_property(x):
    p = Params(A=2.0)
    vp = potential_plus("morse", p, x)
    vm = potential_minus("morse", p, x)
    wp = superpotential_prime("morse", p, x)
    assert vp - vm == pytest.approx(2.0 * wp, rel=1e-12, abs=1e-12)
