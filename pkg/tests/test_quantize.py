"""Turning points, action integrals, energy inversion and asymptotics."""

import math

import pytest

from siwkb import (
    NoBoundRegionError,
    NoSolutionError,
    Params,
    Scheme,
    UnsupportedFamilyError,
    action_integral,
    asymptotic_slope,
    exact_energy,
    predicted_asymptotic_slope,
    solve_energy,
    spectrum_report,
    turning_points_analytic,
    turning_points_numeric,
)

PI = math.pi


# ----------------------------------------------------------------------
# turning points
# ----------------------------------------------------------------------
def test_numeric_turning_points_harmonic_swkb():
    tp = turning_points_numeric("harmonic", Params(omega=1.0), "swkb", 1.0)
    assert tp.x_left == pytest.approx(-2.0, abs=1e-12)
    assert tp.x_right == pytest.approx(2.0, abs=1e-12)


def test_numeric_turning_points_harmonic_wkb():
    tp = turning_points_numeric("harmonic", Params(omega=1.0), "wkb", 1.0)
    root = math.sqrt(6.0)
    assert tp.x_left == pytest.approx(-root, abs=1e-12)
    assert tp.x_right == pytest.approx(root, abs=1e-12)


def test_analytic_turning_points_harmonic_ground():
    tp = turning_points_analytic("harmonic", Params(omega=1.0), 0)
    root = math.sqrt(0.5)
    assert tp.transformed_left == pytest.approx(-root, rel=1e-14)
    assert tp.transformed_right == pytest.approx(root, rel=1e-14)
    assert tp.x_left == pytest.approx(-2.0 * root, rel=1e-14)
    assert tp.method == "analytic"


def test_coulomb_analytic_numeric_agreement():
    p = Params(ell=1.0, e2=2.0)
    energy = exact_energy("coulomb", p, 1)
    ta = turning_points_analytic("coulomb", p, 1)
    tn = turning_points_numeric("coulomb", p, Scheme.LANGER_WKB, energy)
    assert ta.x_left == pytest.approx(tn.x_left, abs=1e-10 * (1 + abs(tn.x_left)))
    assert ta.x_right == pytest.approx(tn.x_right, abs=1e-10 * (1 + abs(tn.x_right)))


def test_oscillator_3d_analytic_roots_ordered():
    p = Params(ell=1.0, omega=1.0)
    tp = turning_points_analytic("oscillator-3d", p, 1)
    assert 0 < tp.x_left < tp.x_right
    # transformed variable is y = 1/r^2 > 0: decreasing, so the left x
    # carries the larger root
    assert tp.transformed_left > tp.transformed_right > 0
    from siwkb import get_family

    fam = get_family("oscillator-3d")
    assert tp.transformed_left == pytest.approx(float(fam.transform(p, tp.x_left)), rel=1e-12)


def test_no_bound_region_below_minimum():
    with pytest.raises(NoBoundRegionError):
        turning_points_numeric("harmonic", Params(omega=1.0), "wkb", -10.0)


# ----------------------------------------------------------------------
# action integrals
# ----------------------------------------------------------------------
def test_harmonic_wkb_exact_any_frequency():
    for omega in (0.5, 1.0, 3.7):
        qr = action_integral("harmonic", Params(omega=omega), 2, "wkb")
        assert qr.action == pytest.approx(2.5 * PI, abs=1e-10)


def test_coulomb_langer_exact():
    qr = action_integral("coulomb", Params(ell=1.0, e2=2.0), 0, "langer-wkb")
    assert abs(qr.residual) <= 1e-8


def test_coulomb_plain_wkb_inexact():
    qr = action_integral("coulomb", Params(ell=1.0, e2=2.0), 0, "wkb")
    assert abs(qr.residual) > 0.01


def test_eckart_swkb_exact():
    qr = action_integral("eckart", Params(A=1.0, B=9.0), 1, "swkb")
    assert qr.action == pytest.approx(1.0 * PI, abs=1e-8)


def test_swkb_ground_state_degenerate():
    qr = action_integral("morse", Params(A=2.0), 0, "swkb")
    assert qr.degenerate and qr.action == 0.0 and qr.residual == 0.0
    assert qr.turning.x_left == qr.turning.x_right


def test_quadrature_convergence_invariant():
    qr = action_integral("poschl-teller", Params(A=2.5, B=5.0), 2, "langer-wkb")
    assert qr.quad_error_estimate <= 1e-10 * 1.0


@pytest.mark.parametrize("hbar", [0.5, 2.0])
@pytest.mark.parametrize(
    "family,p",
    [
        ("coulomb", Params(ell=1.2, e2=2.0)),
        ("poschl-teller", Params(A=2.5, B=5.0)),
        ("scarf-trig", Params(A=3.0, B=1.0)),
        ("morse", Params(A=2.2)),
    ],
)
def test_exactness_scales_with_hbar(family, p, hbar):
    p = p.replace(hbar=hbar)
    langer = action_integral(family, p, 1, "langer-wkb")
    swkb = action_integral(family, p, 1, "swkb")
    assert abs(langer.residual) <= 1e-8 * hbar
    assert abs(swkb.residual) <= 1e-8 * hbar
    assert langer.target == pytest.approx(1.5 * PI * hbar, rel=1e-15)


def test_action_monotone_in_energy():
    from siwkb.quantize import _evaluate_action, _well_minimum

    veff = Scheme.LANGER_WKB.effective_potential("eckart", Params(A=1.0, B=9.0))
    from siwkb import get_family

    fam = get_family("eckart")
    well = _well_minimum(fam, veff)
    actions = [
        _evaluate_action(fam, veff, energy, 1.0, well)[0] for energy in (5.0, 20.0, 40.0, 55.0)
    ]
    assert all(b > a for a, b in zip(actions, actions[1:]))


# ----------------------------------------------------------------------
# energy inversion
# ----------------------------------------------------------------------
def test_solve_energy_harmonic():
    assert solve_energy("harmonic", Params(omega=1.0), 4, "langer-wkb") == pytest.approx(4.0, abs=1e-9)


def test_solve_energy_poschl_teller():
    p = Params(A=3.0, B=5.0)
    expected = exact_energy("poschl-teller", p, 1)
    assert solve_energy("poschl-teller", p, 1, "langer-wkb") == pytest.approx(expected, abs=1e-8)


def test_solve_energy_swkb_ground():
    assert abs(solve_energy("morse", Params(A=2.0), 0, "swkb")) <= 1e-10


def test_solve_energy_beyond_spectrum():
    with pytest.raises(NoSolutionError):
        solve_energy("morse", Params(A=2.0), 5, "langer-wkb")


# ----------------------------------------------------------------------
# singular-endpoint asymptotics
# ----------------------------------------------------------------------
def test_asymptotic_slope_coulomb():
    assert asymptotic_slope("coulomb", Params(ell=2.0, e2=2.0)) == pytest.approx(1.5, rel=1e-6)


def test_asymptotic_slope_oscillator_3d():
    assert asymptotic_slope("oscillator-3d", Params(ell=1.0, omega=1.0)) == pytest.approx(0.5, rel=1e-6)


def test_asymptotic_slope_class_iiib_cases():
    p = Params(A=2.5, B=5.0)
    assert asymptotic_slope("poschl-teller", p) == pytest.approx(
        predicted_asymptotic_slope("poschl-teller", p), rel=1e-6
    )
    p = Params(A=2.5, B=1.2)
    for side in ("left", "right"):
        assert asymptotic_slope("scarf-trig", p, side) == pytest.approx(
            predicted_asymptotic_slope("scarf-trig", p, side), rel=1e-6
        )


def test_asymptotic_slope_requires_singular_endpoint():
    with pytest.raises(UnsupportedFamilyError):
        asymptotic_slope("harmonic", Params(omega=1.0))
    with pytest.raises(UnsupportedFamilyError):
        asymptotic_slope("coulomb", Params(ell=1.0, e2=2.0), side="right")


# ----------------------------------------------------------------------
# spectrum report
# ----------------------------------------------------------------------
def test_spectrum_report_flags_out_of_spectrum():
    rep = spectrum_report("morse", Params(A=2.5), 5, ["langer-wkb"])
    statuses = [row.status for row in rep.rows]
    assert statuses == ["ok", "ok", "ok", "out-of-spectrum", "out-of-spectrum"]
    for row in rep.rows[:3]:
        cell = row.cells["langer-wkb"]
        assert abs(cell.residual) <= 1e-8
        assert cell.solved == pytest.approx(row.exact, abs=1e-8)


def test_spectrum_report_wkb_residual_column_nonzero():
    rep = spectrum_report("coulomb", Params(ell=1.0, e2=2.0), 2, ["wkb"])
    residuals = [abs(row.cells["wkb"].residual) for row in rep.rows]
    assert max(residuals) > 1e-3


def test_harmonic_report_all_schemes_exact():
    rep = spectrum_report("harmonic", Params(omega=1.0), 3)
    for row in rep.rows:
        for cell in row.cells.values():
            assert cell.status == "ok"
            assert abs(cell.residual) <= 1e-8
