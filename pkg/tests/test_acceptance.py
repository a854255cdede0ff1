"""Acceptance suite: every criterion at its stated tolerance.

Each test prints one PASS/FAIL line (run with ``pytest -s`` to see them
inline; they are also visible in captured output on failure).
"""

import math
import time

import pytest

from siwkb import FAMILIES
from siwkb import verify
from siwkb.closedform import evaluate

SEED = 7


def _report(label, records, elapsed=None):
    failed = [r for r in records if not r["passed"]]
    worst = max((r["value"] / r["tol"] if r["tol"] else math.inf) for r in records)
    status = "PASS" if not failed else "FAIL"
    timing = f"  [{elapsed:.1f}s]" if elapsed is not None else ""
    print(f"ACCEPTANCE {label}: {status}  cases={len(records)}  "
          f"worst(value/tol)={worst:.3g}{timing}")
    for rec in failed[:8]:
        print(f"  FAILED: {rec}")
    assert not failed, f"{label}: {len(failed)} of {len(records)} cases failed"
    return worst


def test_criterion_1_langer_wkb_exactness():
    """|action(LangerWKB, E_n) - (n+1/2) pi hbar| <= 1e-8 hbar on the full grid."""
    t0 = time.time()
    records = verify.check_langer_exactness(seed=SEED, tol_hbar=1e-8)
    elapsed = time.time() - t0
    assert len(records) >= 10 * 5  # every family x paramset contributes
    _report("1 langer-wkb exactness", records, elapsed)
    assert elapsed < 60.0, f"runtime target exceeded: {elapsed:.1f}s"


def test_criterion_2_swkb_exactness():
    """|action(SWKB, E_n) - n pi hbar| <= 1e-8 hbar; n=0 degenerate contract."""
    t0 = time.time()
    records = verify.check_swkb_exactness(seed=SEED, tol_hbar=1e-8)
    elapsed = time.time() - t0
    ground = [r for r in records if r["n"] == 0]
    assert ground and all(r["degenerate"] and r["action"] == 0.0 for r in ground)
    _report("2 swkb exactness", records, elapsed)


def test_criterion_3_plain_wkb_dichotomy():
    """Plain WKB exact only for the constant-f1 families."""
    t0 = time.time()
    records = verify.check_wkb_dichotomy(seed=SEED, tol_hbar=1e-8, fail_floor=1e-3)
    elapsed = time.time() - t0
    exact_part = [r for r in records if r["check"] == "wkb-class-i-exact"]
    needed_part = [r for r in records if r["check"] == "wkb-correction-needed"]
    assert {r["family"] for r in exact_part} == {"harmonic", "morse"}
    assert len(needed_part) == 8
    assert all(r["computed_levels"] > 0 for r in needed_part)
    _report("3 plain-wkb dichotomy", records, elapsed)


def test_criterion_4_closedform_oracle():
    """1000 constrained samples per kind within 1e-10 relative; exact spots."""
    t0 = time.time()
    records = verify.check_closedform(seed=SEED, samples=1000, tol=1e-10, spot_tol=1e-14)
    elapsed = time.time() - t0
    assert evaluate("I0", -1.0, 1.0) == pytest.approx(math.pi / 2, abs=1e-14)
    assert evaluate("I1a", 1.0, 4.0) == pytest.approx(math.pi / 2, abs=1e-14)
    _report("4 closed-form oracle", records, elapsed)


def test_criterion_5_numerov_spectrum():
    """Numerov eigenvalues match exact spectra to 1e-6 (1 + |E|) for n <= 3."""
    t0 = time.time()
    records = verify.check_oracle(seed=SEED, tol=1e-6, n_cap=4)
    elapsed = time.time() - t0
    ground = [r for r in records if r["n"] == 0]
    assert all(abs(r["solved"]) <= 1e-6 for r in ground)
    _report("5 numerov spectrum", records, elapsed)
    assert elapsed < 120.0, f"runtime target exceeded: {elapsed:.1f}s"


def test_criterion_6_half_shift_identity():
    """Pointwise integrand identity <= 1e-12 scale; paired actions within 2e-8."""
    t0 = time.time()
    records = verify.check_identity(seed=SEED, tol_scale=1e-12, action_tol_hbar=2e-8)
    elapsed = time.time() - t0
    half = [r for r in records if r["check"] == "identity-half-shift"]
    for rec in half:
        target = 0.5 * math.pi
        assert abs(rec["langer_action"] - target) <= 2e-8
        assert abs(rec["swkb_action"] - target) <= 2e-8
    _report("6 half-shift identity", records, elapsed)


def test_criterion_7_asymptotics():
    """Endpoint slope equals a - hbar/2 (1e-6 rel); psi exponent -a/hbar (1e-3)."""
    t0 = time.time()
    records = verify.check_asymptotics(seed=SEED, slope_rtol=1e-6, psi_tol=1e-3)
    elapsed = time.time() - t0
    assert {r["family"] for r in records} == {"coulomb", "oscillator-3d"}
    _report("7 singular asymptotics", records, elapsed)


def test_criterion_8_structural_invariants():
    """Shape invariance, the spectral PDE and the Riccati constraints pointwise."""
    t0 = time.time()
    records = verify.check_structural(seed=SEED, tol_scale=1e-12)
    elapsed = time.time() - t0
    checks = {r["check"] for r in records}
    assert {"shape-invariance", "shape-pde", "riccati-f1"} <= checks
    _report("8 structural invariants", records, elapsed)


def test_criterion_9_turning_point_agreement():
    """Analytic turning points match the numeric roots to 1e-9 (1 + |x|)."""
    t0 = time.time()
    records = verify.check_turning_agreement(seed=SEED, tol=1e-9)
    elapsed = time.time() - t0
    assert {r["family"] for r in records} == set(FAMILIES)
    _report("9 turning-point agreement", records, elapsed)
