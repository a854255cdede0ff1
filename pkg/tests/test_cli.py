"""Command-line interface: formats, determinism, exit codes."""

import json

import pytest

from siwkb.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_list_has_ten_rows(capsys):
    code, out, _ = run_cli(capsys, "list", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["results"]) == 10
    names = [row["family"] for row in payload["results"]]
    assert "poschl-teller" in names and "harmonic" in names


def test_action_coulomb_langer(capsys):
    code, out, _ = run_cli(
        capsys, "action", "--family", "coulomb", "--set", "l=1,e2=2",
        "--n", "0", "--scheme", "langer-wkb", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    row = payload["results"][0]
    assert row["action_over_pi_hbar"] == pytest.approx(0.5, abs=1e-8)
    assert row["status"] == "ok"
    assert row["units_hbar"] is True
    assert payload["meta"]["units_hbar"] is True
    assert payload["internal"]["a"] == 1.0


def test_solve_roundtrip(capsys):
    code, out, _ = run_cli(
        capsys, "solve", "--family", "harmonic", "--set", "omega=1",
        "--n", "3", "--scheme", "swkb",
    )
    assert code == 0
    row = json.loads(out)["results"][0]
    assert row["solved"] == pytest.approx(3.0, abs=1e-8)


def test_identity_command(capsys):
    code, out, _ = run_cli(
        capsys, "identity", "--family", "eckart", "--set", "A=1.25,B=9", "--n", "1",
    )
    assert code == 0
    row = json.loads(out)["results"][0]
    assert row["action_gap"] <= 2e-8
    assert row["max_pointwise_residual"] <= 1e-9


def test_validation_exit_code(capsys):
    code, _, err = run_cli(
        capsys, "action", "--family", "coulomb", "--set", "l=0.4,e2=2", "--n", "0",
    )
    assert code == 3
    assert "hbar/2" in err


def test_unknown_param_key_is_usage_error(capsys):
    code, _, err = run_cli(
        capsys, "action", "--family", "coulomb", "--set", "zeta=1", "--n", "0",
    )
    assert code == 2
    assert "unknown parameter" in err


def test_unknown_family_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["action", "--family", "hydrogen", "--n", "0"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_csv_format(capsys):
    code, out, _ = run_cli(
        capsys, "spectrum", "--family", "morse", "--set", "A=2.5", "--nmax", "4",
        "--schemes", "langer-wkb", "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("family,")
    assert len(lines) == 5  # header + rows for n = 0..3


def test_output_deterministic(capsys, tmp_path):
    args = [
        "sweep", "--family", "harmonic", "--range", "omega=0.5:2:3",
        "--nmax", "2", "--schemes", "swkb", "--seed", "7",
    ]
    code, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code == code2 == 0
    assert out1 == out2


def test_verify_subset_passes(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--checks", "structural,closedform",
        "--families", "harmonic,morse", "--seed", "3",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["meta"]["all_passed"] is True
    assert all(r["passed"] for r in payload["results"])


def test_verify_failure_exit_code(capsys, monkeypatch):
    import siwkb.verify as verify_mod

    def broken_check(seed=None, families=None):
        return [{"check": "x", "family": "harmonic", "params": {}, "passed": False,
                 "value": 1.0, "tol": 0.0}]

    monkeypatch.setitem(verify_mod.CHECKS, "structural", broken_check)
    code, out, _ = run_cli(capsys, "verify", "--checks", "structural")
    assert code == 4


def test_spectrum_flags_out_of_spectrum_rows(capsys):
    code, out, _ = run_cli(
        capsys, "spectrum", "--family", "morse", "--set", "A=2.5", "--nmax", "5",
        "--schemes", "swkb",
    )
    assert code == 0
    rows = json.loads(out)["results"]
    flagged = [r["n"] for r in rows if r["status"] == "out-of-spectrum"]
    assert flagged == [3, 4]


def test_oracle_command(capsys):
    code, out, _ = run_cli(
        capsys, "oracle", "--family", "coulomb", "--set", "l=1,e2=2", "--n", "1",
        "--tol", "1e-6",
    )
    assert code == 0
    row = json.loads(out)["results"][0]
    assert row["status"] == "ok"
    assert row["numerov"] == pytest.approx(0.75, abs=1e-6)


def test_asymptotics_command(capsys):
    code, out, _ = run_cli(
        capsys, "asymptotics", "--family", "coulomb", "--set", "l=2,e2=2",
        "--side", "left",
    )
    assert code == 0
    row = json.loads(out)["results"][0]
    assert row["measured"] == pytest.approx(1.5, rel=1e-6)
    assert row["predicted"] == 1.5


def test_sweep_bad_range_key(capsys):
    code, _, err = run_cli(
        capsys, "sweep", "--family", "harmonic", "--range", "zeta=1:2:3",
    )
    assert code == 2
    assert "unknown range key" in err


def test_sweep_marks_invalid_points(capsys):
    code, out, _ = run_cli(
        capsys, "sweep", "--family", "coulomb", "--set", "e2=2",
        "--range", "l=0.3:1.3:2", "--nmax", "1", "--schemes", "langer-wkb",
    )
    assert code == 0
    rows = json.loads(out)["results"]
    statuses = [r["status"] for r in rows]
    assert any(s.startswith("invalid") for s in statuses)
    assert any(s == "ok" for s in statuses)
