"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 parameter validation failure,
4 verification failure.  All reports are deterministic for a given
(arguments, seed) pair.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import __version__, numerov, relation, verify
from .errors import SiwkbError, ValidationError
from .families import FAMILIES, FAMILY_NAMES, Params, get_family
from .quantize import (
    ALL_SCHEMES,
    Scheme,
    action_integral,
    asymptotic_slope,
    predicted_asymptotic_slope,
    solve_energy,
    spectrum_report,
)

USAGE_EXIT = 2
VALIDATION_EXIT = 3
VERIFY_EXIT = 4

_PARAM_KEYS = {
    "omega": "omega",
    "w": "omega",
    "a": "A",
    "A": "A",
    "b": "B",
    "B": "B",
    "l": "ell",
    "ell": "ell",
    "e2": "e2",
}


def _parse_params(set_args, hbar: float) -> Params:
    fields: dict = {"hbar": hbar}
    for chunk in set_args or []:
        for item in chunk.split(","):
            item = item.strip()
            if not item:
                continue
            if "=" not in item:
                raise _UsageError(f"--set entries must be key=value, got {item!r}")
            key, _, value = item.partition("=")
            key = key.strip()
            if key not in _PARAM_KEYS:
                raise _UsageError(
                    f"unknown parameter key {key!r}; known: omega, A, B, l, e2"
                )
            try:
                fields[_PARAM_KEYS[key]] = float(value)
            except ValueError:
                raise _UsageError(f"parameter {key!r} is not a number: {value!r}") from None
    return Params(**fields)


class _UsageError(Exception):
    pass


def _sanitize(obj):
    """Map non-finite floats to None; float repr itself is deterministic."""
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {k: _sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sanitize(v) for v in obj]
    return obj


def _emit(payload: dict, results: list[dict], args) -> None:
    payload = dict(payload)
    payload["results"] = results
    payload = _sanitize(payload)
    results = payload["results"]
    if args.format == "json":
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        keys: list[str] = []
        for row in results:
            for key in row:
                if key not in keys:
                    keys.append(key)
        writer = csv.DictWriter(buf, fieldnames=keys)
        writer.writeheader()
        for row in results:
            writer.writerow({k: _cell(row.get(k)) for k in keys})
        text = buf.getvalue()
    else:
        lines = []
        for row in results:
            lines.append("  ".join(f"{k}={_cell(v)}" for k, v in row.items()))
        text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cell(value):
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True)
    if isinstance(value, bool):
        return str(value).lower()
    return value


def _meta(args) -> dict:
    return {
        "meta": {
            "version": __version__,
            "seed": getattr(args, "seed", None),
            "hbar": getattr(args, "hbar", 1.0),
            "units_hbar": True,
        }
    }


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------
def _cmd_list(args) -> int:
    from .families import Family

    rows = []
    for fam in FAMILIES.values():
        dom = fam.domain
        finite_tower = type(fam)._count is not Family._count
        rows.append(
            {
                "family": fam.name,
                "display_name": fam.display_name,
                "class": fam.class_tag,
                "parameters": ",".join(fam.param_names),
                "domain": f"({dom.left}, {dom.right})",
                "singular": ",".join(
                    side
                    for side, flag in (("left", dom.singular_left), ("right", dom.singular_right))
                    if flag
                ),
                "bound_states": "finite" if finite_tower else "infinite",
            }
        )
    _emit(_meta(args), rows, args)
    return 0


def _require_valid(family, p: Params):
    report = get_family(family).validate(p)
    if not report.valid:
        raise ValidationError("; ".join(report.violations))
    return report


def _cmd_spectrum(args) -> int:
    p = _parse_params(args.set, args.hbar)
    report = _require_valid(args.family, p)
    schemes = [Scheme.from_name(s) for s in (args.schemes.split(",") if args.schemes else [s.value for s in ALL_SCHEMES])]
    rep = spectrum_report(args.family, p, args.nmax, schemes)
    rows = []
    for row in rep.rows:
        base = {
            "family": rep.family,
            "params": rep.params,
            "n": row.n,
            "status": row.status,
            "exact": row.exact,
            "units_hbar": True,
        }
        for scheme_name, cell in row.cells.items():
            entry = dict(base)
            entry["scheme"] = scheme_name
            entry["scheme_status"] = cell.status
            entry["solved"] = cell.solved
            entry["action"] = cell.action
            entry["target"] = cell.target
            entry["residual"] = cell.residual
            rows.append(entry)
        if not row.cells:
            rows.append(base)
    payload = _meta(args)
    payload["internal"] = report.internal.as_dict()
    _emit(payload, rows, args)
    return 0


def _cmd_action(args) -> int:
    p = _parse_params(args.set, args.hbar)
    report = _require_valid(args.family, p)
    scheme = Scheme.from_name(args.scheme)
    qr = action_integral(args.family, p, args.n, scheme)
    row = {
        "family": qr.family,
        "params": p.as_dict(),
        "n": qr.n,
        "scheme": scheme.value,
        "energy": qr.energy,
        "action": qr.action,
        "target": qr.target,
        "residual": qr.residual,
        "action_over_pi_hbar": qr.action / (math.pi * p.hbar),
        "x_left": qr.turning.x_left,
        "x_right": qr.turning.x_right,
        "quad_error_estimate": qr.quad_error_estimate,
        "nodes_used": qr.nodes_used,
        "degenerate": qr.degenerate,
        "status": "ok" if abs(qr.residual) <= args.tol * p.hbar else "residual-above-tol",
        "units_hbar": True,
    }
    payload = _meta(args)
    payload["internal"] = report.internal.as_dict()
    _emit(payload, [row], args)
    return 0


def _cmd_solve(args) -> int:
    p = _parse_params(args.set, args.hbar)
    _require_valid(args.family, p)
    scheme = Scheme.from_name(args.scheme)
    fam = get_family(args.family)
    solved = solve_energy(args.family, p, args.n, scheme)
    row = {
        "family": args.family,
        "params": p.as_dict(),
        "n": args.n,
        "scheme": scheme.value,
        "solved": solved,
        "units_hbar": True,
    }
    try:
        exact = fam.exact_energy(p, args.n)
        row["exact"] = exact
        row["error"] = solved - exact
        row["status"] = "ok" if abs(solved - exact) <= args.tol * (1 + abs(exact)) else "deviates"
    except SiwkbError:
        row["exact"] = None
        row["status"] = "no-exact-level"
    _emit(_meta(args), [row], args)
    return 0


def _cmd_identity(args) -> int:
    import numpy as np

    p = _parse_params(args.set, args.hbar)
    _require_valid(args.family, p)
    xs = verify._interior_grid(args.family, p, args.grid_points)
    resid = relation.integrand_identity_residual(args.family, p, args.n, xs)
    langer, swkb = relation.half_shift_action_check(args.family, p, args.n)
    target = (args.n + 0.5) * math.pi * p.hbar
    row = {
        "family": args.family,
        "params": p.as_dict(),
        "n": args.n,
        "max_pointwise_residual": float(np.max(np.abs(resid))),
        "langer_action": langer,
        "half_shift_swkb_action": swkb,
        "target": target,
        "action_gap": abs(langer - swkb),
        "status": "ok" if abs(langer - swkb) <= args.tol * p.hbar else "mismatch",
        "units_hbar": True,
    }
    _emit(_meta(args), [row], args)
    return 0


def _cmd_oracle(args) -> int:
    p = _parse_params(args.set, args.hbar)
    _require_valid(args.family, p)
    fam = get_family(args.family)
    exact = fam.exact_energy(p, args.n)
    solved = numerov.eigenvalue(args.family, p, args.n)
    row = {
        "family": args.family,
        "params": p.as_dict(),
        "n": args.n,
        "exact": exact,
        "numerov": solved,
        "error": solved - exact,
        "status": "ok" if abs(solved - exact) <= args.tol * (1 + abs(exact)) else "deviates",
        "units_hbar": True,
    }
    _emit(_meta(args), [row], args)
    return 0


def _cmd_asymptotics(args) -> int:
    p = _parse_params(args.set, args.hbar)
    _require_valid(args.family, p)
    measured = asymptotic_slope(args.family, p, args.side)
    predicted = predicted_asymptotic_slope(args.family, p, args.side)
    row = {
        "family": args.family,
        "params": p.as_dict(),
        "side": args.side,
        "measured": measured,
        "predicted": predicted,
        "relative_error": abs(measured - predicted) / abs(predicted),
        "units_hbar": True,
    }
    _emit(_meta(args), [row], args)
    return 0


def _sorted_records(records):
    def key(rec):
        return (
            rec.get("check", ""),
            rec.get("family", ""),
            json.dumps(rec.get("params", {}), sort_keys=True),
            rec.get("n", -1),
            rec.get("scheme", ""),
        )

    return sorted(records, key=key)


def _cmd_verify(args) -> int:
    families = args.families.split(",") if args.families else None
    if families:
        unknown = [f for f in families if f not in FAMILY_NAMES]
        if unknown:
            raise _UsageError(f"unknown families: {unknown}")
    checks = args.checks.split(",") if args.checks else list(verify.CHECKS)
    unknown = [c for c in checks if c not in verify.CHECKS]
    if unknown:
        raise _UsageError(f"unknown checks: {unknown}; known: {', '.join(verify.CHECKS)}")

    workers = int(os.environ.get("SIWKB_THREADS", "1"))
    records: list[dict] = []

    def run_check(name):
        fn = verify.CHECKS[name]
        if name == "closedform":
            return fn(seed=0 if args.seed is None else args.seed)
        if name == "asymptotics":
            return fn(seed=args.seed)
        if name in ("langer", "swkb"):
            return fn(seed=args.seed, tol_hbar=args.tol, families=families)
        return fn(seed=args.seed, families=families)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for chunk in pool.map(run_check, checks):
                records.extend(chunk)
    else:
        for name in checks:
            records.extend(run_check(name))

    records = _sorted_records(records)
    for rec in records:
        rec["units_hbar"] = True
    ok = all(r["passed"] for r in records)
    payload = _meta(args)
    payload["meta"]["checks"] = checks
    payload["meta"]["all_passed"] = ok
    _emit(payload, records, args)
    return 0 if ok else VERIFY_EXIT


def _cmd_sweep(args) -> int:
    import numpy as np

    fam = get_family(args.family)
    axes = []
    for axis in args.range or []:
        key, _, rng = axis.partition("=")
        if key not in _PARAM_KEYS:
            raise _UsageError(f"unknown range key {key!r}")
        parts = rng.split(":")
        if len(parts) != 3:
            raise _UsageError(f"--range must be key=start:stop:count, got {axis!r}")
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
        axes.append((_PARAM_KEYS[key], np.linspace(start, stop, count)))
    if not axes:
        raise _UsageError("sweep requires at least one --range")

    base = _parse_params(args.set, args.hbar)
    schemes = [Scheme.from_name(s) for s in (args.schemes.split(",") if args.schemes else ["langer-wkb"])]
    grids = [values for _, values in axes]

    def point_rows(combo):
        p = base
        for (key, _), value in zip(axes, combo):
            p = p.replace(**{key: float(value)})
        report = fam.validate(p)
        if not report.valid:
            return [
                {
                    "family": fam.name,
                    "params": p.as_dict(),
                    "status": "invalid: " + "; ".join(report.violations),
                    "units_hbar": True,
                }
            ]
        out = []
        for scheme in schemes:
            for n in range(args.nmax):
                try:
                    qr = action_integral(fam, p, n, scheme)
                    out.append(
                        {
                            "family": fam.name,
                            "params": p.as_dict(),
                            "n": n,
                            "scheme": scheme.value,
                            "action": qr.action,
                            "target": qr.target,
                            "residual": qr.residual,
                            "status": "ok",
                            "units_hbar": True,
                        }
                    )
                except SiwkbError as exc:
                    out.append(
                        {
                            "family": fam.name,
                            "params": p.as_dict(),
                            "n": n,
                            "scheme": scheme.value,
                            "status": f"error: {exc}",
                            "units_hbar": True,
                        }
                    )
        return out

    combos = list(itertools.product(*grids))
    workers = int(os.environ.get("SIWKB_THREADS", "1"))
    rows = []
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for chunk in pool.map(point_rows, combos):  # canonical order preserved
                rows.extend(chunk)
    else:
        for combo in combos:
            rows.extend(point_rows(combo))
    _emit(_meta(args), rows, args)
    return 0


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------
def _add_common(sub, family=True, params=True):
    if family:
        sub.add_argument("--family", required=True, choices=FAMILY_NAMES)
    if params:
        sub.add_argument("--set", action="append", metavar="k=v[,k=v...]",
                         help="physical parameters, e.g. --set l=1,e2=2")
    sub.add_argument("--hbar", type=float, default=1.0)
    sub.add_argument("--tol", type=float, default=1e-8)
    sub.add_argument("--format", choices=("json", "csv", "table"), default="json")
    sub.add_argument("--output", default=None, help="write report to a file instead of stdout")
    sub.add_argument("--seed", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="siwkb",
        description="Shape-invariant potentials: exact spectra, Langer-corrected "
        "WKB and SWKB actions, and verification suites.",
    )
    parser.add_argument("--version", action="version", version=f"siwkb {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("list", help="list the ten families")
    _add_common(s, family=False, params=False)
    s.set_defaults(fn=_cmd_list)

    s = subs.add_parser("spectrum", help="exact and scheme-solved levels")
    _add_common(s)
    s.add_argument("--nmax", type=int, default=4)
    s.add_argument("--schemes", default=None, help="comma list: wkb,langer-wkb,swkb")
    s.set_defaults(fn=_cmd_spectrum)

    s = subs.add_parser("action", help="quantization action at an exact level")
    _add_common(s)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--scheme", default="langer-wkb")
    s.set_defaults(fn=_cmd_action)

    s = subs.add_parser("solve", help="invert the quantization condition for E")
    _add_common(s)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--scheme", default="langer-wkb")
    s.set_defaults(fn=_cmd_solve)

    s = subs.add_parser("identity", help="half-shift integrand identity checks")
    _add_common(s)
    s.add_argument("--n", type=int, default=0)
    s.add_argument("--grid-points", type=int, default=200)
    s.set_defaults(fn=_cmd_identity)

    s = subs.add_parser("oracle", help="independent Numerov eigenvalue")
    _add_common(s)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(fn=_cmd_oracle)

    s = subs.add_parser("asymptotics", help="singular-endpoint slope of the action integrand")
    _add_common(s)
    s.add_argument("--side", choices=("left", "right"), default="left")
    s.set_defaults(fn=_cmd_asymptotics)

    s = subs.add_parser("verify", help="run the verification battery")
    _add_common(s, family=False, params=False)
    s.add_argument("--families", default=None, help="comma list to restrict the grid")
    s.add_argument("--checks", default=None, help=f"comma list from: {', '.join(verify.CHECKS)}")
    s.set_defaults(fn=_cmd_verify)

    s = subs.add_parser("sweep", help="scan a parameter grid")
    _add_common(s)
    s.add_argument("--range", action="append", metavar="k=start:stop:count")
    s.add_argument("--nmax", type=int, default=2)
    s.add_argument("--schemes", default=None)
    s.set_defaults(fn=_cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except ValidationError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return VALIDATION_EXIT
    except SiwkbError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return VALIDATION_EXIT


if __name__ == "__main__":
    sys.exit(main())
