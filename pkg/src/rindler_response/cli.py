"""Command-line front end: eval, scan, figure and compare.

All inputs are dimensionless groups (products with the gap dw). Flags
override values read from --config, a file of `key = value` lines with
'#' comments, keys spelled like the flags (dw_dt or dw-dt).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .compare import compare
from .figures import PANELS, PRESETS
from .kinematics import DetectorGeometry
from .profiles import Gaussian, Sharp
from .scan import (GridAxis, PointConfig, Quantity, error_code, evaluate, format_row,
                   run_scan, stderr_progress, write_csv, PointResult, CSV_HEADER)

POINT_KEYS = ("quantity", "switching", "dw_dt", "dw_eps", "dw_dx", "dw_zeta", "t_center", "direction")
FLOAT_KEYS = {"dw_dt", "dw_eps", "dw_dx", "dw_zeta", "t_center"}
EXIT_USAGE = 2
EXIT_EVAL = 3


class UsageError(Exception):
    pass


def read_config(path: str) -> dict[str, str]:
    out = {}
    for n, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{n}: expected 'key = value'")
        key, val = (s.strip() for s in line.split("=", 1))
        out[key.replace("-", "_")] = val
    return out


def _merged(args) -> dict[str, str]:
    """Config-file values overridden by explicitly given flags."""
    vals = read_config(args.config) if args.config else {}
    for key, v in vars(args).items():
        if v is not None and key not in ("config", "command", "func"):
            vals[key] = v
    return vals


def point_config(vals: dict) -> PointConfig:
    kw = {}
    for key in POINT_KEYS:
        if key in vals:
            kw[key] = float(vals[key]) if key in FLOAT_KEYS else str(vals[key])
    if "quantity" not in kw:
        raise UsageError("--quantity is required")
    try:
        return PointConfig(**kw)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _float(vals, key, flag):
    if key not in vals:
        raise UsageError(f"{flag} is required")
    try:
        return float(vals[key])
    except ValueError:
        raise UsageError(f"{flag} expects a number, got {vals[key]!r}") from None


def cmd_eval(args) -> int:
    vals = _merged(args)
    cfg = point_config(vals)
    a1 = _float(vals, "alpha1", "--alpha1")
    a2 = _float(vals, "alpha2", "--alpha2")
    try:
        value, err, method, flags = evaluate(cfg, a1, a2)
    except Exception as exc:
        print(f"error: {error_code(exc)}: {exc}", file=sys.stderr)
        return EXIT_EVAL
    print(",".join(CSV_HEADER))
    print(format_row(PointResult(a1, a2, value, err, method.value, flags)))
    if flags:
        print(f"warning: {';'.join(flags)} (window shorter than 10 eps)", file=sys.stderr)
    return 0


def _axes(vals) -> tuple[GridAxis, GridAxis]:
    try:
        base = GridAxis.parse(str(vals.get("grid", "40")))
        a1 = GridAxis.parse(str(vals["alpha1"])) if "alpha1" in vals else base
        a2 = GridAxis.parse(str(vals["alpha2"])) if "alpha2" in vals else base
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return a1, a2


def _jobs(vals) -> int:
    j = int(vals.get("jobs", 1))
    return j if j > 0 else (os.cpu_count() or 1)


def cmd_scan(args) -> int:
    vals = _merged(args)
    cfg = point_config(vals)
    ax1, ax2 = _axes(vals)
    if "out" not in vals:
        raise UsageError("--out is required")
    results = run_scan(cfg, ax1, ax2, _jobs(vals), stderr_progress("scan"))
    with open(vals["out"], "w", newline="") as fh:
        write_csv(results, fh)
    failed = sum(r.error is not None for r in results)
    if failed:
        print(f"scan: {failed} point(s) failed, recorded as ERR rows", file=sys.stderr)
    return 0


def cmd_figure(args) -> int:
    vals = _merged(args)
    name = vals["name"]
    if name not in PRESETS:
        raise UsageError(f"unknown figure {name!r}; choose from {', '.join(PRESETS)}")
    out_dir = Path(vals.get("out", "."))
    out_dir.mkdir(parents=True, exist_ok=True)
    ax1, ax2 = _axes(vals)
    panels = vals.get("panels", PANELS)
    unknown = sorted(set(panels) - set(PRESETS[name]))
    if unknown:
        raise UsageError(f"{name} has no panel(s) {''.join(unknown)}; choose from {''.join(PRESETS[name])}")
    for p in panels:
        cfg = PRESETS[name][p]
        path = out_dir / f"{name}{p}.csv"
        results = run_scan(cfg, ax1, ax2, _jobs(vals), stderr_progress(f"{name}{p}"))
        with open(path, "w", newline="") as fh:
            write_csv(results, fh)
        print(path)
    return 0


def cmd_compare(args) -> int:
    vals = _merged(args)
    comp = vals.get("component")
    sw_kind = vals.get("switching", "sharp")
    eps = _float(vals, "dw_eps", "--dw-eps")
    g = DetectorGeometry(_float(vals, "alpha1", "--alpha1"), _float(vals, "alpha2", "--alpha2"),
                         float(vals.get("dw_dx", 0.3)))
    center = float(vals.get("t_center", 0.0))
    if sw_kind == "sharp":
        sw = Sharp(_float(vals, "dw_dt", "--dw-dt"), center)
    else:
        sw = Gaussian(_float(vals, "dw_zeta", "--dw-zeta"), center)
    dw = -1.0 if vals.get("direction") == "decay" else 1.0
    try:
        res = compare(comp, dw, sw, g, eps)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(res.report())
    return 1 if res.status == "FAIL" else 0


def _add_point_flags(p, quantity=True):
    if quantity:
        p.add_argument("--quantity", choices=[q.value for q in Quantity])
    p.add_argument("--switching", choices=["sharp", "gaussian"])
    p.add_argument("--dw-dt", dest="dw_dt", type=float, help="dw * window duration (sharp)")
    p.add_argument("--dw-eps", dest="dw_eps", type=float, help="dw * cutoff eps")
    p.add_argument("--dw-dx", dest="dw_dx", type=float, help="dw * |transverse separation|")
    p.add_argument("--dw-zeta", dest="dw_zeta", type=float, help="dw * Gaussian width zeta")
    p.add_argument("--t-center", dest="t_center", type=float, help="dw * window centre")
    p.add_argument("--direction", choices=["auto", "excitation", "decay"])
    p.add_argument("--config", help="file of 'key = value' lines")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rindler-response",
                                 description="Responses of two accelerated detectors on (alpha1, alpha2) grids.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="one point, CSV on stdout")
    _add_point_flags(p)
    p.add_argument("--alpha1", help="dw * alpha1")
    p.add_argument("--alpha2", help="dw * alpha2")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("scan", help="grid scan to CSV")
    _add_point_flags(p)
    p.add_argument("--alpha1", help="alpha1 axis, 'lo:hi:N'")
    p.add_argument("--alpha2", help="alpha2 axis, 'lo:hi:N'")
    p.add_argument("--grid", help="both axes: 'N' (range 0.1..2 pi) or 'lo:hi:N'")
    p.add_argument("--out", help="output CSV path")
    p.add_argument("--jobs", type=int, help="worker processes (0 = all cores)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("figure", help="preset panels of one figure family")
    p.add_argument("name", help="fig1 .. fig7")
    p.add_argument("--panels", help="subset of 'abcd'")
    p.add_argument("--grid", help="both axes: 'N' or 'lo:hi:N' (default 40)")
    p.add_argument("--out", help="output directory")
    p.add_argument("--jobs", type=int)
    p.add_argument("--config", help="file of 'key = value' lines")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("compare", help="closed form vs brute-force quadrature")
    p.add_argument("component", choices=["F11", "F22", "F21", "F12"])
    _add_point_flags(p, quantity=False)
    p.add_argument("--alpha1")
    p.add_argument("--alpha2")
    p.set_defaults(func=cmd_compare)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        ap.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: io: {exc}", file=sys.stderr)
        return EXIT_EVAL


if __name__ == "__main__":
    sys.exit(main())
