"""Compute brute-force reference values once and store them for the test suite.

Run from the repository root:

    python3 scripts/freeze_oracles.py [--out tests/data/oracle_values.json]

Only the oracle module (nested / reduced Gauss-Kronrod quadrature of the
defining integrals) is used here, never the closed forms, so the stored
numbers are an independent reference.
"""

from __future__ import annotations

import argparse
import itertools
import json
import time
from pathlib import Path

from rindler_response.kinematics import DetectorGeometry
from rindler_response.oracle import halfline_bruteforce, response_1d, response_2d
from rindler_response.profiles import Gaussian, QuadratureControl, Sharp

DT = (0.3, 1.2, 3.0, 12.0, 30.0)
EPS = (0.03, 0.1)
ALPHA = (0.1, 1.0, 10.0)
PAIRS = ((1.0, 1.4), (0.5, 2.0), (2.0, 2.5))


def _entry(res, **params):
    v = complex(res.value)
    return {**params, "re": v.real, "im": v.imag, "err": res.err_estimate, "converged": bool(res.converged)}


def individual_sharp(ctl):
    rows = []
    for dt, eps, a, dw in itertools.product(DT, EPS, ALPHA, (1.0, -1.0)):
        if dt < 10 * eps:
            continue
        g = DetectorGeometry(a, a, 0.0)
        sw = Sharp(dt)
        r1 = response_1d("11", dw, sw, g, eps, ctl)
        rows.append(_entry(r1, kind="1d", dw=dw, dt=dt, eps=eps, alpha1=a))
        if dw > 0:
            r2 = response_2d("11", dw, sw, g, eps, ctl)
            rows.append(_entry(r2, kind="2d", dw=dw, dt=dt, eps=eps, alpha1=a))
    return rows


def crossed_sharp(ctl):
    rows = []
    for dt, eps, (a1, a2), dw in itertools.product(DT, EPS, PAIRS, (1.0, -1.0)):
        if dt < 10 * eps:
            continue
        g = DetectorGeometry(a1, a2, 0.3)
        res = response_2d("21", dw, Sharp(dt), g, eps, ctl)
        rows.append(_entry(res, kind="2d", dw=dw, dt=dt, eps=eps, alpha1=a1, alpha2=a2, dx=0.3, center=0.0))
    # off-centre windows and a second separation
    for dt, center, dw in itertools.product((3.0, 12.0), (0.4, -1.1), (1.0, -1.0)):
        g = DetectorGeometry(1.0, 1.4, 0.3)
        res = response_1d("21", dw, Sharp(dt, center), g, 0.03, ctl)
        rows.append(_entry(res, kind="1d", dw=dw, dt=dt, eps=0.03, alpha1=1.0, alpha2=1.4, dx=0.3,
                           center=center))
    # equal accelerations
    for a, dw in itertools.product((1.0, 3.0), (1.0, -1.0)):
        g = DetectorGeometry(a, a, 0.3)
        res = response_1d("21", dw, Sharp(3.0), g, 0.03, ctl)
        rows.append(_entry(res, kind="1d", dw=dw, dt=3.0, eps=0.03, alpha1=a, alpha2=a, dx=0.3, center=0.0))
    return rows


def gaussian(ctl):
    rows = []
    cases = [(0.3, 0.03), (0.015, 0.03), (30.0, 1.0), (2.0, 0.05)]
    for (z, eps), dw, a in itertools.product(cases, (1.0, -1.0), (0.5, 2.0)):
        g = DetectorGeometry(a, a, 0.0)
        res = response_1d("11", dw, Gaussian(z), g, eps, ctl)
        rows.append(_entry(res, kind="11", dw=dw, zeta=z, eps=eps, alpha1=a, alpha2=a, dx=0.0, center=0.0))
    for (z, eps), dw, (a1, a2) in itertools.product(cases, (1.0, -1.0), PAIRS[:2]):
        g = DetectorGeometry(a1, a2, 0.3)
        res = response_1d("21", dw, Gaussian(z, 0.2), g, eps, ctl)
        rows.append(_entry(res, kind="21", dw=dw, zeta=z, eps=eps, alpha1=a1, alpha2=a2, dx=0.3, center=0.2))
    return rows


def half_line(ctl):
    rows = []
    g = DetectorGeometry(1.0, 1.5, 0.3)
    for sigma, dw, sgn in itertools.product((1.0, -1.0, 1.5, -0.7), (1.0, -1.0), (1.0, -1.0)):
        eps = sgn * 0.03
        res = halfline_bruteforce(dw, sigma, g, eps, ctl)
        rows.append(_entry(res, dw=dw, sigma=sigma, eps=eps, alpha1=1.0, alpha2=1.5, dx=0.3))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="tests/data/oracle_values.json")
    args = ap.parse_args()
    ctl = QuadratureControl(rel_tol=1e-10, abs_tol=1e-16, max_subdivisions=40000)
    out = {}
    for name, fn in [("individual_sharp", individual_sharp), ("crossed_sharp", crossed_sharp),
                     ("gaussian", gaussian), ("half_line", half_line)]:
        t = time.time()
        out[name] = fn(ctl)
        bad = sum(not r["converged"] for r in out[name])
        print(f"{name}: {len(out[name])} values in {time.time() - t:.1f}s, {bad} not converged")
    path = Path(args.out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(out, indent=1) + "\n")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
