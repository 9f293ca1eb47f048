"""Acceptance checks. Each test prints one PASS/FAIL line; the lines are
repeated at the end of the pytest run.

    pytest tests/test_acceptance.py -v
    python tests/test_acceptance.py          # same checks, no pytest needed
"""

from __future__ import annotations

import itertools
import math
import os
import subprocess
import sys
import tempfile
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from reference import ci_series, ei_series, lerch_sderiv_ref, si_series  # noqa: E402
from rindler_response import crossed, individual, specfun  # noqa: E402
from rindler_response.figures import PRESETS  # noqa: E402
from rindler_response.kinematics import DetectorGeometry, phi  # noqa: E402
from rindler_response.oracle import response_1d, response_2d  # noqa: E402
from rindler_response.profiles import Gaussian, QuadratureControl, Sharp  # noqa: E402
from rindler_response.rates import (crossed_rate, interference_factor, r11_asymptotic,  # noqa: E402
                                    r21_asymptotic_equal_acc, rate_bundle, rate_numeric)
from rindler_response.scan import GridAxis, run_scan  # noqa: E402

RESULTS: list[str] = []

DT_GRID = (0.3, 1.2, 3.0, 12.0, 30.0)
EPS_GRID = (0.03, 0.1)
CROSS_PAIRS = ((1.0, 1.4), (0.5, 2.0), (2.0, 2.5))
FIG_GRID = GridAxis(0.1, 2 * math.pi, 40)
JOBS = os.cpu_count() or 1


def report(label: str, ok: bool, detail: str) -> bool:
    line = f"{'PASS' if ok else 'FAIL'}  {label}: {detail}"
    print(line)
    RESULTS.append(line)
    return ok


def _cross_points():
    for dt, eps, (a1, a2) in itertools.product(DT_GRID, EPS_GRID, CROSS_PAIRS):
        if dt >= 10 * eps:
            yield dt, eps, DetectorGeometry(a1, a2, 0.3)


# ---------------------------------------------------------------------------

def check_special_functions() -> bool:
    """Si, Ci, Ei and the Lerch s-derivative on 100 random points each, |z| <= 20."""
    rng = np.random.default_rng(2024)
    t0 = time.perf_counter()
    worst_abs, worst_scaled, impl_time = {}, {}, 0.0

    def disk(n):
        return 20 * np.sqrt(rng.uniform(0, 1, n)) * np.exp(1j * rng.uniform(-np.pi, np.pi, n))

    cases = [("Si", specfun.sine_integral, si_series, disk(100)),
             ("Ci", specfun.cosine_integral, ci_series, disk(100)),
             ("Ei", specfun.exp_integral_ei, ei_series, disk(100))]
    for name, fn, ref, zs in cases:
        a = s = 0.0
        for z in map(complex, zs):
            t = time.perf_counter()
            v = fn(z)
            impl_time += time.perf_counter() - t
            r = ref(z)
            a = max(a, abs(v - r))
            s = max(s, abs(v - r) / max(1.0, abs(r)))
        worst_abs[name], worst_scaled[name] = a, s
    zq = rng.uniform(0, 0.95, 100)
    aa = rng.uniform(0.05, 20, 100) + 1j * rng.uniform(-20, 20, 100)
    a = 0.0
    for z, x in zip(zq, aa):
        t = time.perf_counter()
        v = specfun.lerch_phi_sderiv(float(z), complex(x))
        impl_time += time.perf_counter() - t
        r = lerch_sderiv_ref(float(z), complex(x))
        a = max(a, abs(v - r))
    worst_abs["Lerch"], worst_scaled["Lerch"] = a, a
    total = time.perf_counter() - t0
    ok = max(worst_abs.values()) <= 1e-10 and total < 10
    detail = ("max abs err " + ", ".join(f"{k} {v:.1e}" for k, v in worst_abs.items())
              + " (tol 1e-10); scaled by max(1,|f|): "
              + ", ".join(f"{k} {v:.1e}" for k, v in worst_scaled.items())
              + f"; {total:.1f}s total, {impl_time:.2f}s in the implementation")
    return report("special functions vs defining series", ok, detail)


def check_f11_sharp() -> bool:
    ctl = QuadratureControl(rel_tol=1e-7, abs_tol=1e-15, max_subdivisions=20000)
    t0 = time.perf_counter()
    worst, n, unconverged = 0.0, 0, 0
    for dt, eps, a in itertools.product(DT_GRID, EPS_GRID, (0.1, 1.0, 10.0)):
        if dt < 10 * eps:
            continue
        g = DetectorGeometry(a, a, 0.0)
        v = individual.f11_sharp(1.0, Sharp(dt), eps, a).value
        for oracle in (response_1d, response_2d):
            o = oracle("11", 1.0, Sharp(dt), g, eps, ctl)
            unconverged += not o.converged
            worst = max(worst, abs(v - o.value) / abs(o.value))
            n += 1
    el = time.perf_counter() - t0
    ok = worst <= 1e-6 and unconverged == 0 and el < 120
    return report("F11 sharp vs 1-D and 2-D quadrature", ok,
                  f"{n} comparisons, max rel err {worst:.1e} (tol 1e-6), {unconverged} unconverged, {el:.1f}s")


def check_f21_sharp() -> bool:
    ctl = QuadratureControl(rel_tol=1e-5, abs_tol=1e-15, max_subdivisions=20000)
    t0 = time.perf_counter()
    worst, n, unconverged = 0.0, 0, 0
    for dt, eps, g in _cross_points():
        v = crossed.f21_sharp(1.0, Sharp(dt), g, eps).value
        o = response_2d("21", 1.0, Sharp(dt), g, eps, ctl)
        unconverged += not o.converged
        worst = max(worst, abs(v - o.value) / abs(o.value))
        n += 1
    el = time.perf_counter() - t0
    ok = worst <= 1e-4 and unconverged == 0 and el < 300
    return report("F21 sharp vs 2-D quadrature", ok,
                  f"{n} points, max rel err {worst:.1e} (tol 1e-4), {unconverged} unconverged, {el:.1f}s")


def check_conjugation() -> bool:
    w_conj = w_re = 0.0
    for dt, eps, g in _cross_points():
        sw = Sharp(dt)
        f21 = crossed.f21_sharp(1.0, sw, g, eps).value
        f12 = crossed.f12_sharp(1.0, sw, g, eps).value
        w_conj = max(w_conj, abs(f12 - f21.conjugate()) / abs(f21))
        re = crossed.re_f21_sharp(1.0, sw, g, eps)
        w_re = max(w_re, abs(2 * re - 2 * f21.real) / abs(f21))
    ok = w_conj <= 1e-12 and w_re <= 1e-10
    return report("F12 = conj F21 and real-part assembly", ok,
                  f"conjugation {w_conj:.1e} (tol 1e-12), real part {w_re:.1e} (tol 1e-10)")


def check_thermal_asymptote() -> bool:
    worst_rate = 0.0
    for dw, a in itertools.product((1.0, -1.0), (1 / (2 * math.pi), 0.5, 1.0)):
        r = individual.r11_sharp_rate(dw, 1e3, 1e-3, a).value
        worst_rate = max(worst_rate, abs(r / r11_asymptotic(dw, a) - 1))
    worst_db = 0.0
    for w, a in itertools.product((0.1, 0.5, 1.0, 2.0), (0.1, 0.5, 1.0, 3.0)):
        lhs = r11_asymptotic(w, a) * math.exp(2 * math.pi * a * w)
        worst_db = max(worst_db, abs(lhs / r11_asymptotic(-w, a) - 1))
    worst_half = 0.0
    for dw, a in itertools.product((1.0, -1.0), (0.5, 1.0, 2.0)):
        eps = 1e-3
        g = rate_numeric(lambda s: individual.f11_gaussian_asymptotic(dw, s, eps, a, order=0),
                         Gaussian(10.0)).value
        sharp = individual.thermal_spectrum(dw, eps, a)
        worst_half = max(worst_half, abs(g / (0.5 * sharp) - 1))
    ok = worst_rate <= 1e-2 and worst_db <= 1e-12 and worst_half <= 1e-10
    return report("thermal asymptote, detailed balance, Gaussian = sharp/2", ok,
                  f"finite-time rate {worst_rate:.1e} (tol 1e-2), detailed balance {worst_db:.1e} (tol 1e-12), "
                  f"Gaussian/sharp {worst_half:.1e} (tol 1e-10)")


def check_equal_acceleration() -> bool:
    # displays against the full computations
    a, ph = 1.0, 1.0
    g = DetectorGeometry(a, a, 2 * a * math.sinh(ph / 2))
    w_sharp = w_gauss = 0.0
    for dw in (1.0, -1.0):
        r = crossed.r21_sharp_rate(dw, Sharp(200.0), g, 1e-4).value.real
        w_sharp = max(w_sharp, abs(r / r21_asymptotic_equal_acc(dw, a, ph, "sharp") - 1))
        gg = DetectorGeometry(a, a * (1 + 1e-9), g.dx)
        r = crossed_rate(dw, Gaussian(40.0), gg, 1e-6).value.real
        w_gauss = max(w_gauss, abs(r / r21_asymptotic_equal_acc(dw, a, ph, "gaussian") - 1))
    # Gaussian display is half the sharp one
    w_half = 0.0
    for dw, al, p in itertools.product((1.0, -1.0, 0.3), (0.2, 1.0, 4.0), (0.05, 0.5, 2.0)):
        s = r21_asymptotic_equal_acc(dw, al, p, "sharp")
        w_half = max(w_half, abs(r21_asymptotic_equal_acc(dw, al, p, "gaussian") - 0.5 * s) / abs(s))
    # general closed form at |a-|/a+ = 1e-4 against the dedicated limit, phi fixed
    d = 1e-4
    w_cont = 0.0
    for dw, dt, al in itertools.product((1.0, -1.0), (3.0, 12.0, 30.0), (0.5, 1.0, 3.0)):
        p = phi(DetectorGeometry(al, al, 0.3))
        a1, a2 = al * (1 - d), al * (1 + d)
        dx = math.sqrt(4 * a1 * a2 * math.sinh(p / 2) ** 2 - (a2 - a1) ** 2)
        v = crossed.f21_sharp(dw, Sharp(dt), DetectorGeometry(a1, a2, dx), 0.03).value
        lim = crossed.f21_sharp_equal_acc(dw, Sharp(dt), al, p, 0.03).value
        w_cont = max(w_cont, abs(v - lim) / abs(lim))
    ok = w_sharp <= 1e-2 and w_gauss <= 1e-2 and w_half <= 1e-12 and w_cont <= 1e-5
    return report("equal-acceleration crossed rates", ok,
                  f"sharp display {w_sharp:.1e}, Gaussian display {w_gauss:.1e} (tol 1e-2); "
                  f"Gaussian = sharp/2 {w_half:.1e} (tol 1e-12); limit continuity {w_cont:.1e} (tol 1e-5)")


def check_interference_factor() -> bool:
    w = abs(interference_factor(0.0) - 4.0)
    for n in range(3):
        x = (2 * n + 1) * math.pi / 2
        special = 2 * (1 + 2 * (-1) ** n / ((2 * n + 1) * math.pi))
        w = max(w, abs(interference_factor(x) - special))
    return report("interference factor special values", w <= 1e-14, f"max abs err {w:.1e} (tol 1e-14)")


def _scan(name, panel):
    t = time.perf_counter()
    res = run_scan(PRESETS[name][panel], FIG_GRID, FIG_GRID, JOBS)
    el = time.perf_counter() - t
    vals = np.array([np.nan if r.value is None else r.value for r in res]).reshape(40, 40)
    return vals, el


def _argmax_offset(vals):
    i, j = np.unravel_index(np.nanargmax(vals), vals.shape)
    return abs(int(i) - int(j)), (FIG_GRID.values()[i], FIG_GRID.values()[j])


def check_figure_structure() -> bool:
    times = []
    maxima = []
    for p in "abcd":
        v, el = _scan("fig1", p)
        times.append(el)
        maxima.append(np.nanmax(v))
    ok_a = all(x > y for x, y in zip(maxima, maxima[1:]))
    report("separation lowers the crossed-rate maximum", ok_a,
           "max Re R12 at dw|dx| = 0.1, 0.3, 1, 3: " + ", ".join(f"{m:.4g}" for m in maxima))

    v, el = _scan("fig4", "d")
    times.append(el)
    off, where = _argmax_offset(v)
    ok_b = off <= 2
    report("wide Gaussian window: maximum near alpha1 = alpha2", ok_b,
           f"argmax at ({where[0]:.3f}, {where[1]:.3f}), {off} grid steps off the diagonal (limit 2)")

    offs = []
    for p in "abcd":
        v, el = _scan("fig3", p)
        times.append(el)
        offs.append(_argmax_offset(v)[0])
    ok_c = all(o > 2 for o in offs)
    report("narrow Gaussian window: maximum off the diagonal", ok_c,
           "argmax offsets (grid steps) per panel: " + ", ".join(map(str, offs)) + " (need > 2)")

    gs, el1 = _scan("fig6", "a")
    ss, el2 = _scan("fig5", "a")
    times += [el1, el2]
    ok_d = np.nanmax(gs) > np.nanmax(ss)
    report("Gaussian vs sharp mean-life maximum", ok_d,
           f"max scaled mean life Gaussian {np.nanmax(gs):.4f} vs sharp {np.nanmax(ss):.4f} (need >)")
    slow = max(times)
    ok_t = slow < 180
    report("figure scans within time budget", ok_t, f"slowest 40x40 scan {slow:.1f}s (limit 180s, {JOBS} worker(s))")
    return ok_a and ok_b and ok_c and ok_d and ok_t


def check_decoupling() -> bool:
    worst = 0.0
    ph = 2 * math.log(1e4) + 1.0  # exp(-phi/2) < 1e-4
    for (a1, a2), dw, dt in itertools.product(((1.0, 1.0), (1.0, 1.3), (0.5, 2.0)), (1.0, -1.0), (3.0, 30.0)):
        ch = math.cosh(ph)
        dx2 = 2 * a1 * a2 * (ch - 1) - (a1 - a2) ** 2
        g = DetectorGeometry(a1, a2, math.sqrt(dx2))
        assert math.exp(-phi(g) / 2) < 1e-4
        b, _ = rate_bundle(dw, Sharp(dt), g, 0.03)
        worst = max(worst, abs(2 * b.r12.real) / abs(b.r11 + b.r22))
    return report("large-separation decoupling", worst < 1e-3,
                  f"max |2 Re R12| / (R11 + R22) = {worst:.1e} at exp(-phi/2) < 1e-4 (need < 1e-3)")


def check_cli_determinism() -> bool:
    with tempfile.TemporaryDirectory() as d:
        outs = []
        t = time.perf_counter()
        for jobs in (1, 8):
            out = Path(d) / f"j{jobs}.csv"
            cmd = [sys.executable, "-m", "rindler_response", "scan", "--quantity", "ReR21", "--dw-dt", "3",
                   "--dw-eps", "0.03", "--dw-dx", "0.3", "--grid", "60", "--jobs", str(jobs), "--out", str(out)]
            subprocess.run(cmd, check=True, capture_output=True)
            outs.append(out.read_bytes())
        el = time.perf_counter() - t
        same = outs[0] == outs[1]
        rows = outs[0].count(b"\n") - 1
    return report("scan output independent of worker count", same and rows == 3600,
                  f"60x60 scan, {rows} rows, --jobs 1 and --jobs 8 byte-identical: {same}, {el:.1f}s")


CHECKS = [check_special_functions, check_f11_sharp, check_f21_sharp, check_conjugation,
          check_thermal_asymptote, check_equal_acceleration, check_interference_factor,
          check_figure_structure, check_decoupling, check_cli_determinism]


@pytest.mark.parametrize("check", CHECKS, ids=lambda f: f.__name__.removeprefix("check_"))
def test_acceptance(check):
    assert check()


if __name__ == "__main__":
    ok = [c() for c in CHECKS]
    print(f"\n{sum(ok)}/{len(ok)} checks passed")
    sys.exit(0 if all(ok) else 1)
