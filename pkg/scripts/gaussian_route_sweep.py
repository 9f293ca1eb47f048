"""Error of the large-width expansion against direct quadrature.

For each Gaussian width zeta and each kappa = 2 pi max(alpha) / zeta, prints
the worst relative rate error of R11 and Re R21 at expansion orders 1-3,
over both gap signs and a few geometries.  This is the measurement behind
rates.ASYMPTOTIC_ORDER and the kappa <= 1/2 condition in rates.use_asymptotic.
Points whose quadrature value is below its own error estimate are skipped.

    python3 scripts/gaussian_route_sweep.py [--eps 0.03]
"""

from __future__ import annotations

import argparse
import itertools
import math

from rindler_response import crossed, individual
from rindler_response.kinematics import DetectorGeometry
from rindler_response.profiles import Gaussian
from rindler_response.rates import rate_numeric

SHAPES = ((1.0, 1.0), (0.5, 1.0), (1.0, 0.6))  # (alpha1, alpha2) / max alpha
ORDERS = (1, 2, 3)


def _rel(approx, ref):
    return abs(approx - ref.value) / abs(ref.value) if abs(ref.value) > ref.err_estimate else math.nan


def sweep_point(zeta, kappa, eps):
    amax = kappa * zeta / (2 * math.pi)
    sw = Gaussian(zeta)
    worst = {k: [0.0, 0.0] for k in ORDERS}
    for dw, (f1, f2), dx in itertools.product((1.0, -1.0), SHAPES, (0.3, 2.0)):
        g = DetectorGeometry(f1 * amax, f2 * amax, dx)
        q11 = rate_numeric(lambda s: individual.f11_gaussian_quad(dw, s, eps, g.alpha1), sw)
        q21 = rate_numeric(lambda s: crossed.f21_gaussian_quad(dw, s, g, eps), sw)
        for k in ORDERS:
            a11 = rate_numeric(lambda s: individual.f11_gaussian_asymptotic(dw, s, eps, g.alpha1, order=k), sw)
            a21 = rate_numeric(lambda s: crossed.f21_gaussian_asymptotic(dw, s, g, eps, order=k), sw)
            for i, e in enumerate((_rel(a11.value, q11), _rel(a21.value, q21))):
                if not math.isnan(e):
                    worst[k][i] = max(worst[k][i], e)
    return worst


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--eps", type=float, default=0.03)
    args = ap.parse_args()
    print(f"{'zeta':>6} {'kappa':>6} " + " ".join(f"{'R11 o' + str(k):>9} {'R21 o' + str(k):>9}" for k in ORDERS))
    for zeta, kappa in itertools.product((12.6, 20.0, 30.0), (0.25, 0.5, 1.0)):
        w = sweep_point(zeta, kappa, args.eps)
        print(f"{zeta:6.1f} {kappa:6.2f} " + " ".join(f"{w[k][0]:9.1e} {w[k][1]:9.1e}" for k in ORDERS))


if __name__ == "__main__":
    main()
