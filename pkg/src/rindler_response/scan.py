"""Point evaluation and (alpha1, alpha2) grid scans in dimensionless units.

All lengths are measured in units of 1/|dw|, so the gap itself is +1
(excitation) or -1 (decay) and the configuration holds the products
dw*dt, dw*eps, dw*|dx|, dw*zeta and dw*(window centre).
"""

from __future__ import annotations

import enum
import io
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import crossed, individual, rates
from .kinematics import DetectorGeometry
from .profiles import Gaussian, Method, Sharp

ALPHA_RANGE = (0.1, 2 * math.pi)
CSV_HEADER = ("alpha1", "alpha2", "value", "err_estimate", "method", "flags")


class Quantity(str, enum.Enum):
    F11 = "F11"
    F22 = "F22"
    RE_F21 = "ReF21"
    RE_R12 = "ReR12"
    RE_R21 = "ReR21"
    TOTAL_RATE = "TotalRate"
    MEAN_LIFE = "MeanLife"


@dataclass(frozen=True)
class PointConfig:
    """Fixed dimensionless groups of a scan or single evaluation.

    direction 'auto' means decay for MeanLife (the entangled state decays
    to the ground state) and excitation for everything else.
    """

    quantity: Quantity = Quantity.RE_R21
    switching: str = "sharp"
    dw_dt: float | None = None
    dw_eps: float = 0.03
    dw_dx: float = 0.3
    dw_zeta: float | None = None
    t_center: float = 0.0
    direction: str = "auto"

    def __post_init__(self):
        object.__setattr__(self, "quantity", Quantity(self.quantity))
        if self.switching not in ("sharp", "gaussian"):
            raise ValueError(f"switching must be 'sharp' or 'gaussian', got {self.switching!r}")
        if self.direction not in ("auto", "excitation", "decay"):
            raise ValueError(f"direction must be auto, excitation or decay, got {self.direction!r}")
        if self.switching == "sharp" and self.dw_dt is None:
            raise ValueError("sharp switching needs dw_dt")
        if self.switching == "gaussian" and self.dw_zeta is None:
            raise ValueError("gaussian switching needs dw_zeta")
        if not self.dw_eps > 0:
            raise ValueError("dw_eps must be positive")

    @property
    def gap(self) -> float:
        if self.direction == "auto":
            return -1.0 if self.quantity is Quantity.MEAN_LIFE else 1.0
        return 1.0 if self.direction == "excitation" else -1.0

    def window(self):
        if self.switching == "sharp":
            return Sharp(self.dw_dt, self.t_center)
        return Gaussian(self.dw_zeta, self.t_center)


@dataclass(frozen=True)
class GridAxis:
    lo: float
    hi: float
    steps: int

    def __post_init__(self):
        if self.steps < 2:
            raise ValueError("a grid axis needs at least 2 steps")
        if not (0 < self.lo < self.hi):
            raise ValueError(f"grid range must satisfy 0 < lo < hi, got {self.lo}, {self.hi}")

    def values(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.steps)

    @classmethod
    def parse(cls, text: str) -> "GridAxis":
        """'N' (default range) or 'lo:hi:N'."""
        parts = text.split(":")
        if len(parts) == 1:
            return cls(*ALPHA_RANGE, int(parts[0]))
        if len(parts) == 3:
            return cls(float(parts[0]), float(parts[1]), int(parts[2]))
        raise ValueError(f"grid axis must be 'N' or 'lo:hi:N', got {text!r}")


@dataclass(frozen=True)
class PointResult:
    alpha1: float
    alpha2: float
    value: float | None
    err_estimate: float | None
    method: str
    flags: tuple[str, ...] = ()
    error: str | None = None


def _gaussian_f(dw, sw, g, eps, which):
    """Transition probability with the same route choice as the rates."""
    if rates.use_asymptotic(sw, eps, dw, g):
        order = rates.ASYMPTOTIC_ORDER
        if which == "21":
            return crossed.f21_gaussian_asymptotic(dw, sw, g, eps, order=order)
        w = dw if which == "11" else g.ratio * dw
        return individual.f11_gaussian_asymptotic(w, sw, eps, g.alpha1, order=order)
    if which == "21":
        return crossed.f21_gaussian_quad(dw, sw, g, eps)
    w = dw if which == "11" else g.ratio * dw
    return individual.f11_gaussian_quad(w, sw, eps, g.alpha1)


def _flags(cfg: PointConfig, sw) -> tuple[str, ...]:
    if sw.effective_duration < individual.ADVISORY_RATIO * cfg.dw_eps:
        return ("advisory-domain",)
    return ()


def evaluate(cfg: PointConfig, alpha1: float, alpha2: float) -> tuple[float, float, Method, tuple[str, ...]]:
    """Value, error estimate, method and flags of cfg.quantity at one geometry.

    Raises on invalid input or a non-positive total rate.
    """
    g = DetectorGeometry(alpha1, alpha2, cfg.dw_dx)
    dw, eps, sw = cfg.gap, cfg.dw_eps, cfg.window()
    flags = _flags(cfg, sw)
    q = cfg.quantity
    sharp = isinstance(sw, Sharp)
    if q in (Quantity.F11, Quantity.F22, Quantity.RE_F21):
        if sharp:
            if q is Quantity.F11:
                res = individual.f11_sharp(dw, sw, eps, alpha1)
            elif q is Quantity.F22:
                res = individual.f22_sharp(dw, sw, eps, g)
            else:
                res = crossed.f21_sharp(dw, sw, g, eps)
        else:
            res = _gaussian_f(dw, sw, g, eps, {Quantity.F11: "11", Quantity.F22: "22"}.get(q, "21"))
        return float(np.real(res.value)), res.err_estimate, res.method, flags
    if q in (Quantity.RE_R12, Quantity.RE_R21):
        res = rates.crossed_rate(dw, sw, g, eps)
        return float(np.real(res.value)), res.err_estimate, res.method, flags
    bundle, method = rates.rate_bundle(dw, sw, g, eps)
    if q is Quantity.TOTAL_RATE:
        return rates.total_rate(bundle), 0.5 * bundle.err_estimate, method, flags
    total = rates.total_rate(bundle)
    life = rates.scaled_mean_life(bundle, dw)
    # relative error of the total carries over to the mean life
    err = life * 0.5 * bundle.err_estimate / abs(total) if total else math.inf
    return life, err, method, flags


def error_code(exc: BaseException) -> str:
    if isinstance(exc, rates.NonPositiveRate):
        return "non-positive-rate"
    if isinstance(exc, (ValueError, ArithmeticError)):
        return "domain"
    return type(exc).__name__


def evaluate_point(cfg: PointConfig, alpha1: float, alpha2: float) -> PointResult:
    """Like `evaluate`, but failures are recorded in the result instead of raised."""
    try:
        value, err, method, flags = evaluate(cfg, alpha1, alpha2)
    except Exception as exc:  # per-point failures must not abort a scan
        return PointResult(alpha1, alpha2, None, None, "", (), f"{error_code(exc)}: {exc}")
    return PointResult(alpha1, alpha2, value, err, method.value, flags)


def _fmt(x: float) -> str:
    return format(x, ".17g")


def format_row(res: PointResult) -> str:
    a = f"{_fmt(res.alpha1)},{_fmt(res.alpha2)}"
    if res.error is not None:
        code = res.error.split(":", 1)[0]
        return f"{a},ERR:{code},{code},,"
    return f"{a},{_fmt(res.value)},{_fmt(res.err_estimate)},{res.method},{';'.join(res.flags)}"


def grid_points(axis1: GridAxis, axis2: GridAxis) -> list[tuple[float, float]]:
    """Row-major order: alpha1 outer, alpha2 inner."""
    return [(float(a1), float(a2)) for a1 in axis1.values() for a2 in axis2.values()]


def _eval_star(args):
    return evaluate_point(*args)


def run_scan(cfg: PointConfig, axis1: GridAxis, axis2: GridAxis, jobs: int = 1,
             progress=None) -> list[PointResult]:
    """Evaluate the grid; results come back in grid order whatever the worker count."""
    pts = grid_points(axis1, axis2)
    tasks = [(cfg, a1, a2) for a1, a2 in pts]
    out = []
    if jobs <= 1:
        it = map(_eval_star, tasks)
        for i, r in enumerate(it, 1):
            out.append(r)
            if progress:
                progress(i, len(tasks))
        return out
    chunk = max(1, len(tasks) // (8 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for i, r in enumerate(pool.map(_eval_star, tasks, chunksize=chunk), 1):
            out.append(r)
            if progress:
                progress(i, len(tasks))
    return out


def write_csv(results, stream) -> None:
    stream.write(",".join(CSV_HEADER) + "\n")
    for r in results:
        stream.write(format_row(r) + "\n")


def csv_text(results) -> str:
    buf = io.StringIO()
    write_csv(results, buf)
    return buf.getvalue()


def stderr_progress(label: str = "scan"):
    step = [0]

    def report(done: int, total: int):
        pct = 100 * done // total
        if pct >= step[0] or done == total:
            print(f"{label}: {done}/{total} points", file=sys.stderr)
            step[0] = pct + 10

    return report

