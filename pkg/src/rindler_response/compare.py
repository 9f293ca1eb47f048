"""Closed-form versus brute-force comparison for a single parameter point."""

from __future__ import annotations

from dataclasses import dataclass

from . import crossed, individual
from .individual import ADVISORY_RATIO
from .kinematics import DetectorGeometry
from .oracle import response_1d, response_2d
from .profiles import QuadratureControl, Sharp

TOLERANCE = {"F11": 1e-6, "F22": 1e-6, "F21": 1e-4, "F12": 1e-4}
ADVISORY_TOLERANCE = 1e-2


@dataclass(frozen=True)
class Comparison:
    component: str
    closed_form: complex
    oracle: complex
    rel_error: float
    tolerance: float
    status: str  # PASS, FAIL or INCONCLUSIVE
    advisory: bool
    method: str

    def report(self) -> str:
        lines = [
            f"component     {self.component}",
            f"method        {self.method}",
            f"closed form   {self.closed_form:.17g}",
            f"oracle        {self.oracle:.17g}",
            f"rel. error    {self.rel_error:.3e}",
            f"tolerance     {self.tolerance:.0e}" + (" (advisory-domain, relaxed)" if self.advisory else ""),
            f"result        {self.status}",
        ]
        return "\n".join(lines)


def _closed_form(component: str, dw: float, sw, g: DetectorGeometry, eps: float):
    sharp = isinstance(sw, Sharp)
    if component == "F11":
        return individual.f11_sharp(dw, sw, eps, g.alpha1) if sharp else \
            individual.f11_gaussian_quad(dw, sw, eps, g.alpha1)
    if component == "F22":
        return individual.f22_sharp(dw, sw, eps, g) if sharp else \
            individual.f11_gaussian_quad(g.ratio * dw, sw, eps, g.alpha1)
    if component == "F21":
        return crossed.f21_sharp(dw, sw, g, eps) if sharp else crossed.f21_gaussian_quad(dw, sw, g, eps)
    if component == "F12":
        return crossed.f12_sharp(dw, sw, g, eps) if sharp else crossed.f12_gaussian_quad(dw, sw, g, eps)
    raise ValueError(f"unknown component {component!r}; use F11, F22, F21 or F12")


def compare(component: str, dw: float, sw, g: DetectorGeometry, eps: float,
            use_2d: bool | None = None) -> Comparison:
    """Evaluate `component` both ways.

    The crossed sharp components are checked against the nested 2-D
    quadrature, everything else against the 1-D reduced integral unless
    use_2d says otherwise. Oracle non-convergence gives INCONCLUSIVE.
    """
    res = _closed_form(component, dw, sw, g, eps)
    if use_2d is None:
        use_2d = component in ("F21", "F12") and isinstance(sw, Sharp)
    oracle_fn = response_2d if use_2d else response_1d
    orc = oracle_fn(component[1:], dw, sw, g, eps, QuadratureControl(rel_tol=1e-10, abs_tol=1e-15))
    cf = complex(res.value)
    ov = complex(orc.value)
    rel = abs(cf - ov) / abs(ov) if ov != 0 else abs(cf)
    advisory = sw.effective_duration < ADVISORY_RATIO * eps
    tol = ADVISORY_TOLERANCE if advisory else TOLERANCE[component]
    if not orc.converged:
        status = "INCONCLUSIVE"
    else:
        status = "PASS" if rel <= tol else "FAIL"
    return Comparison(component, cf, ov, rel, tol, status, advisory, res.method.value)
