"""Transition rates, the total two-detector rate and the mean life."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import crossed, individual
from .kinematics import DetectorGeometry
from .profiles import Gaussian, Method, ResponseResult, Sharp, with_duration


ASYMPTOTIC_ORDER = 2
PLANCK_SMOOTHING_RATIO = 4.0 * math.pi


class NonPositiveRate(ValueError):
    """Total rate <= 0: the mean life is undefined."""


@dataclass(frozen=True)
class RateBundle:
    r11: float
    r22: float
    r12: complex
    err_estimate: float = 0.0


def rate_numeric(response, sw, rel_step: float = 1e-4) -> ResponseResult:
    """Central difference of response(sw) in the effective duration, centre fixed.

    `response` maps a switching profile to a ResponseResult.
    """
    d = sw.effective_duration
    h = rel_step * d
    hi = response(with_duration(sw, d + h))
    lo = response(with_duration(sw, d - h))
    val = (hi.value - lo.value) / (2 * h)
    err = (hi.err_estimate + lo.err_estimate) / (2 * h) + 1e-8 * abs(val)
    return ResponseResult(val, err, hi.method, hi.flags)


def r11_asymptotic(dw, alpha1: float):
    """Infinite-time rate |dw|/(2 pi) x (1 + Planck) for decay, Planck for excitation."""
    return individual.thermal_spectrum(dw, 0.0, alpha1)


def r21_asymptotic_equal_acc(dw: float, alpha: float, phi_value: float, switching: str = "sharp") -> float:
    """sin(|dw| alpha phi)/(c pi alpha sinh phi) x {1 + Planck | Planck}, c = 2 sharp, 4 Gaussian."""
    c = {"sharp": 2.0, "gaussian": 4.0}[switching]
    x = 2 * math.pi * alpha * dw
    if dw == 0.0:
        ratio = phi_value / (2 * math.pi)
    elif x > 700:
        return 0.0
    else:
        ratio = math.sin(dw * alpha * phi_value) / math.expm1(x)
    return ratio / (c * math.pi * alpha * math.sinh(phi_value))


def total_rate(bundle: RateBundle, mu: float = 1.0) -> float:
    return 0.5 * mu * mu * (bundle.r11 + bundle.r22 + 2.0 * complex(bundle.r12).real)


def interference_factor(x):
    """f(x) = 2 (1 + sin x / x), f(0) = 4."""
    x = np.asarray(x, dtype=float)
    out = 2.0 * (1.0 + np.sinc(x / np.pi))
    return float(out) if out.ndim == 0 else out


def mean_life(bundle: RateBundle, mu: float = 1.0) -> float:
    total = total_rate(bundle, mu)
    if not total > 0:
        raise NonPositiveRate(f"total rate {total!r} is not positive")
    return 1.0 / total


def scaled_mean_life(bundle: RateBundle, dw: float) -> float:
    """mu^2 |dw| tau / 2, independent of the coupling."""
    return abs(dw) * mean_life(bundle, mu=1.0) / 2.0


def use_asymptotic(sw: Gaussian, eps: float, dw: float, g: DetectorGeometry) -> bool:
    """Whether the large-width expansion is trusted at this point.

    Besides zeta >= 10 eps the frequency smearing 1/zeta has to be narrow
    against |dw| and against the decay scale 1/(2 pi alpha) of the Planck
    factor: the expansion runs in powers of 2 pi alpha / zeta, and at
    2 pi alpha / zeta <= 1/2 the second-order rate is within ~2e-3.
    """
    z = sw.zeta
    return (z >= individual.ADVISORY_RATIO * eps and abs(dw) * z >= 10.0
            and z >= PLANCK_SMOOTHING_RATIO * max(g.alpha1, g.alpha2))


def _gaussian_responses(dw: float, sw: Gaussian, g: DetectorGeometry, eps: float):
    """Transition-probability callables of the switching profile, and the route used.

    The expansion is taken to second order: at the edge of the trusted
    region first order is off by about 1% in the rate, second order by at
    most ~2e-3.
    """
    r = g.ratio
    if use_asymptotic(sw, eps, dw, g):
        return (lambda s: individual.f11_gaussian_asymptotic(dw, s, eps, g.alpha1, order=ASYMPTOTIC_ORDER),
                lambda s: individual.f11_gaussian_asymptotic(r * dw, s, eps, g.alpha1, order=ASYMPTOTIC_ORDER),
                lambda s: crossed.f21_gaussian_asymptotic(dw, s, g, eps, order=ASYMPTOTIC_ORDER),
                Method.ASYMPTOTIC)
    return (lambda s: individual.f11_gaussian_quad(dw, s, eps, g.alpha1),
            lambda s: individual.f11_gaussian_quad(r * dw, s, eps, g.alpha1),
            lambda s: crossed.f21_gaussian_quad(dw, s, g, eps),
            Method.QUADRATURE)


def crossed_rate(dw: float, sw, g: DetectorGeometry, eps: float) -> ResponseResult:
    """R21 alone (R12 is its conjugate)."""
    if isinstance(sw, Sharp):
        return crossed.r21_sharp_rate(dw, sw, g, eps)
    if isinstance(sw, Gaussian):
        _, _, f21, method = _gaussian_responses(dw, sw, g, eps)
        res = rate_numeric(f21, sw)
        return ResponseResult(res.value, res.err_estimate, method, res.flags)
    raise TypeError(f"unsupported switching {sw!r}")


def rate_bundle(dw: float, sw, g: DetectorGeometry, eps: float) -> tuple[RateBundle, Method]:
    """R11, R22 and R12 = conj(R21) for one geometry, choosing the evaluation route.

    Sharp: closed-form rates. Gaussian: derivative of the large-width
    expansion where `use_asymptotic` allows it, of the quadrature otherwise.
    """
    if isinstance(sw, Sharp):
        dt = sw.duration
        r11 = individual.r11_sharp_rate(dw, dt, eps, g.alpha1)
        r22 = individual.r11_sharp_rate(g.ratio * dw, dt, eps, g.alpha1)
        r21 = crossed.r21_sharp_rate(dw, sw, g, eps)
        method = r21.method
    elif isinstance(sw, Gaussian):
        f11, f22, f21, method = _gaussian_responses(dw, sw, g, eps)
        r11 = rate_numeric(f11, sw)
        r22 = rate_numeric(f22, sw)
        r21 = rate_numeric(f21, sw)
    else:
        raise TypeError(f"unsupported switching {sw!r}")
    err = r11.err_estimate + r22.err_estimate + 2 * r21.err_estimate
    bundle = RateBundle(float(np.real(r11.value)), float(np.real(r22.value)),
                        complex(r21.value).conjugate(), err)
    return bundle, method
