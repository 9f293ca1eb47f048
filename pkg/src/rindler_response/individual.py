"""Transition probability of a single accelerated detector.

For sharp switching over a window of length dt the response is split as

    F11 = dt/(2 pi^2) [thermal + P1 + Re J1] + 1/(2 pi^2) [P2 + Re J2]

where thermal is the stationary (infinite-time) part, P1 and P2 are the
elementary integrals of the flat-space double pole (psi - 2 i eps)^-2, and
J1, J2 are the remainders after that pole is subtracted from the
accelerated kernel. For Gaussian switching there is a direct quadrature
and a large-width expansion in even derivatives of the thermal part.
"""

from __future__ import annotations

import math
import warnings

import numpy as np
from scipy import integrate

from . import specfun
from .profiles import Gaussian, Method, QuadratureControl, ResponseResult, Sharp
from .wightman import csch2, csch2_minus_inv_sq, g11_plus, physical_eps

TWO_PI_SQ = 2.0 * math.pi**2
ADVISORY_RATIO = 10.0


def _advisory_flags(duration: float, eps: float) -> tuple[str, ...]:
    return ("advisory-domain",) if duration < ADVISORY_RATIO * eps else ()


def thermal_term(dw, eps: float, alpha1: float):
    """pi dw exp(2 eps dw) / (exp(2 pi alpha1 dw) - 1), smooth through dw = 0.

    For dw < 0 this is pi |dw| exp(-2 eps |dw|) (1 + Planck factor), so one
    expression covers both excitation and de-excitation.
    """
    w = np.asarray(dw, dtype=float)
    x = 2.0 * math.pi * alpha1 * w
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        ratio = np.where(w == 0.0, 1.0 / (2.0 * math.pi * alpha1), w / np.expm1(x))
        # past overflow the Planck tail is zero
        ratio = np.where(x > 700.0, 0.0, ratio)
    out = math.pi * ratio * np.exp(2.0 * eps * w)
    return float(out) if out.ndim == 0 else out


def thermal_spectrum(dw, eps: float, alpha1: float):
    """Full-line Fourier transform of the kernel, dw exp(2 eps dw)/(2 pi (exp(2 pi alpha1 dw) - 1))."""
    return thermal_term(dw, eps, alpha1) / TWO_PI_SQ


def p1_term(dw: float, dt: float, eps: float) -> float:
    """Re int_dt^inf exp(-i dw psi) (psi - 2 i eps)^-2 d psi, in sine/cosine integrals."""
    rational = (dt * math.cos(dw * dt) + 2 * eps * math.sin(dw * dt)) / (dt * dt + 4 * eps * eps)
    if dw == 0.0:
        return rational
    aw = abs(dw)
    z = aw * complex(dt, -2 * eps)
    growth = aw * math.exp(2 * eps * dw)
    si = specfun.sine_integral(z)
    ci = specfun.cosine_integral(z)
    return rational - math.pi * growth / 2 + growth * (si + 1j * math.copysign(1.0, dw) * ci).real


def flat_tail(dw: float, x: float, eps: float) -> complex:
    """int_x^inf exp(-i dw psi) (psi - 2 i eps)^-2 d psi (complex)."""
    c = complex(x, -2 * eps)
    val = complex(math.cos(dw * x), -math.sin(dw * x)) / c
    if dw != 0.0:
        val -= 1j * dw * math.exp(2 * eps * dw) * specfun.exp_integral_e1(1j * dw * c)
    return val


def p2_term(dw: float, dt: float, eps: float) -> float:
    """Re int_0^dt psi exp(-i dw psi) (psi - 2 i eps)^-2 d psi via exponential integrals."""
    d2 = dt * dt + 4 * eps * eps
    rational = -(d2 - 4 * eps * eps * math.cos(dw * dt) + 2 * dt * eps * math.sin(dw * dt)) / d2
    if dw == 0.0:
        return 0.5 * math.log(d2 / (4 * eps * eps)) - dt * dt / d2
    pref = math.exp(2 * dw * eps) * (2 * dw * eps + 1) / 2
    ei = (specfun.exp_integral_ei(complex(-2 * eps, dt) * dw)
          + specfun.exp_integral_ei(-complex(2 * eps, dt) * dw)
          - 2 * specfun.exp_integral_ei(-2 * eps * dw))
    return rational + (pref * ei).real


def _subtracted_kernel(psi, eps: float, alpha1: float):
    """(1/2 alpha)^2 csch^2((psi - 2 i eps)/(2 alpha)) - (psi - 2 i eps)^-2."""
    if np.ndim(psi) == 0:
        u = complex(psi, -2 * eps) / (2 * alpha1)
    else:
        u = (np.asarray(psi) - 2j * eps) / (2 * alpha1)
    return csch2_minus_inv_sq(u) / (4 * alpha1 * alpha1)


def _osc_quad(f, lo: float, hi: float, dw: float, ctl: QuadratureControl,
              real_only: bool = False) -> tuple[complex, float]:
    """int_lo^hi exp(-i dw psi) f(psi) for complex f, via weighted QUADPACK rules.

    With real_only the imaginary part is skipped (returned as 0).
    """
    if hi <= lo:
        return 0j, 0.0
    kw = dict(epsabs=ctl.abs_tol, epsrel=ctl.rel_tol, limit=ctl.max_subdivisions)
    re = lambda p: f(p).real
    im = lambda p: f(p).imag
    if dw == 0.0:
        a, ea = integrate.quad(re, lo, hi, **kw)
        if real_only:
            return complex(a), ea
        b, eb = integrate.quad(im, lo, hi, **kw)
        return complex(a, b), ea + eb
    # exp(-i w p) (R + i I) = (R cos + I sin) + i (I cos - R sin)
    a, ea = integrate.quad(re, lo, hi, weight="cos", wvar=dw, **kw)
    b, eb = integrate.quad(im, lo, hi, weight="sin", wvar=dw, **kw)
    if real_only:
        return complex(a + b), ea + eb
    c, ec = integrate.quad(im, lo, hi, weight="cos", wvar=dw, **kw)
    d, ed = integrate.quad(re, lo, hi, weight="sin", wvar=dw, **kw)
    return complex(a + b, c - d), ea + eb + ec + ed


def _csch2_tail(dw: float, x: float, eps: float, alpha1: float, n_terms: int = 60) -> complex:
    """int_x^inf exp(-i dw psi) (1/2 alpha)^2 csch^2((psi - 2 i eps)/(2 alpha)) for x >> alpha."""
    m = np.arange(1, n_terms + 1, dtype=float)
    rate = m / alpha1 + 1j * dw
    with np.errstate(under="ignore"):
        terms = m * np.exp(2j * m * eps / alpha1 - rate * x) / rate
    return complex(np.sum(terms)) / alpha1**2


def j_tail(dw: float, dt: float, eps: float, alpha1: float,
           ctl: QuadratureControl | None = None, real_only: bool = False) -> tuple[complex, float]:
    """J1 = int_dt^inf exp(-i dw psi) S(psi), S the subtracted kernel.

    The csch^2 part decays like exp(-psi/alpha1) but the subtracted double
    pole only like psi^-2, so the integral is taken numerically up to
    dt + tail_cut alpha1 and the rest is added in closed form.
    """
    ctl = ctl or QuadratureControl()
    x = dt + ctl.tail_cut * alpha1
    val, err = _osc_quad(lambda p: _subtracted_kernel(p, eps, alpha1), dt, x, dw, ctl, real_only)
    rest = _csch2_tail(dw, x, eps, alpha1) - flat_tail(dw, x, eps)
    val += rest.real if real_only else rest
    return val, err


def j_window(dw: float, dt: float, eps: float, alpha1: float,
             ctl: QuadratureControl | None = None, real_only: bool = False) -> tuple[complex, float]:
    """J2 = int_0^dt psi exp(-i dw psi) S(psi)."""
    ctl = ctl or QuadratureControl()
    return _osc_quad(lambda p: p * _subtracted_kernel(p, eps, alpha1), 0.0, dt, dw, ctl, real_only)


def f11_sharp(dw: float, sw: Sharp, reg, alpha1: float,
              ctl: QuadratureControl | None = None) -> ResponseResult:
    """Transition probability of detector 1 for a sharp window (real)."""
    eps = physical_eps(reg)
    dt = sw.duration
    ctl = ctl or QuadratureControl()
    j1, e1 = j_tail(dw, dt, eps, alpha1, ctl, real_only=True)
    j2, e2 = j_window(dw, dt, eps, alpha1, ctl, real_only=True)
    stationary = thermal_term(dw, eps, alpha1) + p1_term(dw, dt, eps) + j1.real
    value = (dt * stationary + p2_term(dw, dt, eps) + j2.real) / TWO_PI_SQ
    err = (dt * e1 + e2) / TWO_PI_SQ + 1e-14 * abs(value)
    return ResponseResult(value, err, Method.CLOSED_FORM, _advisory_flags(dt, eps))


def f22_sharp(dw: float, sw: Sharp, reg, g, ctl: QuadratureControl | None = None) -> ResponseResult:
    """Detector 2 seen through tau_1: the gap rescales by alpha2/alpha1 and the
    Jacobian cancels the kernel prefactor."""
    return f11_sharp(g.ratio * dw, sw, reg, g.alpha1, ctl)


def r11_sharp_rate(dw: float, dt: float, reg, alpha1: float,
                   ctl: QuadratureControl | None = None) -> ResponseResult:
    """d F11 / d dt.

    The dt-derivatives of the P1/J1 and P2/J2 pieces cancel pairwise, so
    only the stationary bracket survives.
    """
    eps = physical_eps(reg)
    j1, e1 = j_tail(dw, dt, eps, alpha1, ctl, real_only=True)
    value = (thermal_term(dw, eps, alpha1) + p1_term(dw, dt, eps) + j1.real) / TWO_PI_SQ
    return ResponseResult(value, e1 / TWO_PI_SQ + 1e-14 * abs(value), Method.CLOSED_FORM,
                          _advisory_flags(dt, eps))


def f11_gaussian_quad(dw: float, sw: Gaussian, reg, alpha1: float,
                      ctl: QuadratureControl | None = None) -> ResponseResult:
    """(sqrt(2 pi) zeta / 2) int exp(-i dw psi) exp(-psi^2/(2 zeta^2)) G11(psi) d psi.

    The kernel is conjugate-symmetric in psi, so the integral is twice the
    real part over psi > 0 and the result is real by construction.
    """
    eps = physical_eps(reg)
    ctl = ctl or QuadratureControl(rel_tol=1e-10, abs_tol=1e-15)
    z = sw.zeta
    hi = 8.0 * z
    f = lambda p: (np.exp(-1j * dw * p) * g11_plus(p, alpha1, eps)).real * math.exp(-p * p / (2 * z * z))
    pts = sorted({x for x in (eps, 5 * eps, 25 * eps) if x < hi})
    with warnings.catch_warnings():
        # roundoff warnings here mean the abs_tol floor was hit, which is fine
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        val, err = integrate.quad(f, 0.0, hi, points=pts or None, epsabs=ctl.abs_tol,
                                  epsrel=ctl.rel_tol, limit=ctl.max_subdivisions)
    pref = math.sqrt(2 * math.pi) * z
    return ResponseResult(pref * val, pref * err, Method.QUADRATURE,
                          _advisory_flags(sw.effective_duration, eps))


def even_derivative(f, x: float, order: int, h: float) -> float:
    """Central difference of even order 2k of a scalar function (second-order accurate)."""
    m = order
    total = 0.0
    for j in range(m + 1):
        total += (-1) ** j * math.comb(m, j) * f(x + (m / 2 - j) * h)
    return total / h**m


def gaussian_smoothing(spectrum, x: float, zeta: float, order: int, scale: float) -> float:
    """sum_{k<=order} spectrum^(2k)(x) / ((2 zeta^2)^k k!), i.e. exp(D^2/(2 zeta^2)) truncated."""
    total = spectrum(x)
    for k in range(1, order + 1):
        h = 10.0 ** (k - 4) * scale
        total += even_derivative(spectrum, x, 2 * k, h) / ((2 * zeta * zeta) ** k * math.factorial(k))
    return total


def f11_gaussian_asymptotic(dw: float, sw: Gaussian, reg, alpha1: float, order: int = 1) -> ResponseResult:
    """Large-width expansion, valid for zeta >> eps.

    order 0 gives sqrt(2 pi) zeta / (4 pi) dw exp(2 eps dw)/(exp(2 pi alpha1 dw) - 1).
    """
    eps = physical_eps(reg)
    z = sw.zeta
    if z < ADVISORY_RATIO * eps:
        raise ValueError(f"asymptotic Gaussian form needs zeta >= {ADVISORY_RATIO} eps")
    spec = lambda w: float(thermal_spectrum(w, eps, alpha1))
    scale = max(abs(dw), 1.0) / max(1.0, alpha1)
    val = math.sqrt(2 * math.pi) * z / 2 * gaussian_smoothing(spec, dw, z, order, scale)
    # next omitted term as error proxy
    nxt = even_derivative(spec, dw, 2 * order + 2, 10.0 ** (order - 3) * scale)
    err = math.sqrt(2 * math.pi) * z / 2 * abs(nxt) / ((2 * z * z) ** (order + 1) * math.factorial(order + 1))
    return ResponseResult(val, err, Method.ASYMPTOTIC)


def f11_gaussian_small_width(dw: float, sw: Gaussian, reg, alpha1: float) -> ResponseResult:
    """Leading behaviour zeta^2 / (16 pi alpha1^2 sin^2(eps/alpha1)) for zeta << eps."""
    eps = physical_eps(reg)
    z = sw.zeta
    val = z * z / (16 * math.pi * alpha1**2 * math.sin(eps / alpha1) ** 2)
    return ResponseResult(val, 3 * z * z / (4 * eps * eps) * val, Method.ASYMPTOTIC)
