"""Crossed (interference) transition amplitude F21 between the two detectors.

With k = dw (alpha2 - alpha1)/(2 alpha1), r = alpha2/alpha1 and
I_eps(sigma) = int_0^dt exp(-i sigma dw psi) G0(psi, eps) d psi, sharp
switching on [T - dt/2, T + dt/2] gives

    F21 = -i/(16 pi^2 alpha1 dw a_-) { exp(-i k (dt + 2T)) [I_eps(1) + I_-eps(-r)]
                                      - exp(+i k (dt - 2T)) [I_-eps(-1) + I_eps(r)] }.

Each I is a half-line integral H (closed form below) minus a tail that
decays like exp(-psi/alpha1). The half-line integral follows from the
partial fractions G0 = (2/sinh phi)[1/(e^{(psi-b1)/alpha1} - 1) - 1/(e^{(psi-b2)/alpha1} - 1)],
b1,2 = +-alpha1 phi + 2 i alpha1 delta, delta = 4 eps/(alpha1 + alpha2); the
contour is turned onto the imaginary axis, which leaves a Lerch series
plus the residues of the poles that were crossed.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from . import specfun
from .individual import ADVISORY_RATIO, even_derivative
from .kinematics import DetectorGeometry, phi
from .profiles import Gaussian, Method, QuadratureControl, ResponseResult, Sharp
from .wightman import cross_shift, g_cross0, physical_eps

FOUR_PI_SQ = 4.0 * math.pi**2
EQUAL_ACC_THRESHOLD = 1e-6


# ---------------------------------------------------------------------------
# half-line transform of a single shifted Bose factor

def _bose_halfline(b: complex, lam: float, beta: float, moment: bool = False) -> complex:
    """int_0^inf exp(-i lam psi) / (exp((psi - b)/beta) - 1) d psi  (moment=False)
    or its lam-derivative (moment=True). Requires lam != 0, Re b != 0."""
    if lam == 0.0:
        raise ValueError("half-line transform needs a nonzero frequency")
    q_log = -b / beta
    inner = q_log.real < 0  # |q| < 1
    # contour part: Lerch series on the rotated ray
    if inner:
        q = cmath.exp(q_log)
        a = -1j * lam * beta
        line = beta * specfun.lerch_phi1(q, a)
        dline = 1j * beta**2 * specfun.lerch_phi1_dpole(q, a) if moment else 0j
    else:
        p = cmath.exp(-q_log)
        a = 1j * lam * beta
        line = beta * (specfun.lerch_phi1(p, a) - 1.0 / a)
        dline = -1j * beta**2 * (specfun.lerch_phi1_dpole(p, a) - 1.0 / a**2) if moment else 0j
    # residues (each equal to beta) of the poles b + 2 pi i beta n swept by the rotation
    pole = 0j
    dpole = 0j
    if b.real > 0:
        step = 2 * math.pi * beta
        if lam > 0:
            # poles in the lower half plane: Im b + step n < 0
            n_edge = math.floor(-b.imag / step)
            if b.imag + step * n_edge >= 0:
                n_edge -= 1
            x = step * lam
            pole = (-2j * math.pi * beta * cmath.exp(-1j * lam * b + x * (n_edge + 1))
                    / math.expm1(x))
            if moment:
                dpole = pole * (-1j * b + step * n_edge - step / math.expm1(x))
        else:
            n_edge = math.ceil(-b.imag / step)
            if b.imag + step * n_edge <= 0:
                n_edge += 1
            x = -step * lam
            pole = (2j * math.pi * beta * cmath.exp(-1j * lam * b - x * (n_edge - 1))
                    / math.expm1(x))
            if moment:
                dpole = pole * (-1j * b + step * n_edge + step / math.expm1(x))
    if moment:
        return dpole + dline
    return pole + line


def half_line_integral(dw: float, sigma: float, g: DetectorGeometry, eps: float,
                       moment: bool = False) -> complex:
    """H = int_0^inf exp(-i sigma dw psi) G0(psi, eps) d psi, eps of either sign.

    With moment=True returns int_0^inf psi exp(-i sigma dw psi) G0 d psi.
    """
    ph = phi(g)
    if ph == 0.0:
        raise ValueError("coincident worldlines")
    beta = g.alpha1
    delta = cross_shift(g, eps)
    lam = sigma * dw
    b1 = complex(beta * ph, 2 * beta * delta)
    b2 = complex(-beta * ph, 2 * beta * delta)
    diff = _bose_halfline(b1, lam, beta, moment) - _bose_halfline(b2, lam, beta, moment)
    val = 2.0 / math.sinh(ph) * diff
    # d/dlam of the transform is -i times the first moment
    return 1j * val if moment else val


def _series_tail(lam: float, x: float, b: complex, beta: float, moment: bool) -> complex:
    """int_x^inf exp(-i lam psi) [psi] / (exp((psi - b)/beta) - 1), for Re(x - b) >~ 3 beta."""
    m = np.arange(1, 80, dtype=float)
    c = m / beta + 1j * lam
    with np.errstate(under="ignore"):
        e = np.exp(m * b / beta - c * x)
    if moment:
        return complex(np.sum(e * (x / c + 1 / c**2)))
    return complex(np.sum(e / c))


def half_line_tail(dw: float, sigma: float, dt: float, g: DetectorGeometry, eps: float,
                   ctl: QuadratureControl | None = None, moment: bool = False) -> tuple[complex, float]:
    """int_dt^inf exp(-i sigma dw psi) [psi] G0(psi, eps) d psi, with error estimate.

    Quadrature runs to where the Bose factors admit a fast geometric
    expansion; beyond that point the remainder is summed exactly.
    """
    ctl = ctl or QuadratureControl(rel_tol=1e-10, abs_tol=1e-15)
    ph = phi(g)
    beta = g.alpha1
    lam = sigma * dw
    x = max(dt, beta * (ph + 3.0))
    val = 0j
    err = 0.0
    if x > dt:
        if moment:
            f = lambda p: p * cmath.exp(-1j * lam * p) * g_cross0(p, g, eps, ph)
        else:
            f = lambda p: cmath.exp(-1j * lam * p) * g_cross0(p, g, eps, ph)
        peak = beta * ph
        pts = [p for p in (peak - 5 * beta * abs(cross_shift(g, eps)), peak,
                           peak + 5 * beta * abs(cross_shift(g, eps))) if dt < p < x]
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", integrate.IntegrationWarning)
            val, err = integrate.quad(f, dt, x, complex_func=True, points=pts or None,
                                      epsabs=ctl.abs_tol, epsrel=ctl.rel_tol,
                                      limit=ctl.max_subdivisions)
    delta = cross_shift(g, eps)
    b1 = complex(beta * ph, 2 * beta * delta)
    b2 = complex(-beta * ph, 2 * beta * delta)
    rest = _series_tail(lam, x, b1, beta, moment) - _series_tail(lam, x, b2, beta, moment)
    return val + 2.0 / math.sinh(ph) * rest, abs(err)


def windowed_integral(dw, sigma, dt, g, eps, ctl=None, moment=False) -> tuple[complex, float]:
    """I = int_0^dt exp(-i sigma dw psi) [psi] G0(psi, eps) d psi."""
    tail, err = half_line_tail(dw, sigma, dt, g, eps, ctl, moment)
    return half_line_integral(dw, sigma, g, eps, moment) - tail, err


# ---------------------------------------------------------------------------
# assembly through the tail-free amplitude A and the tail correction

@dataclass(frozen=True)
class CrossClosedFormParts:
    """Building blocks of the sharp crossed amplitude.

    amplitude and amplitude_swapped are the dt-independent half-line
    combinations for (alpha1, alpha2) and with the roles exchanged;
    tail is the finite-window correction; k the phase rate in dw a_-/(2 alpha1).
    """

    amplitude: complex
    amplitude_swapped: complex
    tail: complex
    tail_err: float
    k: float
    prefactor: float


def script_a(dw: float, g: DetectorGeometry, eps: float, swap: bool = False) -> complex:
    """-i sinh(phi)/(4 alpha1) [H_eps(1) + H_-eps(-alpha2/alpha1)] (roles exchanged if swap)."""
    if swap:
        g = g.swapped()
    r = g.ratio
    h = half_line_integral(dw, 1.0, g, eps) + half_line_integral(dw, -r, g, -eps)
    return -1j * math.sinh(phi(g)) / (4 * g.alpha1) * h


def script_i_tail(dw: float, dt: float, g: DetectorGeometry, eps: float,
                  ctl: QuadratureControl | None = None) -> tuple[complex, float]:
    """+i sinh(phi)/(4 alpha1) [tail_eps(1) + tail_-eps(-alpha2/alpha1)] beyond dt."""
    t1, e1 = half_line_tail(dw, 1.0, dt, g, eps, ctl)
    t2, e2 = half_line_tail(dw, -g.ratio, dt, g, -eps, ctl)
    c = math.sinh(phi(g)) / (4 * g.alpha1)
    return 1j * c * (t1 + t2), c * (e1 + e2)


def closed_form_parts(dw: float, dt: float, g: DetectorGeometry, eps: float,
                      ctl: QuadratureControl | None = None) -> CrossClosedFormParts:
    a_minus = g.a_minus
    if a_minus == 0.0:
        raise ValueError("equal accelerations: use f21_sharp_equal_acc")
    tail, terr = script_i_tail(dw, dt, g, eps, ctl)
    return CrossClosedFormParts(
        amplitude=script_a(dw, g, eps),
        amplitude_swapped=script_a(dw, g, eps, swap=True),
        tail=tail,
        tail_err=terr,
        k=dw * a_minus / (2 * g.alpha1),
        prefactor=1.0 / (FOUR_PI_SQ * math.sinh(phi(g)) * dw * a_minus),
    )


def _phases(parts: CrossClosedFormParts, sw: Sharp) -> tuple[float, float]:
    return parts.k * (sw.duration + 2 * sw.center), parts.k * (sw.duration - 2 * sw.center)


def _route_equal(g: DetectorGeometry) -> bool:
    return abs(g.a_minus) < EQUAL_ACC_THRESHOLD * g.a_plus


def _check_inputs(dw, g):
    if dw == 0.0:
        raise ValueError("crossed response needs a nonzero energy gap")
    if phi(g) == 0.0:
        raise ValueError("coincident worldlines")


def f21_sharp(dw: float, sw: Sharp, g: DetectorGeometry, reg,
              ctl: QuadratureControl | None = None) -> ResponseResult:
    """Complex crossed response for sharp switching."""
    eps = physical_eps(reg)
    _check_inputs(dw, g)
    flags = ("advisory-domain",) if sw.duration < ADVISORY_RATIO * eps else ()
    if _route_equal(g):
        res = f21_sharp_equal_acc(dw, sw, 0.5 * g.a_plus, phi(g), eps, ctl)
        return ResponseResult(res.value, res.err_estimate, Method.LIMIT, flags)
    p = closed_form_parts(dw, sw.duration, g, eps, ctl)
    th1, th2 = _phases(p, sw)
    bracket = p.amplitude + p.tail
    bracket_conj = -p.amplitude_swapped + p.tail.conjugate()
    value = p.prefactor * (cmath.exp(-1j * th1) * bracket + cmath.exp(1j * th2) * bracket_conj)
    err = 2 * abs(p.prefactor) * p.tail_err + 1e-13 * abs(value)
    return ResponseResult(value, err, Method.CLOSED_FORM, flags)


def re_f21_sharp(dw: float, sw: Sharp, g: DetectorGeometry, reg,
                 ctl: QuadratureControl | None = None) -> float:
    """Real part of F21 assembled with explicit cosines and sines."""
    eps = physical_eps(reg)
    _check_inputs(dw, g)
    if _route_equal(g):
        return f21_sharp_equal_acc(dw, sw, 0.5 * g.a_plus, phi(g), eps, ctl).value.real
    p = closed_form_parts(dw, sw.duration, g, eps, ctl)
    th1, th2 = _phases(p, sw)
    b = p.amplitude + p.tail
    bc = -p.amplitude_swapped + p.tail.conjugate()
    return p.prefactor * (math.cos(th1) * b.real + math.sin(th1) * b.imag
                          + math.cos(th2) * bc.real - math.sin(th2) * bc.imag)


def f12_sharp(dw: float, sw: Sharp, g: DetectorGeometry, reg,
              ctl: QuadratureControl | None = None) -> ResponseResult:
    """F12 from its own windowed integrals (no conjugation of F21)."""
    eps = physical_eps(reg)
    _check_inputs(dw, g)
    if _route_equal(g):
        res = f21_sharp_equal_acc(dw, sw, 0.5 * g.a_plus, phi(g), eps, ctl)
        return ResponseResult(res.value.conjugate(), res.err_estimate, Method.LIMIT, res.flags)
    r = g.ratio
    dt = sw.duration
    ia, ea = windowed_integral(dw, -1.0, dt, g, -eps, ctl)
    ib, eb = windowed_integral(dw, r, dt, g, eps, ctl)
    ic, ec = windowed_integral(dw, 1.0, dt, g, eps, ctl)
    id_, ed = windowed_integral(dw, -r, dt, g, -eps, ctl)
    k = dw * g.a_minus / (2 * g.alpha1)
    th1, th2 = k * (dt + 2 * sw.center), k * (dt - 2 * sw.center)
    pref = 1j / (FOUR_PI_SQ * 4 * g.alpha1 * dw * g.a_minus)
    value = pref * (cmath.exp(1j * th1) * (ia + ib) - cmath.exp(-1j * th2) * (ic + id_))
    return ResponseResult(value, abs(pref) * (ea + eb + ec + ed) + 1e-13 * abs(value),
                          Method.CLOSED_FORM)


def f21_sharp_equal_acc(dw: float, sw: Sharp, alpha: float, phi_value: float, reg,
                        ctl: QuadratureControl | None = None) -> ResponseResult:
    """alpha2 -> alpha1 limit of F21 at fixed phi.

    Expanding both phase factors and the rescaled frequency to first order
    in a_- cancels the 1/a_- prefactor and leaves
    -1/(16 pi^2 alpha^2) [dt (I_eps(1) + I_-eps(-1)) - (M_eps(1) + M_-eps(-1))],
    with M the first psi-moment of the windowed integral.
    """
    eps = physical_eps(reg)
    g = DetectorGeometry(alpha, alpha, 2 * alpha * math.sinh(phi_value / 2))
    _check_inputs(dw, g)
    dt = sw.duration
    i1, e1 = windowed_integral(dw, 1.0, dt, g, eps, ctl)
    i2, e2 = windowed_integral(dw, -1.0, dt, g, -eps, ctl)
    m1, e3 = windowed_integral(dw, 1.0, dt, g, eps, ctl, moment=True)
    m2, e4 = windowed_integral(dw, -1.0, dt, g, -eps, ctl, moment=True)
    pref = -1.0 / (FOUR_PI_SQ * 4 * alpha * alpha)
    value = pref * (dt * (i1 + i2) - (m1 + m2))
    flags = ("advisory-domain",) if dt < ADVISORY_RATIO * eps else ()
    return ResponseResult(value, abs(pref) * (dt * (e1 + e2) + e3 + e4) + 1e-13 * abs(value),
                          Method.LIMIT, flags)


def r21_sharp_rate(dw: float, sw: Sharp, g: DetectorGeometry, reg,
                   ctl: QuadratureControl | None = None) -> ResponseResult:
    """d F21 / d dt at fixed window centre."""
    eps = physical_eps(reg)
    _check_inputs(dw, g)
    if _route_equal(g):
        return _r21_equal_acc(dw, sw, 0.5 * g.a_plus, phi(g), eps, ctl)
    p = closed_form_parts(dw, sw.duration, g, eps, ctl)
    th1, th2 = _phases(p, sw)
    dt = sw.duration
    c = math.sinh(phi(g)) / (4 * g.alpha1)
    d_tail = -1j * c * (cmath.exp(-1j * dw * dt) * complex(g_cross0(dt, g, eps))
                        + cmath.exp(1j * g.ratio * dw * dt) * complex(g_cross0(dt, g, -eps)))
    b = p.amplitude + p.tail
    bc = -p.amplitude_swapped + p.tail.conjugate()
    value = p.prefactor * (cmath.exp(-1j * th1) * (-1j * p.k * b + d_tail)
                           + cmath.exp(1j * th2) * (1j * p.k * bc + d_tail.conjugate()))
    return ResponseResult(value, 2 * abs(p.prefactor * p.k) * p.tail_err + 1e-12 * abs(value),
                          Method.CLOSED_FORM)


def _r21_equal_acc(dw, sw, alpha, phi_value, eps, ctl=None) -> ResponseResult:
    # d/d dt of the limit form: the moment terms cancel the boundary terms
    g = DetectorGeometry(alpha, alpha, 2 * alpha * math.sinh(phi_value / 2))
    dt = sw.duration
    i1, e1 = windowed_integral(dw, 1.0, dt, g, eps, ctl)
    i2, e2 = windowed_integral(dw, -1.0, dt, g, -eps, ctl)
    pref = -1.0 / (FOUR_PI_SQ * 4 * alpha * alpha)
    value = pref * (i1 + i2)
    return ResponseResult(value, abs(pref) * (e1 + e2) + 1e-13 * abs(value), Method.LIMIT)


# ---------------------------------------------------------------------------
# Gaussian switching

def _gaussian_envelope(dw: float, sw: Gaussian, g: DetectorGeometry) -> complex:
    """exp(-k^2 zeta^2/2 - 2 i k tau_c): centre-of-mass integral of the two windows."""
    k = dw * g.a_minus / (2 * g.alpha1)
    return cmath.exp(-0.5 * (k * sw.zeta) ** 2 - 2j * k * sw.center)


def _gaussian_prefactor(sw: Gaussian, g: DetectorGeometry) -> float:
    return -math.sqrt(2 * math.pi) * sw.zeta / (8 * FOUR_PI_SQ * g.alpha1**2)


def _gaussian_psi_integral(dw, sw, g, eps, ctl) -> tuple[float, float]:
    """int exp(-i Lambda psi) exp(-psi^2/(2 zeta^2)) G0(psi, eps) d psi, Lambda = a_+ dw/(2 alpha1).

    G0(-psi, eps) is the conjugate of G0(psi, eps), so the integral is real.
    """
    lam = dw * g.a_plus / (2 * g.alpha1)
    z = sw.zeta
    hi = 8.0 * z
    ph = phi(g)
    f = lambda p: (np.exp(-1j * lam * p) * g_cross0(p, g, eps)).real * math.exp(-p * p / (2 * z * z))
    peak = g.alpha1 * ph
    w = 5 * g.alpha1 * cross_shift(g, eps)
    pts = sorted({x for x in (peak - w, peak, peak + w) if 0 < x < hi})
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        val, err = integrate.quad(f, 0.0, hi, points=pts or None, epsabs=ctl.abs_tol,
                                  epsrel=ctl.rel_tol, limit=ctl.max_subdivisions)
    return 2 * val, 2 * err


def f21_gaussian_quad(dw: float, sw: Gaussian, g: DetectorGeometry, reg,
                      ctl: QuadratureControl | None = None) -> ResponseResult:
    eps = physical_eps(reg)
    _check_inputs(dw, g)
    ctl = ctl or QuadratureControl(rel_tol=1e-10, abs_tol=1e-16)
    integral, err = _gaussian_psi_integral(dw, sw, g, eps, ctl)
    pref = _gaussian_prefactor(sw, g) * _gaussian_envelope(dw, sw, g)
    flags = ("advisory-domain",) if sw.effective_duration < ADVISORY_RATIO * eps else ()
    return ResponseResult(pref * integral, abs(pref) * err, Method.QUADRATURE, flags)


def f12_gaussian_quad(dw: float, sw: Gaussian, g: DetectorGeometry, reg,
                      ctl: QuadratureControl | None = None) -> ResponseResult:
    """Same psi integral, centre-of-mass phase reversed."""
    eps = physical_eps(reg)
    _check_inputs(dw, g)
    ctl = ctl or QuadratureControl(rel_tol=1e-10, abs_tol=1e-16)
    integral, err = _gaussian_psi_integral(dw, sw, g, eps, ctl)
    pref = _gaussian_prefactor(sw, g) * cmath.exp(
        -0.5 * (dw * g.a_minus * sw.zeta / (2 * g.alpha1)) ** 2
        + 1j * dw * g.a_minus * sw.center / g.alpha1)
    return ResponseResult(pref * integral, abs(pref) * err, Method.QUADRATURE)


def cross_spectrum(lam, g: DetectorGeometry, eps: float):
    """Full-line transform int exp(-i lam psi) G0(psi, eps) d psi (closed form).

    -8 pi alpha1 exp(2 lam alpha1 delta) sin(lam alpha1 phi) / (sinh(phi) (exp(2 pi alpha1 lam) - 1)),
    one analytic expression for both signs of lam.
    """
    ph = phi(g)
    a1 = g.alpha1
    delta = cross_shift(g, eps)
    x = 2 * math.pi * a1 * lam
    if lam == 0.0:
        ratio = a1 * ph / (2 * math.pi * a1)
    elif x > 700:
        return 0.0
    else:
        ratio = math.sin(lam * a1 * ph) / math.expm1(x)
    return -8 * math.pi * a1 * math.exp(2 * lam * a1 * delta) * ratio / math.sinh(ph)


def f21_gaussian_asymptotic(dw: float, sw: Gaussian, g: DetectorGeometry, reg,
                            order: int = 1) -> ResponseResult:
    """Large-width form: the psi integral becomes exp(D^2/(2 zeta^2)) acting on the
    full-line transform, D = d/dLambda."""
    from .individual import gaussian_smoothing

    eps = physical_eps(reg)
    _check_inputs(dw, g)
    if sw.zeta < ADVISORY_RATIO * eps:
        raise ValueError(f"asymptotic Gaussian form needs zeta >= {ADVISORY_RATIO} eps")
    lam = dw * g.a_plus / (2 * g.alpha1)
    spec = lambda x: cross_spectrum(x, g, eps)
    scale = max(abs(lam), 1.0) / max(1.0, g.alpha1)
    integral = gaussian_smoothing(spec, lam, sw.zeta, order, scale)
    nxt = even_derivative(spec, lam, 2 * order + 2, 10.0 ** (order - 3) * scale)
    err_int = abs(nxt) / ((2 * sw.zeta**2) ** (order + 1) * math.factorial(order + 1))
    pref = _gaussian_prefactor(sw, g) * _gaussian_envelope(dw, sw, g)
    return ResponseResult(pref * integral, abs(pref) * err_int, Method.ASYMPTOTIC)


def f21_gaussian_small_width(dw: float, sw: Gaussian, g: DetectorGeometry, reg) -> ResponseResult:
    """zeta << eps: zeta^2 exp(-i tau_c a_- dw/alpha1) / (8 pi alpha1^2 (cosh phi - cos(8 eps/a_+)))."""
    eps = physical_eps(reg)
    z = sw.zeta
    ph = phi(g)
    den = math.cosh(ph) - math.cos(8 * eps / g.a_plus)
    val = z * z * cmath.exp(-1j * sw.center * g.a_minus * dw / g.alpha1) / (8 * math.pi * g.alpha1**2 * den)
    return ResponseResult(val, abs(val) * (z / eps) ** 2, Method.ASYMPTOTIC)
