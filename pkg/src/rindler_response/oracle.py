"""Brute-force quadrature of the defining response integrals.

This module deliberately shares nothing with the closed-form paths except
the kernels themselves. It carries its own vectorised adaptive
Gauss-Kronrod (7/15) integrator; the 2-D integrals are nested.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .kinematics import DetectorGeometry, phi
from .profiles import Gaussian, QuadratureControl, Sharp
from .wightman import g11_plus, g22_plus, g_cross, g_cross0

_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])
# full symmetric node set on [-1, 1]
_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_WK = np.concatenate([_WGK[:-1], _WGK[::-1]])
_WGAUSS = np.zeros(15)
# Gauss nodes are the odd-indexed Kronrod nodes (1, 3, 5, 7 from each end)
for i, w in zip((1, 3, 5), _WG[:3]):
    _WGAUSS[i] = w
    _WGAUSS[14 - i] = w
_WGAUSS[7] = _WG[3]


@dataclass(frozen=True)
class OracleResult:
    value: complex
    err_estimate: float
    converged: bool
    evaluations: int = 0


def _gk_panels(f, lo, hi):
    """Kronrod values and error estimates on an array of panels."""
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    x = mid[:, None] + half[:, None] * _NODES[None, :]
    y = np.asarray(f(x.ravel()), dtype=complex).reshape(x.shape)
    k = half * (y @ _WK)
    g = half * (y @ _WGAUSS)
    return k, np.abs(k - g)


def adaptive_quad(f, breakpoints, rel_tol=1e-10, abs_tol=1e-14, max_panels=20000) -> OracleResult:
    """Globally adaptive G7K15 over consecutive breakpoints.

    f is called with a 1-D float array and must return values of the same
    length. Panels are bisected until the summed error estimate meets
    max(abs_tol, rel_tol |I|).
    """
    pts = np.unique(np.asarray(breakpoints, dtype=float))
    lo, hi = pts[:-1], pts[1:]
    vals, errs = _gk_panels(f, lo, hi)
    nevals = 15 * lo.size
    while True:
        total = vals.sum()
        err = errs.sum()
        tol = max(abs_tol, rel_tol * abs(total))
        if err <= tol:
            return OracleResult(complex(total), float(err), True, nevals)
        if lo.size >= max_panels:
            return OracleResult(complex(total), float(err), False, nevals)
        # bisect every panel carrying more than its share of the budget,
        # and always the worst tenth
        share = tol * (hi - lo) / (pts[-1] - pts[0])
        bad = errs > share
        order = np.argsort(errs)[::-1]
        bad[order[: max(1, lo.size // 10)]] = True
        mid = 0.5 * (lo[bad] + hi[bad])
        new_lo = np.concatenate([lo[bad], mid])
        new_hi = np.concatenate([mid, hi[bad]])
        nv, ne = _gk_panels(f, new_lo, new_hi)
        nevals += 15 * new_lo.size
        keep = ~bad
        lo = np.concatenate([lo[keep], new_lo])
        hi = np.concatenate([hi[keep], new_hi])
        vals = np.concatenate([vals[keep], nv])
        errs = np.concatenate([errs[keep], ne])


def _oscillation_points(lo, hi, freq, extra=()):
    """Breakpoints at the half-periods of exp(-i freq x) plus features."""
    pts = [lo, hi]
    if freq != 0:
        step = math.pi / abs(freq)
        n = int((hi - lo) / step)
        if n < 20000:
            pts.extend(lo + step * np.arange(1, n + 1))
    pts.extend(p for p in extra if lo < p < hi)
    return np.array(sorted(pts))


def _component_setup(component: str, dw: float, g: DetectorGeometry, eps: float):
    """Kernel of psi = tau1 - tau1', overall factor, and phase frequencies (outer, inner).

    The phase is exp(-i (f_out tau1 - f_in tau1')).
    """
    r = g.ratio
    if component == "11":
        return (lambda p: g11_plus(p, g.alpha1, eps)), 1.0, dw, dw
    if component == "22":
        return (lambda p: g22_plus(p, g, eps)), r * r, r * dw, r * dw
    if component == "21":
        return (lambda p: g_cross(p, g, eps)), r, r * dw, dw
    if component == "12":
        return (lambda p: g_cross(p, g, eps)), r, dw, r * dw
    raise ValueError(f"unknown component {component!r}")


def _kernel_features(component: str, g: DetectorGeometry, eps: float):
    if component in ("11", "22"):
        return (0.0,), eps
    d = g.alpha1 * phi(g)
    return (-d, 0.0, d), 8.0 * eps * g.alpha1 / g.a_plus


def response_2d(component: str, dw: float, sw, g: DetectorGeometry, eps: float,
                ctl: QuadratureControl | None = None) -> OracleResult:
    """F_ij by nested quadrature over (tau1, tau1'), both windows written in tau1."""
    ctl = ctl or QuadratureControl(rel_tol=1e-10)
    kernel, factor, f_out, f_in = _component_setup(component, dw, g, eps)
    features, width = _kernel_features(component, g, eps)
    if isinstance(sw, Sharp):
        lo, hi = sw.tau0, sw.tauf
        window = lambda t: np.ones_like(t)
    elif isinstance(sw, Gaussian):
        lo, hi = sw.center - 8 * sw.zeta, sw.center + 8 * sw.zeta
        window = lambda t: np.exp(-((t - sw.center) / sw.zeta) ** 2)
    else:
        raise TypeError(f"unsupported switching {sw!r}")

    ok = [True]
    inner_rel = ctl.rel_tol * 1e-2

    def inner(t1):
        # resolve the near-singular kernel features around tau1' = tau1 - feature
        extra = []
        for c in features:
            p = t1 - c
            extra.extend([p - 50 * width, p - 5 * width, p, p + 5 * width, p + 50 * width])
        pts = _oscillation_points(lo, hi, f_in, extra)
        res = adaptive_quad(lambda tp: window(tp) * np.exp(1j * f_in * tp) * kernel(t1 - tp),
                            pts, rel_tol=inner_rel, abs_tol=ctl.abs_tol * 1e-2,
                            max_panels=ctl.max_subdivisions)
        ok[0] &= res.converged
        return res.value

    def outer(t1_arr):
        vals = np.array([inner(t) for t in t1_arr])
        return window(t1_arr) * np.exp(-1j * f_out * t1_arr) * vals

    # the inner integral has kinks where a kernel feature meets a window edge
    edges = []
    for c in features:
        for e in (lo, hi):
            p = e + c
            edges.extend([p - 5 * width, p, p + 5 * width])
    pts = _oscillation_points(lo, hi, f_out, edges)
    res = adaptive_quad(outer, pts, rel_tol=ctl.rel_tol, abs_tol=ctl.abs_tol,
                        max_panels=ctl.max_subdivisions)
    return OracleResult(factor * res.value, abs(factor) * res.err_estimate,
                        res.converged and ok[0], res.evaluations)


def response_1d(component: str, dw: float, sw, g: DetectorGeometry, eps: float,
                ctl: QuadratureControl | None = None) -> OracleResult:
    """F_ij after integrating out the centre-of-mass time analytically.

    With psi = tau1 - tau1' and eta = tau1 + tau1', the eta integral of the
    window product and the residual phase has an elementary form.
    """
    ctl = ctl or QuadratureControl(rel_tol=1e-10)
    kernel, factor, f_out, f_in = _component_setup(component, dw, g, eps)
    features, width = _kernel_features(component, g, eps)
    # phase f_out tau1 - f_in tau1' = (f_out + f_in) psi / 2 + (f_out - f_in) eta / 2
    lam = 0.5 * (f_out + f_in)
    kap = 0.5 * (f_out - f_in)
    if isinstance(sw, Sharp):
        L = sw.duration
        lo, hi = -L, L

        def eta_weight(p):
            # (1/2) int_{|psi| + 2 tau0}^{2 tauf - |psi|} exp(-i kap eta) d eta
            a = np.abs(p) + 2 * sw.tau0
            b = 2 * sw.tauf - np.abs(p)
            if kap == 0:
                return 0.5 * (b - a)
            return 0.5 * (np.exp(-1j * kap * a) - np.exp(-1j * kap * b)) / (1j * kap)
    elif isinstance(sw, Gaussian):
        z = sw.zeta
        lo, hi = -12 * z, 12 * z

        def eta_weight(p):
            # (1/2) int exp(-(psi^2 + (eta - 2c)^2) / (2 zeta^2)) exp(-i kap eta) d eta
            return 0.5 * math.sqrt(2 * math.pi) * z * np.exp(
                -p * p / (2 * z * z) - 2j * kap * sw.center - 0.5 * (kap * z) ** 2)
    else:
        raise TypeError(f"unsupported switching {sw!r}")

    extra = []
    for c in features:
        extra.extend([c - 50 * width, c - 5 * width, c, c + 5 * width, c + 50 * width])
    pts = _oscillation_points(lo, hi, lam, extra)
    res = adaptive_quad(lambda p: eta_weight(p) * np.exp(-1j * lam * p) * kernel(p), pts,
                        rel_tol=ctl.rel_tol, abs_tol=ctl.abs_tol, max_panels=ctl.max_subdivisions)
    return OracleResult(factor * res.value, abs(factor) * res.err_estimate, res.converged,
                        res.evaluations)


def halfline_bruteforce(dw: float, sigma: float, g: DetectorGeometry, eps: float,
                        ctl: QuadratureControl | None = None, lower: float = 0.0) -> OracleResult:
    """int_lower^inf exp(-i sigma dw psi) G0(psi, eps) d psi, truncated where
    the kernel has decayed by exp(-tail_cut)."""
    ctl = ctl or QuadratureControl(rel_tol=1e-10)
    ph = phi(g)
    hi = lower + (ctl.tail_cut + ph) * g.alpha1 * 2
    width = 8.0 * abs(eps) * g.alpha1 / g.a_plus
    d = g.alpha1 * ph
    extra = [d - 50 * width, d - 5 * width, d, d + 5 * width, d + 50 * width]
    lam = sigma * dw
    pts = _oscillation_points(lower, hi, lam, extra)
    res = adaptive_quad(lambda p: np.exp(-1j * lam * p) * g_cross0(p, g, eps), pts,
                        rel_tol=ctl.rel_tol, abs_tol=ctl.abs_tol, max_panels=ctl.max_subdivisions)
    return res
