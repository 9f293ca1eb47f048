"""Regulated positive-frequency Wightman kernels along the two worldlines.

All kernels are functions of psi = tau_1 - tau_1', the difference of the
proper times of detector 1 (detector 2 is parametrised through tau_1).
They accept scalars or numpy arrays.
"""

from __future__ import annotations

import cmath

import numpy as np

from .kinematics import DetectorGeometry, phi
from .profiles import CutoffFlavor, Regulator

FOUR_PI_SQ = 4.0 * np.pi**2


class FlavorMismatch(ValueError):
    """Kernel called with a regulator of the wrong flavor."""


def physical_eps(reg) -> float:
    """Cutoff value of a physical regulator (plain floats pass through)."""
    if isinstance(reg, Regulator):
        if reg.flavor is not CutoffFlavor.PHYSICAL:
            raise FlavorMismatch("this kernel uses the physical cutoff")
        return reg.eps
    eps = float(reg)
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps!r}")
    return eps


def _csch2_scalar(u: complex) -> complex:
    if u.real < 0:
        u = -u
    e = cmath.exp(-2.0 * u) if u.real < 350 else 0j
    return 4.0 * e / (1.0 - e) ** 2


def csch2(u):
    """1/sinh(u)^2 for complex u, overflow safe for large |Re u|."""
    if np.ndim(u) == 0:
        return _csch2_scalar(complex(u))
    u = np.asarray(u, dtype=complex)
    v = np.where(u.real >= 0, u, -u)
    with np.errstate(under="ignore", over="ignore"):
        e = np.exp(-2.0 * v)
        return 4.0 * e / (1.0 - e) ** 2


def _csch2_taylor(w):
    # Laurent coefficients of csch^2 beyond the double pole, in w = u^2
    return -1 / 3 + w * (1 / 15 + w * (-2 / 189 + w * (1 / 675 + w * (-2 / 10395 + w * (1382 / 58046625)))))


def csch2_minus_inv_sq(u):
    """1/sinh(u)^2 - 1/u^2, with a Taylor branch near u = 0."""
    if np.ndim(u) == 0:
        u = complex(u)
        if abs(u) < 0.2:
            return _csch2_taylor(u * u)
        return _csch2_scalar(u) - 1.0 / (u * u)
    u = np.asarray(u, dtype=complex)
    small = np.abs(u) < 0.2
    out = np.empty_like(u)
    us = u[small]
    w = us * us
    out[small] = _csch2_taylor(w)
    ub = u[~small]
    out[~small] = csch2(ub) - 1.0 / (ub * ub)
    return out


def inv_sinh_product(a, b):
    """1/(sinh a sinh b), overflow safe."""
    if np.ndim(a) == 0 and np.ndim(b) == 0:
        a, b = complex(a), complex(b)
        if (a + b).real < 0:
            a, b = -a, -b
        if (a + b).real > 700:
            return 0j
        return 4.0 * cmath.exp(-(a + b)) / ((1.0 - cmath.exp(-2.0 * a)) * (1.0 - cmath.exp(-2.0 * b)))
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    flip = (a + b).real < 0
    a = np.where(flip, -a, a)
    b = np.where(flip, -b, b)
    with np.errstate(under="ignore", over="ignore"):
        return 4.0 * np.exp(-(a + b)) / ((1.0 - np.exp(-2.0 * a)) * (1.0 - np.exp(-2.0 * b)))


def g11_plus(psi, alpha1: float, reg):
    """-1 / (16 pi^2 alpha1^2 sinh^2(psi/(2 alpha1) - i eps/alpha1))."""
    eps = physical_eps(reg)
    u = (np.asarray(psi) - 2j * eps) / (2.0 * alpha1)
    return -csch2(u) / (4.0 * FOUR_PI_SQ * alpha1**2)


def g11_plus_series(psi, alpha1: float, reg, n_terms: int = 10_000, tail_correction: bool = True):
    """Image-sum form -(1/4 pi^2) sum_n (psi - 2 i eps + 2 pi i alpha1 n)^-2, |n| <= n_terms.

    With tail_correction the omitted |n| > n_terms terms are added through
    the asymptotic expansion of the Hurwitz zeta function zeta(2, x).
    """
    eps = physical_eps(reg)
    c = np.asarray(psi, dtype=complex)[..., None] - 2j * eps
    b = 2.0 * np.pi * alpha1
    n = np.arange(-n_terms, n_terms + 1, dtype=float)
    total = np.sum(1.0 / (c + 1j * b * n) ** 2, axis=-1)
    if tail_correction:
        c0 = c[..., 0]
        x_plus = n_terms + 1 - 1j * c0 / b
        x_minus = n_terms + 1 + 1j * c0 / b
        total = total - (_hurwitz2_asym(x_plus) + _hurwitz2_asym(x_minus)) / b**2
    return -total / FOUR_PI_SQ


def _hurwitz2_asym(x):
    # zeta(2, x) for large |x|
    return 1 / x + 1 / (2 * x**2) + 1 / (6 * x**3) - 1 / (30 * x**5) + 1 / (42 * x**7)


def g22_plus(psi, g: DetectorGeometry, reg):
    """Kernel of detector 2 expressed through tau_1 differences."""
    return (g.alpha1 / g.alpha2) ** 2 * g11_plus(psi, g.alpha1, reg)


def g11_plus_mathematical(tau, tau_p, alpha1: float, reg):
    """Kernel with the cutoff t - t' -> t - t' - i eps' inserted in Minkowski time."""
    if not (isinstance(reg, Regulator) and reg.flavor is CutoffFlavor.MATHEMATICAL):
        raise FlavorMismatch("the Minkowski-time kernel needs a mathematical regulator")
    ep = reg.eps
    tau = np.asarray(tau, dtype=float)
    tau_p = np.asarray(tau_p, dtype=float)
    s = np.sinh((tau - tau_p) / (2 * alpha1))
    ch = np.cosh((tau + tau_p) / (2 * alpha1))
    den = -4 * alpha1**2 * s * (s - 1j * (ep / alpha1) * ch) + ep**2
    return 1.0 / (FOUR_PI_SQ * den)


def cross_shift(g: DetectorGeometry, eps: float) -> float:
    """Imaginary shift 4 eps / (alpha1 + alpha2) of the crossed kernel."""
    return 4.0 * eps / g.a_plus


def g_cross0(psi, g: DetectorGeometry, eps: float, phi_value: float | None = None):
    """1 / (sinh(s + phi/2) sinh(s - phi/2)) with s = psi/(2 alpha1) - 4 i eps/(alpha1+alpha2).

    eps may carry either sign; the two signs give the two orderings of the
    detectors' field operators.
    """
    ph = phi(g) if phi_value is None else phi_value
    if np.ndim(psi) == 0:
        s = complex(psi / (2.0 * g.alpha1), -cross_shift(g, eps))
        return inv_sinh_product(s + ph / 2, s - ph / 2)
    s = np.asarray(psi) / (2.0 * g.alpha1) - 1j * cross_shift(g, eps)
    return inv_sinh_product(s + ph / 2, s - ph / 2)


def g_cross(psi, g: DetectorGeometry, reg):
    """Crossed kernel <phi(x_1(tau_1)) phi(x_2(tau_2(tau_1')))> with psi = tau_1 - tau_1'."""
    eps = physical_eps(reg)
    return -g_cross0(psi, g, eps) / (FOUR_PI_SQ * 4.0 * g.alpha1 * g.alpha2)
