"""Worldlines of two uniformly accelerated detectors in one Rindler wedge.

Detector j follows t = alpha_j sinh(tau_j/alpha_j), z = alpha_j cosh(tau_j/alpha_j),
with transverse offset dx between the two. Proper times are synchronised
along the same Rindler time, so tau_2 = (alpha_2/alpha_1) tau_1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class DetectorGeometry:
    """Accelerations enter as alpha_j = 1/a_j (lengths), dx is the transverse offset."""

    alpha1: float
    alpha2: float
    dx: float

    def __post_init__(self):
        for name in ("alpha1", "alpha2"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive and finite, got {v!r}")
        if not math.isfinite(self.dx):
            raise ValueError(f"dx must be finite, got {self.dx!r}")

    @property
    def a_plus(self) -> float:
        return self.alpha1 + self.alpha2

    @property
    def a_minus(self) -> float:
        return self.alpha2 - self.alpha1

    @property
    def ratio(self) -> float:
        """alpha_2 / alpha_1, the proper-time rescaling of detector 2."""
        return self.alpha2 / self.alpha1

    def swapped(self) -> "DetectorGeometry":
        return DetectorGeometry(self.alpha2, self.alpha1, self.dx)


def cosh_phi(g: DetectorGeometry) -> float:
    """cosh of the rapidity-like separation between the two worldlines."""
    return 1.0 + ((g.alpha1 - g.alpha2) ** 2 + g.dx**2) / (2.0 * g.alpha1 * g.alpha2)


def phi(g: DetectorGeometry) -> float:
    """Separation parameter phi >= 0.

    Evaluated through asinh of sinh(phi/2) to keep relative accuracy when
    the worldlines nearly coincide.
    """
    half_sinh_sq = ((g.alpha1 - g.alpha2) ** 2 + g.dx**2) / (4.0 * g.alpha1 * g.alpha2)
    return 2.0 * math.asinh(math.sqrt(half_sinh_sq))


def sinh_phi(g: DetectorGeometry) -> float:
    p = phi(g)
    if p == 0.0:
        raise ValueError("coincident worldlines: sinh(phi) = 0")
    return math.sinh(p)


def tau2_of_tau1(tau1, g: DetectorGeometry):
    return np.asarray(tau1) * g.ratio if np.ndim(tau1) else tau1 * g.ratio


def worldline(tau, alpha: float, dx: float = 0.0):
    """Minkowski coordinates (t, x, z) of a detector at proper time tau."""
    tau = np.asarray(tau, dtype=float)
    t = alpha * np.sinh(tau / alpha)
    z = alpha * np.cosh(tau / alpha)
    return t, np.full_like(t, dx), z


def interval_squared(tau1, tau1p, g: DetectorGeometry):
    """Minkowski interval (t - t')^2 - |x - x'|^2 between detector 1 at tau1
    and detector 2 at tau_2(tau1p); equals 2 alpha1 alpha2 (cosh(dtau/alpha1) - cosh phi)."""
    t1, x1, z1 = worldline(tau1, g.alpha1)
    t2, x2, z2 = worldline(tau2_of_tau1(np.asarray(tau1p, dtype=float), g), g.alpha2, g.dx)
    return (t1 - t2) ** 2 - (x1 - x2) ** 2 - (z1 - z2) ** 2
