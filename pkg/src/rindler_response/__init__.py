"""Transition probabilities and rates of two uniformly accelerated detectors
coupled to a massless scalar field, with brute-force quadrature checks."""

from .kinematics import DetectorGeometry, phi
from .profiles import CutoffFlavor, Gaussian, Method, QuadratureControl, Regulator, ResponseResult, Sharp
from .individual import f11_sharp, f22_sharp, r11_sharp_rate
from .crossed import f12_sharp, f21_sharp, r21_sharp_rate
from .rates import RateBundle, mean_life, rate_bundle, scaled_mean_life, total_rate

__all__ = [
    "CutoffFlavor", "DetectorGeometry", "Gaussian", "Method", "QuadratureControl", "RateBundle",
    "Regulator", "ResponseResult", "Sharp", "f11_sharp", "f12_sharp", "f21_sharp", "f22_sharp",
    "mean_life", "phi", "r11_sharp_rate", "r21_sharp_rate", "rate_bundle", "scaled_mean_life",
    "total_rate",
]
