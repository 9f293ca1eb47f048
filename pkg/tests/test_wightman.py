import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rindler_response.kinematics import DetectorGeometry, phi
from rindler_response.profiles import CutoffFlavor, Regulator
from rindler_response.wightman import (FlavorMismatch, csch2, csch2_minus_inv_sq, g11_plus,
                                       g11_plus_mathematical, g11_plus_series, g22_plus, g_cross,
                                       g_cross0, inv_sinh_product)

MATH = CutoffFlavor.MATHEMATICAL


def test_g11_at_zero():
    a, eps = 1.3, 0.03
    expected = 1 / (16 * math.pi**2 * a * a * math.sin(eps / a) ** 2)
    assert g11_plus(0.0, a, eps) == pytest.approx(expected, rel=1e-13)


def test_g11_reflection():
    v = g11_plus(0.7, 1.0, 0.03)
    assert abs(g11_plus(-0.7, 1.0, 0.03) - np.conj(v)) < 1e-14 * abs(v)


def test_regulator_flavors():
    with pytest.raises(FlavorMismatch):
        g11_plus(0.3, 1.0, Regulator(0.03, MATH))
    with pytest.raises(FlavorMismatch):
        g11_plus_mathematical(0.1, 0.0, 1.0, Regulator(0.03))
    with pytest.raises(ValueError):
        Regulator(0.0)
    with pytest.raises(ValueError):
        g11_plus(0.3, 1.0, -0.01)


def test_series_examples():
    v = g11_plus(0.5, 1.0, 0.05)
    assert abs(g11_plus_series(0.5, 1.0, 0.05, n_terms=200) - v) < 1e-8 * abs(v)
    # the n = 0 image dominates near psi = 0, not at large psi where the
    # full kernel decays like exp(-psi/alpha) and the lone image like psi^-2
    lone = lambda psi: -1 / (4 * math.pi**2 * complex(psi, -0.06) ** 2)
    near = abs(lone(0.01) / g11_plus(0.01, 1.0, 0.03) - 1)
    mid = abs(lone(1.0) / g11_plus(1.0, 1.0, 0.03) - 1)
    far = abs(lone(10.0) / g11_plus(10.0, 1.0, 0.03))
    assert near < 1e-3 < mid and far > 1e2
    s = g11_plus_series(0.8, 1.0, 0.03, n_terms=50, tail_correction=False)
    s_neg = g11_plus_series(-0.8, 1.0, 0.03, n_terms=50, tail_correction=False)
    assert abs(s_neg - np.conj(s)) < 1e-15 * abs(s)


@pytest.mark.parametrize("alpha", [0.1, 1.0, 10.0])
def test_series_matches_closed_form_on_interval(alpha):
    psi = np.linspace(-10, 10, 201)
    diff = np.abs(g11_plus_series(psi, alpha, 0.03, n_terms=500) - g11_plus(psi, alpha, 0.03))
    assert diff.max() <= 1e-9


def test_series_periodicity_in_imaginary_time():
    # the image sum is invariant under psi -> psi + 2 pi i alpha (shift of n)
    alpha, psi = 0.8, 0.4
    c = psi - 0.06j
    n = np.arange(-4000, 4001)
    base = np.sum(1 / (c + 2j * np.pi * alpha * n) ** 2)
    shifted = np.sum(1 / (c + 2j * np.pi * alpha * (n + 1)) ** 2)
    assert abs(base - shifted) < 1e-6 * abs(base)


def test_mathematical_cutoff():
    # tau + tau' = 0: pure function of psi, close to the physical kernel at eps' = 2 eps
    eps = 0.01
    m = g11_plus_mathematical(0.15, -0.15, 1.0, Regulator(2 * eps, MATH))
    p = g11_plus(0.3, 1.0, eps)
    assert abs(m - p) / abs(p) < 1e-2
    # eps' -> 0 at psi != 0
    m0 = g11_plus_mathematical(0.15, -0.15, 1.0, Regulator(1e-12, MATH))
    expected = -1 / (16 * math.pi**2 * math.sinh(0.15) ** 2)
    assert m0 == pytest.approx(expected, rel=1e-9)
    # not stationary
    a = g11_plus_mathematical(1.0, 0.5, 1.0, Regulator(0.1, MATH))
    b = g11_plus_mathematical(0.25, -0.25, 1.0, Regulator(0.1, MATH))
    assert abs(a - b) > 1e-3 * abs(b)


def test_cross_kernel_reduces_to_individual():
    # phi -> 0 with alpha1 = alpha2: the crossed kernel is g11 with eps -> 2 eps
    a, eps, psi = 1.2, 0.03, 0.4
    g = DetectorGeometry(a, a, 1e-7)
    assert g_cross(psi, g, eps) == pytest.approx(g11_plus(psi, a, 2 * eps), rel=1e-8)


def test_cross_kernel_peaks_near_light_cone():
    g = DetectorGeometry(1.0, 1.5, 0.3)
    d = g.alpha1 * phi(g)
    psi = np.linspace(0.5 * d, 1.5 * d, 2001)
    mag = np.abs(g_cross(psi, g, 1e-3))
    assert abs(psi[np.argmax(mag)] - d) < 2e-3


def test_g22_scaling():
    g = DetectorGeometry(1.0, 1.7, 0.2)
    assert g22_plus(0.2, g, 0.03) == pytest.approx((1 / 1.7) ** 2 * g11_plus(0.2, 1.0, 0.03), rel=1e-15)
    same = DetectorGeometry(1.0, 1.0, 0.2)
    assert g22_plus(0.2, same, 0.03) == g11_plus(0.2, 1.0, 0.03)


def test_overflow_safety():
    assert csch2(800.0) == 0
    assert inv_sinh_product(400 + 0.1j, 400 - 0.2j) == 0
    arr = csch2(np.array([800.0, -800.0, 1.0]))
    assert np.all(np.isfinite(arr))


@settings(max_examples=100, deadline=None)
@given(st.floats(-30, 30), st.floats(0.05, 10), st.floats(1e-4, 0.5))
def test_kernel_reflection(psi, alpha, eps):
    v = g11_plus(psi, alpha, eps)
    assert abs(g11_plus(-psi, alpha, eps) - np.conj(v)) <= 1e-13 * abs(v)
    g = DetectorGeometry(alpha, 1.3 * alpha, 0.2)
    c = g_cross(psi, g, eps)
    assert abs(g_cross(-psi, g, eps) - np.conj(c)) <= 1e-12 * abs(c)
    # G0(psi, -eps) is the conjugate too
    c0 = g_cross0(psi, g, eps)
    assert abs(g_cross0(psi, g, -eps) - np.conj(c0)) <= 1e-12 * abs(c0)


@settings(max_examples=100, deadline=None)
@given(st.floats(-3, 3), st.floats(-3, 3))
def test_scalar_and_array_paths_agree(x, y):
    u = complex(x, y)
    if abs(u) < 1e-3:
        return
    assert abs(csch2_minus_inv_sq(u) - csch2_minus_inv_sq(np.array([u]))[0]) <= 1e-14 * max(1, abs(csch2(u)))
    assert abs(inv_sinh_product(u, u + 0.3) - inv_sinh_product(np.array([u]), np.array([u + 0.3]))[0]) \
        <= 1e-13 * abs(inv_sinh_product(u, u + 0.3))


@settings(max_examples=100, deadline=None)
@given(st.floats(-0.3, 0.3), st.floats(-0.3, 0.3))
def test_subtracted_csch2_is_regular(x, y):
    u = complex(x, y)
    if abs(u) < 1e-12:
        u = 1e-12
    v = csch2_minus_inv_sq(u)
    assert abs(v + 1 / 3) < 0.1
    if 0.21 < abs(u):
        assert abs(v - (csch2(u) - 1 / u**2)) < 1e-10
