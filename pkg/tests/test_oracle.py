import math

import numpy as np
import pytest

from rindler_response.kinematics import DetectorGeometry
from rindler_response.oracle import adaptive_quad, halfline_bruteforce, response_1d, response_2d
from rindler_response.profiles import Gaussian, QuadratureControl, Sharp
from reference import frozen, frozen_value

GEOM = DetectorGeometry(1.0, 1.4, 0.3)


def test_adaptive_quad_known_integrals():
    r = adaptive_quad(np.sin, [0.0, math.pi])
    assert r.converged and r.value == pytest.approx(2.0, rel=1e-13)
    r = adaptive_quad(lambda x: np.exp(-1j * 7 * x) / (1 + x * x), np.linspace(0, 60, 121))
    # int_0^inf cos(7x)/(1+x^2) = pi e^-7 / 2; truncation at 60 leaves ~1e-5
    assert r.value.real == pytest.approx(math.pi * math.exp(-7) / 2, abs=1e-4)


def test_adaptive_quad_reports_non_convergence():
    r = adaptive_quad(lambda x: np.sin(1 / x), [1e-6, 1.0], max_panels=20)
    assert not r.converged


def test_quadrature_control_limits():
    with pytest.raises(ValueError):
        QuadratureControl(rel_tol=1e-12)
    with pytest.raises(ValueError):
        QuadratureControl(max_subdivisions=0)
    with pytest.raises(ValueError):
        QuadratureControl(max_subdivisions=10**9)


def _pairs():
    rows = frozen()["individual_sharp"]
    one = {(r["dw"], r["dt"], r["eps"], r["alpha1"]): r for r in rows if r["kind"] == "1d"}
    return [(r, one[(r["dw"], r["dt"], r["eps"], r["alpha1"])]) for r in rows if r["kind"] == "2d"]


@pytest.mark.parametrize("pair", _pairs(), ids=lambda p: f"dt{p[0]['dt']}-e{p[0]['eps']}-a{p[0]['alpha1']}")
def test_frozen_2d_and_1d_agree(pair):
    two, one = pair
    assert abs(frozen_value(two) - frozen_value(one)) <= 1e-8 * abs(frozen_value(one))


def test_2d_and_1d_agree_live():
    for comp in ("11", "22", "21", "12"):
        for sw in (Sharp(1.2, 0.3), Gaussian(0.8, -0.2)):
            a = response_2d(comp, 1.0, sw, GEOM, 0.1).value
            b = response_1d(comp, 1.0, sw, GEOM, 0.1).value
            assert abs(a - b) <= 1e-8 * abs(b), (comp, sw)


def test_hermiticity():
    sw = Sharp(2.0, 0.4)
    f21 = response_2d("21", -1.0, sw, GEOM, 0.1).value
    f12 = response_2d("12", -1.0, sw, GEOM, 0.1).value
    assert abs(f12 - f21.conjugate()) <= 1e-9 * abs(f21)


def test_short_window_scaling():
    # bounded integrand over a shrinking square: O(dt^2)
    g = DetectorGeometry(1.0, 1.0, 0.0)
    big = response_2d("11", 1.0, Sharp(0.02), g, 0.1).value
    small = response_2d("11", 1.0, Sharp(0.01), g, 0.1).value
    assert big.real / small.real == pytest.approx(4.0, rel=1e-2)


def test_reduced_form_real_and_eps_monotone():
    g = DetectorGeometry(1.0, 1.0, 0.0)
    vals = [response_1d("11", 0.0, Sharp(0.5), g, e) for e in (0.02, 0.05, 0.1)]
    for v in vals:
        assert abs(v.value.imag) <= 1e-12
    assert vals[0].value.real > vals[1].value.real > vals[2].value.real


@pytest.mark.parametrize("dw", [1.0, -1.0, 3.0])
def test_positive_definite_witness(dw):
    for comp in ("11", "22"):
        v = response_2d(comp, dw, Sharp(3.0), GEOM, 0.03).value
        assert v.real >= 0 and abs(v.imag) <= 1e-9 * v.real


def test_halfline_tail_cut_robustness():
    base = halfline_bruteforce(1.0, 1.0, GEOM, 0.03, QuadratureControl(tail_cut=30.0)).value
    wide = halfline_bruteforce(1.0, 1.0, GEOM, 0.03, QuadratureControl(tail_cut=60.0)).value
    assert abs(wide - base) < 1e-10


def test_halfline_sigma_reflection():
    # flipping the sign of the frequency and of eps conjugates the integral
    a = halfline_bruteforce(1.0, 1.3, GEOM, 0.03).value
    b = halfline_bruteforce(1.0, -1.3, GEOM, -0.03).value
    assert abs(b - a.conjugate()) <= 1e-10 * abs(a)
