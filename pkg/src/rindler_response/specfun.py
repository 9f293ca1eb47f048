"""Complex sine, cosine and exponential integrals plus Lerch-type sums.

All functions take and return Python complex scalars. Small or
cancellation-free arguments go through the Maclaurin series; everything
else goes through a continued fraction for E1, from which Si, Ci and Ei
follow by the usual connection formulas. Principal branches throughout.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

EULER_GAMMA = 0.57721566490153286061

# Series are used while the expected loss of digits, roughly
# exp(|z| - |result scale|), stays below this many e-folds.
SERIES_LIMIT = 9.0
# exp of anything larger overflows a double
MAX_EXPONENT = 700.0
LERCH_MAX_TERMS = 1_000_000


class DomainError(ValueError):
    """Argument outside the supported domain of a special function."""


def _as_complex(z, growth: float = 0.0) -> complex:
    """Validate z; `growth` is the exponent governing the size of the result."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite argument {z!r}")
    if growth > MAX_EXPONENT:
        raise DomainError(f"result overflows at z = {z!r}")
    return z



def _ein_like(z: complex) -> complex:
    """sum_{k>=1} z^k / (k k!), the entire part of Ei."""
    total = 0j
    t = 1.0 + 0j
    k = 1
    while True:
        t *= z / k
        term = t / k
        total += term
        if abs(term) <= 1e-17 * abs(total) and k > abs(z):
            return total
        k += 1


def _e1_series(z: complex) -> complex:
    return -EULER_GAMMA - cmath.log(z) - _ein_like(-z)


def _e1_contfrac(z: complex) -> complex:
    # E1(z) = e^{-z} / (z+1 - 1/(z+3 - 4/(z+5 - ...))), modified Lentz.
    tiny = 1e-300
    b = z + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for n in range(1, 20000):
        an = -float(n * n)
        b += 2.0
        d = 1.0 / (an * d + b)
        c = b + an / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            return h * cmath.exp(-z)
    raise DomainError(f"E1 continued fraction did not converge at {z!r}")


def exp_integral_e1(z) -> complex:
    """E1(z) = int_z^inf e^{-t}/t dt, principal branch (cut on the negative axis)."""
    z = _as_complex(z, -complex(z).real)
    if z == 0:
        raise DomainError("E1 has a logarithmic singularity at 0")
    if abs(z) + z.real <= SERIES_LIMIT:
        return _e1_series(z)
    return _e1_contfrac(z)


def exp_integral_ei(z) -> complex:
    """Ei(z) = gamma + log z + sum z^k/(k k!).

    Principal branch of the logarithm; on the negative real axis the real
    principal value -E1(-x) is returned.
    """
    z = _as_complex(z, complex(z).real)
    if z == 0:
        raise DomainError("Ei has a logarithmic singularity at 0")
    on_negative_axis = z.imag == 0.0 and z.real < 0.0
    if abs(z) - z.real <= SERIES_LIMIT:
        log_z = complex(math.log(-z.real)) if on_negative_axis else cmath.log(z)
        return EULER_GAMMA + log_z + _ein_like(z)
    val = -_e1_contfrac(-z)
    if on_negative_axis:
        return complex(val.real, 0.0)
    return val + cmath.log(z) - cmath.log(-z)


def _si_series(z: complex) -> complex:
    # sum (-1)^k z^{2k+1} / ((2k+1) (2k+1)!)
    z2 = z * z
    t = z
    total = z
    k = 0
    while True:
        k += 1
        t *= -z2 / ((2 * k) * (2 * k + 1))
        term = t / (2 * k + 1)
        total += term
        if abs(term) <= 1e-17 * abs(total) and 2 * k > abs(z):
            return total


def _cin_series(z: complex) -> complex:
    # Cin(z) = sum_{k>=1} (-1)^{k+1} z^{2k} / (2k (2k)!)
    z2 = z * z
    t = 1.0 + 0j
    total = 0j
    k = 0
    while True:
        k += 1
        t *= -z2 / ((2 * k - 1) * (2 * k))
        term = -t / (2 * k)
        total += term
        if abs(term) <= 1e-17 * abs(total) and 2 * k > abs(z):
            return total


def sine_integral(z) -> complex:
    """Si(z) = int_0^z sin t / t dt (entire)."""
    z = _as_complex(z, abs(complex(z).imag))
    if abs(z) - abs(z.imag) <= SERIES_LIMIT:
        return _si_series(z)
    if z.real < 0:
        return -sine_integral(-z)
    iz = 1j * z
    return (_e1_contfrac(iz) - _e1_contfrac(-iz)) / 2j + math.pi / 2


def cosine_integral(z) -> complex:
    """Ci(z) = gamma + log z + int_0^z (cos t - 1)/t dt, principal log branch."""
    z = _as_complex(z, abs(complex(z).imag))
    if z == 0:
        raise DomainError("Ci has a logarithmic singularity at 0")
    if z.imag == 0.0 and z.real < 0.0:
        raise DomainError("Ci argument lies on the branch cut (negative real axis)")
    if abs(z) - abs(z.imag) <= SERIES_LIMIT:
        return EULER_GAMMA + cmath.log(z) - _cin_series(z)
    if z.real < 0:
        # Ci(z) - log z is even
        return cosine_integral(-z) - cmath.log(-z) + cmath.log(z)
    iz = 1j * z
    return -(_e1_contfrac(iz) + _e1_contfrac(-iz)) / 2


def _check_lerch_args(z, a):
    z = complex(z)
    a = complex(a)
    if abs(z) >= 1.0:
        raise DomainError(f"Lerch sum needs |z| < 1, got |z| = {abs(z):.6g}")
    return z, a


def _geometric_sum(z: complex, term_fn, tail_fn, rel_tol: float) -> tuple[complex, int]:
    """Sum term_fn(n) * z**n over n >= 0 in vectorised blocks.

    tail_fn(N) must bound |sum_{n>=N} term_fn(n) z^n|; summation stops once
    the bound drops below rel_tol times the running total.
    """
    total = 0j
    n0 = 0
    block = 256
    absz = abs(z)
    while n0 < LERCH_MAX_TERMS:
        n = np.arange(n0, min(n0 + block, LERCH_MAX_TERMS), dtype=float)
        with np.errstate(under="ignore"):
            powers = np.exp(n * cmath.log(z)) if z != 0 else (n == 0).astype(complex)
        total += complex(np.sum(powers * term_fn(n)))
        n0 = int(n[-1]) + 1
        if absz == 0 or tail_fn(n0) <= rel_tol * max(abs(total), 1e-300):
            return total, n0
        block = min(block * 2, 65536)
    raise DomainError(f"Lerch sum not converged after {LERCH_MAX_TERMS} terms (|z| = {absz})")


def _min_distance(N: int, a: complex) -> float:
    # min over n >= N of |n + a|
    if N + a.real >= 0:
        return abs(N + a)
    return max(abs(a.imag), 1e-300)


def lerch_phi1(z, a, rel_tol: float = 1e-16) -> complex:
    """Phi(z, 1, a) = sum_{n>=0} z^n / (n + a) for complex |z| < 1.

    `a` must stay off the non-positive integers.
    """
    z, a = _check_lerch_args(z, a)
    if a.imag == 0 and a.real <= 0 and a.real == round(a.real):
        raise DomainError(f"Phi(z, 1, a) has a pole at a = {a.real}")
    absz = abs(z)

    def tail(N):
        return absz**N / ((1 - absz) * _min_distance(N, a))

    total, _ = _geometric_sum(z, lambda n: 1.0 / (n + a), tail, rel_tol)
    return total


def lerch_phi1_dpole(z, a, rel_tol: float = 1e-16) -> complex:
    """sum_{n>=0} z^n / (n + a)^2, i.e. -d/da Phi(z, 1, a)."""
    z, a = _check_lerch_args(z, a)
    absz = abs(z)

    def tail(N):
        return absz**N / ((1 - absz) * _min_distance(N, a) ** 2)

    total, _ = _geometric_sum(z, lambda n: 1.0 / (n + a) ** 2, tail, rel_tol)
    return total


def lerch_phi_sderiv(z, a, rel_tol: float = 1e-15) -> complex:
    """Derivative in s of Phi(z, s, a) at s = 0: -sum_{n>=0} z^n log(n + a).

    Valid for real 0 <= z < 1 and complex a such that no n + a lies on the
    non-positive real axis (principal logarithms). Direct summation with a
    geometric bound on the discarded tail.
    """
    zc = complex(z)
    if zc.imag != 0 or not (0.0 <= zc.real < 1.0):
        raise DomainError(f"need real 0 <= z < 1, got {z!r}")
    a = complex(a)
    if a.imag == 0 and a.real <= 0:
        raise DomainError(f"log(n + a) hits the branch cut for a = {a!r}")
    x = zc.real
    if x == 0.0:
        return -cmath.log(a)

    def tail(N):
        # |log(n + a)| <= log|n + a| + pi/2 and grows by at most 1/(N + Re a) per step
        d = _min_distance(N, a)
        lg = abs(math.log(max(abs(N + a), d))) + math.pi
        inc = 1.0 / d
        return x**N * (lg / (1 - x) + inc * x / (1 - x) ** 2)

    total, _ = _geometric_sum(complex(x), lambda n: np.log(n + a), tail, rel_tol)
    return -total
