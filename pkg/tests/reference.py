"""Independent reference values for the test suite.

Special functions: defining integrals by mpmath quadrature (30 digits)
and direct series sums. Response functions: frozen brute-force quadrature
values written by scripts/freeze_oracles.py.
"""

from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path

import mpmath as mp

DATA = Path(__file__).parent / "data" / "oracle_values.json"
mp.mp.dps = 30


def _line(f, z):
    # straight path 0 -> z
    z = mp.mpc(z)
    return mp.quad(lambda t: f(t * z) * z, [0, 0.25, 0.5, 0.75, 1])


def si_ref(z) -> complex:
    f = lambda t: mp.sin(t) / t if t != 0 else mp.mpf(1)
    return complex(_line(f, z))


def ci_ref(z) -> complex:
    f = lambda t: (mp.cos(t) - 1) / t if t != 0 else mp.mpf(0)
    return complex(mp.euler + mp.log(z) + _line(f, z))


def ei_ref(z) -> complex:
    f = lambda t: mp.expm1(t) / t if t != 0 else mp.mpf(1)
    zc = complex(z)
    if zc.imag == 0 and zc.real < 0:
        return complex(mp.euler + mp.log(-zc.real) + _line(f, zc).real)
    return complex(mp.euler + mp.log(z) + _line(f, z))


def e1_ref(z) -> complex:
    # E1(z) = -gamma - log z - int_0^z (e^{-t} - 1)/t
    f = lambda t: mp.expm1(-t) / t if t != 0 else mp.mpf(-1)
    return complex(-mp.euler - mp.log(z) - _line(f, z))


def lerch_sderiv_ref(z: float, a) -> complex:
    return complex(-mp.nsum(lambda n: mp.mpf(z) ** n * mp.log(n + a), [0, mp.inf]))


@lru_cache(maxsize=None)
def frozen() -> dict:
    return json.loads(DATA.read_text())


def frozen_value(row) -> complex:
    return complex(row["re"], row["im"])


def _series(term, z, start):
    # sum term(k, z) from k = start until terms drop below 1e-45 relative
    with mp.workdps(50):
        z = mp.mpc(z)
        total, k = mp.mpf(0), start
        while True:
            t = term(k, z)
            total += t
            if k > 5 and abs(t) < mp.mpf(10) ** -45 * max(1, abs(total)):
                return total
            k += 1


def si_series(z) -> complex:
    return complex(_series(lambda k, z: (-1) ** k * z ** (2 * k + 1) / ((2 * k + 1) * mp.factorial(2 * k + 1)), z, 0))


def ci_series(z) -> complex:
    with mp.workdps(50):
        s = _series(lambda k, z: (-1) ** k * z ** (2 * k) / (2 * k * mp.factorial(2 * k)), z, 1)
        return complex(mp.euler + mp.log(mp.mpc(z)) + s)


def ei_series(z) -> complex:
    with mp.workdps(50):
        s = _series(lambda k, z: z**k / (k * mp.factorial(k)), z, 1)
        zc = complex(z)
        # principal log, except on the negative real axis where Ei is real
        lg = mp.log(-zc.real) if zc.imag == 0 and zc.real < 0 else mp.log(mp.mpc(z))
        return complex(mp.euler + lg + s)
