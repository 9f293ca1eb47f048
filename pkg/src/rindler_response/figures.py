"""Parameter presets for the seven (alpha1, alpha2) surface families.

Each family has four panels a-d; a panel is a PointConfig with every
dimensionless group fixed. Gaussian windows are centred at
tau = 0.9 sqrt(2 pi) eps / 2 with the panel's own eps.
"""

from __future__ import annotations

import math

from .scan import PointConfig, Quantity

SQRT_2PI = math.sqrt(2 * math.pi)
PANELS = "abcd"


def gaussian_center(dw_eps: float) -> float:
    return 0.9 * SQRT_2PI * dw_eps / 2


def _gauss(quantity, eps, zeta):
    return PointConfig(quantity=quantity, switching="gaussian", dw_eps=eps, dw_zeta=zeta,
                       dw_dx=0.3, t_center=gaussian_center(eps))


def _gauss_scaled(quantity, eps_s, zeta_s):
    # captions of the wide-window families quote sqrt(2 pi) * eps and sqrt(2 pi) * zeta
    return _gauss(quantity, eps_s / SQRT_2PI, zeta_s / SQRT_2PI)


def _build() -> dict[str, dict[str, PointConfig]]:
    rr12, rr21, life = Quantity.RE_R12, Quantity.RE_R21, Quantity.MEAN_LIFE
    narrow_r = [(3.0e-2, 2.7e-2), (3.9e-1, 35.1e-2), (5.4e-1, 48.6e-2), (0.9, 8.1e-1)]
    wide_r = [(0.3e-2, 3.0), (1.2e-2, 12.0), (3.6e-2, 36.0), (7.2e-2, 72.0)]
    narrow_l = [(3.0e-2, 2.7e-2), (4.5e-1, 40.5e-2), (0.9, 8.1e-1), (1.2, 10.8e-1)]
    wide_l = [(0.3e-2, 3.0), (0.3e-1, 30.0), (10.8e-2, 108.0), (18.9e-2, 189.0)]
    fams = {
        "fig1": [PointConfig(quantity=rr12, dw_dt=1.2, dw_eps=3.0e-2, dw_dx=dx)
                 for dx in (0.1, 0.3, 1.0, 3.0)],
        "fig2": [PointConfig(quantity=rr21, dw_dt=dt, dw_eps=3.0e-2, dw_dx=0.3)
                 for dt in (3.0, 12.0, 21.0, 30.0)],
        "fig3": [_gauss(rr21, e, z) for e, z in narrow_r],
        "fig4": [_gauss_scaled(rr21, e, z) for e, z in wide_r],
        "fig5": [PointConfig(quantity=life, dw_dt=dt, dw_eps=3.0e-2, dw_dx=0.3)
                 for dt in (0.3, 3.0, 12.0, 30.0)],
        "fig6": [_gauss(life, e, z) for e, z in narrow_l],
        "fig7": [_gauss_scaled(life, e, z) for e, z in wide_l],
    }
    return {name: dict(zip(PANELS, cfgs)) for name, cfgs in fams.items()}


PRESETS = _build()


def preset(name: str, panel: str) -> PointConfig:
    try:
        return PRESETS[name][panel]
    except KeyError:
        raise ValueError(f"no preset {name}{panel}; figures are fig1..fig7, panels a..d") from None
