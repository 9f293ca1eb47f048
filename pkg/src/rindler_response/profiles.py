"""Configuration and result records shared by the response modules."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field


class CutoffFlavor(enum.Enum):
    PHYSICAL = "physical"
    MATHEMATICAL = "mathematical"


@dataclass(frozen=True)
class Regulator:
    """Short-distance cutoff epsilon > 0 of the chosen flavor."""

    eps: float
    flavor: CutoffFlavor = CutoffFlavor.PHYSICAL

    def __post_init__(self):
        if not (math.isfinite(self.eps) and self.eps > 0):
            raise ValueError(f"regulator eps must be positive, got {self.eps!r}")


@dataclass(frozen=True)
class Sharp:
    """Detector switched on for tau in [center - duration/2, center + duration/2]."""

    duration: float
    center: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.duration) and self.duration > 0):
            raise ValueError(f"duration must be positive, got {self.duration!r}")

    @property
    def tau0(self) -> float:
        return self.center - self.duration / 2

    @property
    def tauf(self) -> float:
        return self.center + self.duration / 2

    @property
    def effective_duration(self) -> float:
        return self.duration


@dataclass(frozen=True)
class Gaussian:
    """Switching exp(-(tau - center)^2 / zeta^2)."""

    zeta: float
    center: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.zeta) and self.zeta > 0):
            raise ValueError(f"zeta must be positive, got {self.zeta!r}")

    @property
    def effective_duration(self) -> float:
        """Width sqrt(2 pi) zeta playing the role of the sharp duration."""
        return math.sqrt(2 * math.pi) * self.zeta

    def with_effective_duration(self, d: float) -> "Gaussian":
        return Gaussian(d / math.sqrt(2 * math.pi), self.center)


def with_duration(sw, d: float):
    """Same profile type and centre, new effective duration."""
    if isinstance(sw, Sharp):
        return Sharp(d, sw.center)
    return sw.with_effective_duration(d)


class Method(enum.Enum):
    CLOSED_FORM = "ClosedForm"
    QUADRATURE = "Quadrature"
    ASYMPTOTIC = "Asymptotic"
    LIMIT = "Limit"


@dataclass(frozen=True)
class ResponseResult:
    value: complex
    err_estimate: float
    method: Method
    flags: tuple[str, ...] = field(default_factory=tuple)

    @property
    def advisory(self) -> bool:
        return "advisory-domain" in self.flags


# tighter requests than this are not attainable in double precision for
# the oscillatory integrals here
MIN_REL_TOL = 1e-10
MAX_SUBDIVISIONS = 1_000_000


@dataclass(frozen=True)
class QuadratureControl:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-13
    max_subdivisions: int = 4000
    tail_cut: float = 40.0

    def __post_init__(self):
        if not self.rel_tol >= MIN_REL_TOL:
            raise ValueError(f"rel_tol must be >= {MIN_REL_TOL}, got {self.rel_tol}")
        if not 0 < self.max_subdivisions <= MAX_SUBDIVISIONS:
            raise ValueError(f"max_subdivisions must lie in (0, {MAX_SUBDIVISIONS}]")
        if not (self.abs_tol >= 0 and self.tail_cut > 0):
            raise ValueError("abs_tol must be >= 0 and tail_cut > 0")
