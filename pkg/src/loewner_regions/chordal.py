"""Chordal Loewner flow  w' = -2/(w - U(t))  in the upper half-plane.

In real coordinates w = x + iy::

    x' = 2(U - x)/((U - x)^2 + y^2),   y' = 2y/((U - x)^2 + y^2)

Every point with larger imaginary part is reachable from z0 along a straight
ray, by a driver that keeps U - x = c*y.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _backend
from . import _kernels_py as K
from .drivers import RealDriver
from .errors import DomainError, SingularityError, UnreachableTargetError

DEFAULT_STEP = 1e-3


@dataclass(frozen=True)
class HalfPlanePoint:
    x: float
    y: float

    def __post_init__(self):
        x, y = float(self.x), float(self.y)
        if not (math.isfinite(x) and math.isfinite(y)) or y <= 0.0:
            raise DomainError(f"{complex(x, y)} is not in the upper half-plane")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def of(cls, z) -> "HalfPlanePoint":
        if isinstance(z, HalfPlanePoint):
            return z
        z = complex(z)
        return cls(z.real, z.imag)

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)


@dataclass(frozen=True)
class ChordalTrace:
    z0: HalfPlanePoint
    t: np.ndarray
    x: np.ndarray
    y: np.ndarray
    u: np.ndarray
    truncated: bool = False

    @property
    def points(self) -> np.ndarray:
        return self.x + 1j * self.y

    def __len__(self) -> int:
        return self.t.size


def rhs(x: float, y: float, u: float) -> tuple[float, float]:
    d = u - x
    den = d * d + y * y
    return 2.0 * d / den, 2.0 * y / den


def integrate_chordal(z0, driver: RealDriver, T: float, step: float = DEFAULT_STEP,
                      backend: str | None = None) -> ChordalTrace:
    """Fixed-step RK4 with steps landing on T and on the driver knots."""
    z0 = HalfPlanePoint.of(z0)
    if not (T > 0 and step > 0):
        raise ValueError("T and step must be positive")
    kern = _backend.kernels(backend)
    if driver.kind == "piecewise":
        kt, kv = driver.knots_t, driver.knots_u
        plan = _backend.plan_segments(kt, T, step)
    else:
        kt = kv = np.zeros(1)
        plan = _backend.plan_segments(kt[:0], T, step)
    t, x, y, status = kern.chordal_rk4(z0.x, z0.y, driver.code, kt, kv,
                                       driver.c, driver.x0, driver.y0, *plan)
    if status == K.SINGULAR:
        raise SingularityError(f"driver hit the trajectory near t={t[-1]:.6g}")
    return ChordalTrace(z0, t, x, y, driver.u(t), truncated=status != K.OK)


def line_driver(z0, target) -> tuple[RealDriver, float]:
    """Driver steering z0 along the straight ray through ``target``.

    Returns the driver and the time at which the trajectory reaches ``target``.
    """
    z0, target = HalfPlanePoint.of(z0), HalfPlanePoint.of(target)
    if not target.y > z0.y:
        raise UnreachableTargetError("target must lie strictly above z0")
    c = (target.x - z0.x) / (target.y - z0.y)
    t_hit = (1.0 + c * c) * (target.y - z0.y) * (target.y + z0.y) / 4.0
    return RealDriver.line(c, z0.x, z0.y), t_hit


def line_solution(z0, c: float, t):
    """Closed-form trajectory under the line driver of slope ``c``."""
    z0 = HalfPlanePoint.of(z0)
    t = np.asarray(t, dtype=float)
    y = np.sqrt(4.0 * t / (1.0 + c * c) + z0.y ** 2)
    return c * y + z0.x - c * z0.y + 1j * y


def halfplane_region_contains(z0, z) -> bool:
    """Reachable set from z0: z0 itself plus everything strictly above it."""
    z0 = HalfPlanePoint.of(z0)
    z = complex(z.z if isinstance(z, HalfPlanePoint) else z)
    return z == z0.z or z.imag > z0.y
