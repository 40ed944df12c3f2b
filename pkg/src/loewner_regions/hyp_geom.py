"""Hyperbolic distance and polar coordinates in the unit disk.

The metric is 2|dz|/(1-|z|^2) (curvature -1), so the distance from the
origin is 2*artanh|z|.  Functions accept :class:`DiskPoint` or plain complex
numbers; the ``*_origin`` helpers also take numpy arrays.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import mpmath
import numpy as np

from .errors import DegeneratePointError, DomainError

# 2*artanh argument clamp near the boundary
_M_CLAMP = 1.0 - 1e-15


@dataclass(frozen=True)
class DiskPoint:
    """A point of the open unit disk."""

    re: float
    im: float

    def __post_init__(self):
        re, im = float(self.re), float(self.im)
        if not (math.isfinite(re) and math.isfinite(im)) or re * re + im * im >= 1.0:
            raise DomainError(f"{complex(re, im)} is not inside the unit disk")
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    @classmethod
    def of(cls, z) -> "DiskPoint":
        if isinstance(z, DiskPoint):
            return z
        z = complex(z)
        return cls(z.real, z.imag)

    @property
    def z(self) -> complex:
        return complex(self.re, self.im)

    def __abs__(self) -> float:
        return math.hypot(self.re, self.im)

    @property
    def arg(self) -> float:
        """Principal argument in (-pi, pi]."""
        return math.atan2(self.im, self.re)

    def __complex__(self) -> complex:
        return self.z


@dataclass(frozen=True)
class HypPolar:
    """Hyperbolic polar coordinates: distance from 0 and a lifted angle."""

    rho: float
    phi: float

    def __post_init__(self):
        if not self.rho >= 0.0:
            raise DomainError(f"rho must be >= 0, got {self.rho}")


def as_complex(p) -> complex:
    return p.z if isinstance(p, DiskPoint) else complex(p)


def _two_prod(a: float, b: float) -> tuple[float, float]:
    # Dekker product: a*b == p + e exactly
    p = a * b
    c = 134217729.0 * a
    ah = c - (c - a)
    al = a - ah
    c = 134217729.0 * b
    bh = c - (c - b)
    bl = b - bh
    e = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, e


def _one_minus_sq(z: complex) -> float:
    # 1 - |z|^2 from exact products
    x2, ex = _two_prod(z.real, z.real)
    y2, ey = _two_prod(z.imag, z.imag)
    return math.fsum((1.0, -x2, -ex, -y2, -ey))


def _dist_origin(z: complex) -> float:
    one_minus = _one_minus_sq(z)
    if one_minus <= 0.0:
        return 2.0 * math.atanh(_M_CLAMP)
    m = math.hypot(z.real, z.imag)
    # log((1+m)/(1-m)) = 2 log(1+m) - log(1-m^2); 1-m^2 is the cancelling factor
    return 2.0 * math.log1p(m) - math.log(one_minus)


def hyp_dist(a, b) -> float:
    """Hyperbolic distance between two disk points."""
    a, b = as_complex(a), as_complex(b)
    if a == 0:
        return _dist_origin(b)
    if b == 0:
        return _dist_origin(a)
    # |1 - conj(b) a|^2 = |a - b|^2 + (1 - |a|^2)(1 - |b|^2), free of cancellation
    gap = abs(a - b)
    num = _one_minus_sq(a) * _one_minus_sq(b)
    den = gap * gap + num
    m = min(gap / math.sqrt(den), _M_CLAMP)
    return 2.0 * math.log1p(m) - math.log(num) + math.log(den)


def hyp_dist_origin(z):
    """Vectorised distance from the origin, ``2*artanh|z|``."""
    m = np.minimum(np.abs(z), _M_CLAMP)
    return 2.0 * np.arctanh(m)


def wrap_angle(x):
    """Map angles into (-pi, pi]; works on scalars and arrays."""
    return x - 2.0 * np.pi * np.ceil((x - np.pi) / (2.0 * np.pi))


def to_polar(z, branch_hint: float = 0.0) -> HypPolar:
    """Hyperbolic polar coordinates with phi in (hint - pi, hint + pi]."""
    z = as_complex(z)
    if z == 0:
        raise DegeneratePointError("the angle of the origin is undefined")
    phi = branch_hint + float(wrap_angle(cmath.phase(z) - branch_hint))
    return HypPolar(hyp_dist(0, z), phi)


def from_polar(p: HypPolar) -> DiskPoint:
    # each component rounded once; near the boundary a stray ulp in |z| costs ~e^rho ulps in rho
    with mpmath.workdps(30):
        r = mpmath.tanh(mpmath.mpf(p.rho) / 2)
        phi = mpmath.mpf(p.phi)
        return DiskPoint(float(r * mpmath.cos(phi)), float(r * mpmath.sin(phi)))


def radius_from_rho(rho):
    """Euclidean modulus ``tanh(rho/2)``."""
    return np.tanh(0.5 * np.asarray(rho, dtype=float))
