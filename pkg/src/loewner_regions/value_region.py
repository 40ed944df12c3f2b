"""Value region of normalized univalent self-maps of the disk at a point.

For z0 in the disk the closure-with-origin of the region is::

    { z : d(0, z) - d(0, z0) <= -|phi - arg z0|  for some lift phi of arg z }

bounded by the two spiral arcs of :func:`spirals.gamma_arc`.  Membership
tests accept scalars or numpy arrays of complex numbers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegeneratePointError
from .hyp_geom import DiskPoint, as_complex, hyp_dist, hyp_dist_origin, wrap_angle
from .spirals import MINUS, PLUS, SpiralArc, gamma_arc, hyp_arc_length

CONVEX_RADIUS = math.tanh(math.pi / 4)    # 0.655794...
ISOLATED_RADIUS = math.tanh(math.pi / 2)  # 0.917152...
DEFAULT_EPS = 1e-9


@dataclass(frozen=True)
class RegionSpec:
    z0: DiskPoint
    rho0: float
    phi0: float
    boundary_plus: SpiralArc | None
    boundary_minus: SpiralArc | None
    eps: float = DEFAULT_EPS

    @property
    def degenerate(self) -> bool:
        """True for z0 = 0, where the region collapses to the origin."""
        return self.boundary_plus is None


def region(z0, eps: float = DEFAULT_EPS) -> RegionSpec:
    z0 = DiskPoint.of(z0)
    if z0.z == 0:
        return RegionSpec(z0, 0.0, 0.0, None, None, eps)
    return RegionSpec(z0, hyp_dist(0, z0), z0.arg,
                      gamma_arc(z0, PLUS), gamma_arc(z0, MINUS), eps)


def residual(spec: RegionSpec, z):
    """``d(0,z) - rho0 + |phi - phi0|`` at the lift of arg z nearest phi0.

    Non-positive inside the closed region, zero on the boundary arcs.
    """
    z = np.asarray(z, dtype=complex)
    rho = hyp_dist_origin(z)
    dphi = np.abs(wrap_angle(np.angle(z) - spec.phi0))
    out = rho - spec.rho0 + dphi
    return out if out.ndim else float(out)


def contains_closure(spec: RegionSpec, z, eps: float | None = None):
    """Membership in the region with the origin adjoined."""
    eps = spec.eps if eps is None else eps
    if isinstance(z, DiskPoint):
        z = z.z
    za = np.asarray(z, dtype=complex)
    inside = np.abs(za) < 1.0
    if spec.degenerate:
        res = za == 0
    else:
        with np.errstate(invalid="ignore", divide="ignore"):
            res = (za == 0) | (inside & (residual(spec, za) <= eps))
    return bool(res) if res.ndim == 0 else res


def contains_value(spec: RegionSpec, z, eps: float | None = None):
    """Whether ``z`` equals f(z0) for some normalized univalent f.

    The origin is excluded: f(z0) = f(0) would violate injectivity.
    """
    if isinstance(z, DiskPoint):
        z = z.z
    za = np.asarray(z, dtype=complex)
    res = (za != 0) & contains_closure(spec, za, eps)
    return bool(res) if np.ndim(res) == 0 else res


def is_convex(spec: RegionSpec) -> bool:
    return abs(spec.z0) <= CONVEX_RADIUS


def origin_isolated(spec: RegionSpec) -> bool:
    return abs(spec.z0) > ISOLATED_RADIUS


def boundary_polyline(spec: RegionSpec, n: int = 512) -> np.ndarray:
    """Closed polyline: ``n`` samples z0 -> z1 on the plus arc, then ``n``
    samples z1 -> z0 on the minus arc.  First and last vertex are z0."""
    if spec.degenerate:
        return np.zeros(1, dtype=complex)
    _, _, plus = spec.boundary_plus.sample(n)
    _, _, minus = spec.boundary_minus.sample(n)
    return np.concatenate([plus, minus[::-1]])


def boundary_polar(spec: RegionSpec, n: int = 512) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``(points, rho, lifted phi)`` matching :func:`boundary_polyline`."""
    if spec.degenerate:
        z = np.zeros(1, dtype=complex)
        return z, np.zeros(1), np.zeros(1)
    pp, pr, plus = spec.boundary_plus.sample(n)
    mp, mr, minus = spec.boundary_minus.sample(n)
    return (np.concatenate([plus, minus[::-1]]), np.concatenate([pr, mr[::-1]]),
            np.concatenate([pp, mp[::-1]]))


def polyline_is_convex(poly, rtol: float = 1e-12) -> bool:
    """Sampled convexity: all turns of a closed polyline have one sign."""
    pts = np.asarray(poly, dtype=complex)
    keep = np.concatenate([[True], np.abs(np.diff(pts)) > 1e-15])
    pts = pts[keep]
    if abs(pts[-1] - pts[0]) <= 1e-15:
        pts = pts[:-1]
    if pts.size < 3:
        return True
    e1 = np.roll(pts, -1) - pts
    e2 = np.roll(e1, -1)
    cross = (e1.conj() * e2).imag / (np.abs(e1) * np.abs(e2))
    return bool(np.all(cross >= -rtol) or np.all(cross <= rtol))


def arc_lengths(spec: RegionSpec) -> tuple[float, float]:
    if spec.degenerate:
        return 0.0, 0.0
    return hyp_arc_length(spec.boundary_plus), hyp_arc_length(spec.boundary_minus)


def grunsky_disk(z0) -> tuple[complex, float]:
    """Disk of values log(f(z0)/z0) over the normalized class S (unbounded maps)."""
    r = abs(as_complex(z0))
    if r == 0:
        raise DegeneratePointError("the Grunsky disk needs z0 != 0")
    center = -math.log1p(-r * r)
    radius = math.log1p(r) - math.log1p(-r)
    return complex(center, 0.0), radius
