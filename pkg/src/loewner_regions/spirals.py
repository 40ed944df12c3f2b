"""Hyperbolic and euclidean Archimedean spirals through the origin.

The hyperbolic spiral of sign s through z0 is the curve where the distance
from the origin changes linearly with the polar angle::

    rho(phi) = s * (phi - phi0) + rho0

so it reaches the origin at phi = phi0 - s*rho0.  The boundary arc of the
value region walks from z0 toward the origin for at most half a turn.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegeneratePointError, DomainError
from .hyp_geom import DiskPoint, HypPolar, as_complex, from_polar, hyp_dist

PLUS = 1
MINUS = -1

# rounding slack at the origin end of a spiral
_ENDPOINT_TOL = 1e-12


def sign_of(sign) -> int:
    """Normalise 'plus'/'minus'/'+'/'-'/+1/-1 to +1 or -1."""
    if sign in (1, "plus", "+", "p"):
        return PLUS
    if sign in (-1, "minus", "-", "m"):
        return MINUS
    raise ValueError(f"unknown sign {sign!r}")


def _anchor(z0) -> tuple[DiskPoint, float, float]:
    z0 = DiskPoint.of(z0)
    if z0.z == 0:
        raise DegeneratePointError("spirals through the origin need z0 != 0")
    return z0, hyp_dist(0, z0), z0.arg


def hyp_spiral_point(z0, sign, phi: float) -> DiskPoint:
    """Point of the hyperbolic spiral through 0 and ``z0`` at lifted angle ``phi``."""
    s = sign_of(sign)
    z0, rho0, phi0 = _anchor(z0)
    rho = s * (phi - phi0) + rho0
    if rho < -_ENDPOINT_TOL * (1.0 + abs(phi)):
        raise DomainError(f"angle {phi} lies beyond the origin end of the spiral")
    return from_polar(HypPolar(max(rho, 0.0), phi))


def euclid_spiral_point(w0, sign, phi: float) -> complex:
    """Point of the euclidean Archimedean spiral |w| = s*(phi - arg w0) + |w0|."""
    s = sign_of(sign)
    w0 = complex(w0)
    if w0 == 0:
        raise DegeneratePointError("spirals through the origin need w0 != 0")
    mod = s * (phi - cmath.phase(w0)) + abs(w0)
    if mod < -_ENDPOINT_TOL * (1.0 + abs(phi)):
        raise DomainError(f"angle {phi} lies beyond the origin end of the spiral")
    return max(mod, 0.0) * cmath.exp(1j * phi)


@dataclass(frozen=True)
class SpiralArc:
    """The part of a hyperbolic spiral between ``anchor`` and ``terminal``.

    ``phi_range`` holds lifted angles (lo, hi); ``terminal_phi`` is the lifted
    angle at the far end, ``phi0 - sign*min(rho0, pi)``.
    """

    anchor: DiskPoint
    sign: int
    rho0: float
    phi0: float
    terminal: DiskPoint
    terminal_phi: float
    phi_range: tuple[float, float]

    @property
    def sweep(self) -> float:
        return self.phi_range[1] - self.phi_range[0]

    def rho_at(self, phi):
        return self.sign * (np.asarray(phi, dtype=float) - self.phi0) + self.rho0

    def angles(self, n: int = 512) -> np.ndarray:
        """``n`` lifted angles uniformly spaced from the anchor to the terminal."""
        if n < 2:
            raise ValueError("need at least two samples")
        phis = np.linspace(self.phi0, self.terminal_phi, n)
        phis[0], phis[-1] = self.phi0, self.terminal_phi
        return phis

    def sample(self, n: int = 512) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Return ``(phi, rho, points)`` along the arc, anchor first."""
        phis = self.angles(n)
        rhos = np.maximum(self.rho_at(phis), 0.0)
        pts = np.tanh(0.5 * rhos) * np.exp(1j * phis)
        pts[0] = self.anchor.z
        pts[-1] = self.terminal.z
        return phis, rhos, pts


def gamma_arc(z0, sign) -> SpiralArc:
    """Boundary arc from ``z0`` toward the origin along the spiral of ``sign``.

    Stops at the origin when d(0, z0) <= pi; otherwise after half a turn, at
    distance d(0, z0) - pi, where the plus and minus arcs meet.
    """
    s = sign_of(sign)
    z0, rho0, phi0 = _anchor(z0)
    sweep = min(rho0, math.pi)
    end = phi0 - s * sweep
    if rho0 <= math.pi:
        terminal = DiskPoint(0.0, 0.0)
    else:
        terminal = hyp_spiral_point(z0, s, end)
    lo, hi = sorted((phi0, end))
    return SpiralArc(z0, s, rho0, phi0, terminal, end, (lo, hi))


def _simpson(f, a, fa, b, fb, m, fm, whole, tol, depth):
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = f(lm)
    frm = f(rm)
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    delta = left + right - whole
    if depth <= 0 or abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    return (_simpson(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1)
            + _simpson(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1))


def adaptive_simpson(f, a: float, b: float, tol: float = 1e-10, max_depth: int = 50) -> float:
    """Adaptive Simpson quadrature with Richardson correction."""
    if a == b:
        return 0.0
    fa, fb = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return _simpson(f, a, fa, b, fb, m, fm, whole, tol, max_depth)


def hyperbolic_speed(arc: SpiralArc, phi: float) -> float:
    """2|gamma'(phi)| / (1 - |gamma(phi)|^2) for the polar parametrisation."""
    rho = max(arc.sign * (phi - arc.phi0) + arc.rho0, 0.0)
    r = math.tanh(0.5 * rho)
    one_minus = 2.0 / (1.0 + math.exp(rho))      # 1 - r, without cancellation
    dr = 0.5 * one_minus * (1.0 + r)             # |d r / d phi| = (1 - r^2)/2
    return 2.0 * math.hypot(dr, r) / (one_minus * (1.0 + r))


def hyp_arc_length(arc: SpiralArc, tol: float = 1e-10) -> float:
    """Hyperbolic length of ``arc`` by adaptive quadrature of the metric."""
    lo, hi = arc.phi_range
    return adaptive_simpson(lambda p: hyperbolic_speed(arc, p), lo, hi, tol)


def arc_length_closed_form(rho0: float) -> float:
    """Closed-form hyperbolic length of either boundary arc."""
    if rho0 <= math.pi:
        return math.sinh(rho0)
    return math.sinh(rho0) - math.sinh(rho0 - math.pi)
