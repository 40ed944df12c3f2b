"""Driving functions: angles theta(t) on the circle and real U(t) on the line.

Piecewise drivers hold knots (t_i, v_i) with strictly increasing t_i.  With
constant interpolation v_i holds on [t_i, t_{i+1}); with linear
interpolation values are joined linearly.  Outside the knot range the end
values are held, so any horizon is covered.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels_py as K

INTERPOLATIONS = ("constant", "linear")


def _check_knots(t, v, interp):
    t = np.ascontiguousarray(t, dtype=np.float64)
    v = np.ascontiguousarray(v, dtype=np.float64)
    if t.ndim != 1 or t.shape != v.shape or t.size == 0:
        raise ValueError("knots must be two equal-length 1-d sequences")
    if np.any(np.diff(t) <= 0):
        raise ValueError("knot times must be strictly increasing")
    if not (np.all(np.isfinite(t)) and np.all(np.isfinite(v))):
        raise ValueError("knots must be finite")
    if interp not in INTERPOLATIONS:
        raise ValueError(f"interpolation must be one of {INTERPOLATIONS}")
    return t, v


def _eval_piecewise(t, kt, kv, interp):
    t = np.asarray(t, dtype=float)
    if interp == "linear":
        return np.interp(t, kt, kv)
    k = np.searchsorted(kt, t, side="right") - 1
    return kv[np.clip(k, 0, kt.size - 1)]


@dataclass(frozen=True)
class CircleDriver:
    """Control kappa(t) = exp(i*theta(t)) on the unit circle.

    ``kind`` is 'piecewise', 'closed_form_plus' or 'closed_form_minus'.  The
    closed forms carry ``rho0``/``phi0`` of the start point.
    """

    kind: str
    knots_t: np.ndarray = field(default_factory=lambda: np.zeros(1))
    knots_theta: np.ndarray = field(default_factory=lambda: np.zeros(1))
    interpolation: str = "constant"
    rho0: float = 0.0
    phi0: float = 0.0

    @classmethod
    def piecewise(cls, t, theta, interpolation="constant") -> "CircleDriver":
        kt, kv = _check_knots(t, theta, interpolation)
        return cls("piecewise", kt, kv, interpolation)

    @classmethod
    def constant(cls, theta: float) -> "CircleDriver":
        return cls.piecewise([0.0], [theta])

    @property
    def code(self) -> int:
        if self.kind == "closed_form_plus":
            return K.CLOSED_PLUS
        if self.kind == "closed_form_minus":
            return K.CLOSED_MINUS
        return K.LINEAR if self.interpolation == "linear" else K.CONSTANT

    def theta(self, t):
        t = np.asarray(t, dtype=float)
        if self.kind == "piecewise":
            return _eval_piecewise(t, self.knots_t, self.knots_theta, self.interpolation)
        base = np.arcsinh(np.exp(-t) * math.sinh(self.rho0)) - self.rho0
        if self.kind == "closed_form_plus":
            return base + self.phi0 - 0.5 * math.pi
        return -base + self.phi0 + 0.5 * math.pi

    def kappa(self, t):
        return np.exp(1j * self.theta(t))


@dataclass(frozen=True)
class RealDriver:
    """Driving function U(t) on the real line.

    ``kind`` is 'piecewise' or 'line'; the line driver steers the flow along
    the straight ray x = c*y + x0 - c*y0.
    """

    kind: str
    knots_t: np.ndarray = field(default_factory=lambda: np.zeros(1))
    knots_u: np.ndarray = field(default_factory=lambda: np.zeros(1))
    interpolation: str = "constant"
    c: float = 0.0
    x0: float = 0.0
    y0: float = 1.0

    @classmethod
    def piecewise(cls, t, u, interpolation="constant") -> "RealDriver":
        kt, kv = _check_knots(t, u, interpolation)
        return cls("piecewise", kt, kv, interpolation)

    @classmethod
    def line(cls, c: float, x0: float, y0: float) -> "RealDriver":
        return cls("line", c=float(c), x0=float(x0), y0=float(y0))

    @property
    def code(self) -> int:
        if self.kind == "line":
            return K.CLOSED_LINE
        return K.LINEAR if self.interpolation == "linear" else K.CONSTANT

    def u(self, t):
        t = np.asarray(t, dtype=float)
        if self.kind == "piecewise":
            return _eval_piecewise(t, self.knots_t, self.knots_u, self.interpolation)
        c = self.c
        return 2.0 * c * np.sqrt(4.0 * t / (1.0 + c * c) + self.y0 ** 2) + self.x0 - c * self.y0


def random_circle_driver(rng: np.random.Generator, T: float, mean_gap: float = 0.1) -> CircleDriver:
    """Piecewise-constant angles, exponential knot gaps, uniform in [0, 2pi)."""
    times = [0.0]
    while times[-1] < T:
        times.append(times[-1] + rng.exponential(mean_gap))
    times = np.array(times[:-1])
    return CircleDriver.piecewise(times, rng.uniform(0.0, 2.0 * math.pi, times.size))


def random_real_driver(rng: np.random.Generator, T: float, x0: float, y0: float,
                       mean_gap: float = 0.1, spread: float = 5.0) -> RealDriver:
    """Piecewise-constant U uniform in [x0 - spread*y0, x0 + spread*y0]."""
    times = [0.0]
    while times[-1] < T:
        times.append(times[-1] + rng.exponential(mean_gap))
    times = np.array(times[:-1])
    u = x0 + y0 * rng.uniform(-spread, spread, times.size)
    return RealDriver.piecewise(times, u)
