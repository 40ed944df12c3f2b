"""Seeded random-driver ensembles checking the reachable-set descriptions.

Trial ``i`` draws its driver from ``default_rng([seed, i])``, so each trial
is reproducible on its own and reports do not depend on evaluation order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, fields

import numpy as np

from . import chordal, radial, value_region
from .drivers import random_circle_driver, random_real_driver

GRID_HEIGHTS = (1.1, 2.0, 5.0)
GRID_OFFSETS = (-3.0, 0.0, 3.0)


def _fmt(v) -> str:
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


@dataclass(frozen=True)
class _Report:
    def lines(self) -> list[str]:
        return [f"{f.name}: {_fmt(getattr(self, f.name))}" for f in fields(self)]

    def to_text(self) -> str:
        return "\n".join(self.lines()) + "\n"


@dataclass(frozen=True)
class RadialReport(_Report):
    z0: str
    trials: int
    seed: int
    horizon: float
    step: float
    tol: float
    samples: int
    truncated: int
    max_inequality_residual: float  # max of rho - rho0 + |phi - phi0| over t > 0
    inequality_violations: int
    containment_failures: int
    nonmonotone_traces: int
    min_q1_slack: float
    optimal_equality_residual: float

    @property
    def ok(self) -> bool:
        return (self.inequality_violations == 0 and self.containment_failures == 0
                and self.nonmonotone_traces == 0 and self.min_q1_slack >= -self.tol
                and self.optimal_equality_residual <= self.tol)


@dataclass(frozen=True)
class ChordalReport(_Report):
    z0: str
    trials: int
    seed: int
    horizon: float
    step: float
    tol: float
    samples: int
    min_height_gain: float  # min over t > 0 of Im w(t) - Im z0
    containment_failures: int
    nonmonotone_traces: int
    line_targets: int
    line_max_miss: float

    @property
    def ok(self) -> bool:
        return (self.min_height_gain > 0.0 and self.containment_failures == 0
                and self.nonmonotone_traces == 0 and self.line_max_miss <= self.tol)


def optimal_equality_residual(z0, step: float = radial.DEFAULT_STEP, horizon: float = 5.0,
                              integrator=None) -> float:
    """Max |rho - rho0 + |phi - phi0|| on integrated optimal trajectories up to
    min(t_max, horizon)."""
    integrator = integrator or radial.integrate
    T = min(radial.t_max(z0), horizon)
    worst = 0.0
    for sign in ("plus", "minus"):
        tr = integrator(z0, radial.optimal_driver(z0, sign), T, step)
        res = tr.rho - tr.rho0 + np.abs(tr.phi - tr.phi0)
        worst = max(worst, float(np.abs(res).max()))
    return worst


def radial_ensemble(z0, trials: int = 10_000, T: float = 3.0, step: float = radial.DEFAULT_STEP,
                    seed: int = 0, tol: float = 1e-7, integrator=None) -> RadialReport:
    """Integrate ``trials`` random piecewise-constant controls from ``z0``."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    integrator = integrator or radial.integrate
    spec = value_region.region(z0)
    samples = truncated = viol = fails = nonmono = 0
    worst = -math.inf
    min_slack = math.inf
    for i in range(trials):
        rng = np.random.default_rng([seed, i])
        tr = integrator(z0, random_circle_driver(rng, T), T, step)
        truncated += tr.truncated
        res = tr.rho[1:] - tr.rho0 + np.abs(tr.phi[1:] - tr.phi0)
        samples += res.size
        worst = max(worst, float(res.max()))
        viol += int(np.count_nonzero(res > tol))
        fails += int(np.count_nonzero(~value_region.contains_value(spec, tr.points[1:], tol)))
        nonmono += not bool(np.all(np.diff(tr.rho) < 0))
        r = np.tanh(0.5 * tr.rho)
        slack = r - np.abs(r * np.sin(tr.phi - tr.theta))
        min_slack = min(min_slack, float(slack.min()))
    return RadialReport(
        z0=repr(complex(spec.z0)), trials=trials, seed=seed, horizon=float(T),
        step=float(step), tol=float(tol), samples=samples, truncated=truncated,
        max_inequality_residual=worst, inequality_violations=viol,
        containment_failures=fails, nonmonotone_traces=nonmono,
        min_q1_slack=min_slack,
        optimal_equality_residual=optimal_equality_residual(z0, step, integrator=integrator),
    )


def line_grid(z0) -> list[complex]:
    z0 = chordal.HalfPlanePoint.of(z0)
    return [complex(z0.x + dx, k * z0.y) for k in GRID_HEIGHTS for dx in GRID_OFFSETS]


def line_grid_miss(z0, step: float = chordal.DEFAULT_STEP,
                   integrator=None) -> float:
    """Max distance between the integrated line trajectory at t_hit and its target."""
    integrator = integrator or chordal.integrate_chordal
    worst = 0.0
    for target in line_grid(z0):
        driver, t_hit = chordal.line_driver(z0, target)
        tr = integrator(z0, driver, t_hit, step)
        worst = max(worst, abs(tr.points[-1] - target))
    return worst


def chordal_ensemble(z0, trials: int = 10_000, T: float = 3.0,
                     step: float = chordal.DEFAULT_STEP, seed: int = 0, tol: float = 1e-7,
                     integrator=None) -> ChordalReport:
    """Integrate ``trials`` random piecewise-constant real drivers from ``z0``."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    integrator = integrator or chordal.integrate_chordal
    z0 = chordal.HalfPlanePoint.of(z0)
    samples = fails = nonmono = 0
    min_gain = math.inf
    for i in range(trials):
        rng = np.random.default_rng([seed, i])
        tr = integrator(z0, random_real_driver(rng, T, z0.x, z0.y), T, step)
        gain = tr.y[1:] - z0.y
        samples += gain.size
        min_gain = min(min_gain, float(gain.min()))
        fails += int(np.count_nonzero(gain <= 0.0))
        nonmono += not bool(np.all(np.diff(tr.y) > 0))
    return ChordalReport(
        z0=repr(z0.z), trials=trials, seed=seed, horizon=float(T), step=float(step),
        tol=float(tol), samples=samples, min_height_gain=min_gain,
        containment_failures=fails, nonmonotone_traces=nonmono,
        line_targets=len(line_grid(z0)),
        line_max_miss=line_grid_miss(z0, step, integrator=integrator),
    )
