"""Radial Loewner flow  w' = -w (kappa + w)/(kappa - w),  w(0) = z0.

The flow is integrated in hyperbolic polar coordinates (rho, phi) with
w = tanh(rho/2) e^{i phi}::

    rho' = -2 r / |kappa - w|^2
    phi' = -2 Im(conj(kappa) w) / |kappa - w|^2

so rho is a state variable, strictly decreasing, and phi is lifted for free.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _backend
from . import _kernels_py as K
from .drivers import CircleDriver
from .errors import DegeneratePointError, DomainError
from .hyp_geom import DiskPoint, HypPolar, from_polar, hyp_dist

DEFAULT_STEP = 1e-3


@dataclass(frozen=True)
class PolarTrace:
    """Samples (t, rho, phi) of a trajectory; phi is continuously lifted."""

    z0: DiskPoint
    t: np.ndarray
    rho: np.ndarray
    phi: np.ndarray
    theta: np.ndarray
    truncated: bool = False

    @property
    def rho0(self) -> float:
        return float(self.rho[0])

    @property
    def phi0(self) -> float:
        return float(self.phi[0])

    @property
    def points(self) -> np.ndarray:
        return np.tanh(0.5 * self.rho) * np.exp(1j * self.phi)

    def __len__(self) -> int:
        return self.t.size


def _start(z0) -> tuple[DiskPoint, float, float]:
    z0 = DiskPoint.of(z0)
    if z0.z == 0:
        raise DegeneratePointError("the origin is a fixed point of the flow")
    return z0, hyp_dist(0, z0), z0.arg


def rhs_polar(rho: float, phi: float, theta: float) -> tuple[float, float]:
    """Right-hand side in hyperbolic polar coordinates."""
    if not rho > 0.0:
        raise DomainError("rho must be positive")
    return K._radial_rhs(rho, phi, theta)


def rhs_complex(w: complex, kappa: complex) -> complex:
    """Right-hand side in the complex form (used as a cross-check)."""
    return -w * (kappa + w) / (kappa - w)


def integrate(z0, driver: CircleDriver, T: float, step: float = DEFAULT_STEP,
              backend: str | None = None) -> PolarTrace:
    """Fixed-step RK4; steps land on T and on every knot of a piecewise driver."""
    z0, rho0, phi0 = _start(z0)
    if not (T > 0 and step > 0):
        raise ValueError("T and step must be positive")
    kern = _backend.kernels(backend)
    if driver.kind == "piecewise":
        kt, kv = driver.knots_t, driver.knots_theta
        plan = _backend.plan_segments(kt, T, step)
        p0 = p1 = 0.0
    else:
        kt = kv = np.zeros(1)
        plan = _backend.plan_segments(kt[:0], T, step)
        p0, p1 = driver.rho0, driver.phi0
    t, rho, phi, status = kern.radial_rk4(rho0, phi0, driver.code, kt, kv, p0, p1, *plan)
    return PolarTrace(z0, t, rho, phi, driver.theta(t), truncated=status != K.OK)


def _closed_form_driver(z0, sign: int) -> CircleDriver:
    z0, rho0, phi0 = _start(z0)
    kind = "closed_form_plus" if sign > 0 else "closed_form_minus"
    return CircleDriver(kind, rho0=rho0, phi0=phi0)


def optimal_driver(z0, sign) -> CircleDriver:
    """Control whose trajectory runs along the boundary spiral of ``sign``.

    plus:  kappa = -i e^{i phi+(t)}   (conj(kappa) w = +i|w|)
    minus: kappa = +i e^{i phi-(t)}   (conj(kappa) w = -i|w|)
    """
    from .spirals import sign_of
    return _closed_form_driver(z0, sign_of(sign))


def optimal_polar(z0, sign, t):
    """Closed-form ``(rho(t), phi(t))`` of the optimal trajectory."""
    from .spirals import sign_of
    s = sign_of(sign)
    _, rho0, phi0 = _start(z0)
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise DomainError("t must be >= 0")
    rho = np.arcsinh(np.exp(-t) * math.sinh(rho0))
    phi = s * (rho - rho0) + phi0
    if rho.ndim == 0:
        return float(rho), float(phi)
    return rho, phi


def optimal_trajectory(z0, sign, t):
    """Point of the optimal trajectory at time ``t`` (scalar -> DiskPoint)."""
    rho, phi = optimal_polar(z0, sign, t)
    if np.ndim(rho) == 0:
        return from_polar(HypPolar(rho, phi))
    return np.tanh(0.5 * rho) * np.exp(1j * phi)


def t_max(z0) -> float:
    """Time after which the optimal trajectories stop being optimal."""
    _, rho0, _ = _start(z0)
    if rho0 <= math.pi:
        return math.inf
    # -log(sinh(rho0 - pi)/sinh(rho0)), written to survive large rho0
    return -(math.log(-math.expm1(-2.0 * (rho0 - math.pi))) - math.pi
             - math.log(-math.expm1(-2.0 * rho0)))


@dataclass(frozen=True)
class InequalityReport:
    max_violation: float       # max of rho - rho0 + |phi - phi0|, clipped at 0
    n_violations: int
    strictly_decreasing: bool
    max_equality_residual: float  # max |rho - rho0 + |phi - phi0||
    tol: float

    @property
    def ok(self) -> bool:
        return self.n_violations == 0 and self.strictly_decreasing


def check_differential_inequality(trace: PolarTrace, tol: float = 1e-9) -> InequalityReport:
    """Check rho(t) - rho0 <= -|phi(t) - phi0| along the trace."""
    res = trace.rho - trace.rho0 + np.abs(trace.phi - trace.phi0)
    viol = res > tol
    return InequalityReport(
        max_violation=float(max(res.max(), 0.0)),
        n_violations=int(viol.sum()),
        strictly_decreasing=bool(np.all(np.diff(trace.rho) < 0)),
        max_equality_residual=float(np.abs(res).max()),
        tol=tol,
    )


def q1_slack(trace: PolarTrace, sign) -> np.ndarray:
    """|w| - s*Im(conj(kappa) w) along the trace; never negative, zero for
    the optimal control of the same sign."""
    from .spirals import sign_of
    s = sign_of(sign)
    r = np.tanh(0.5 * trace.rho)
    return r - s * r * np.sin(trace.phi - trace.theta)
