import math

import numpy as np
import pytest

from loewner_regions import _backend, chordal, radial
from loewner_regions.drivers import CircleDriver, RealDriver, random_circle_driver, random_real_driver

has_cython = True
try:
    _backend.kernels("cython")
except ImportError:
    has_cython = False

needs_cython = pytest.mark.skipif(not has_cython, reason="compiled kernels not built")


def test_backend_name():
    assert _backend.BACKEND in ("cython", "python")


def test_unknown_backend():
    with pytest.raises(ValueError):
        _backend.kernels("fortran")


def test_plan_lands_on_knots_and_horizon():
    a, b, k, n = _backend.plan_segments(np.array([0.0, 0.25, 0.6]), 1.0, 0.1)
    assert list(a) == [0.0, 0.25, 0.6]
    assert list(b) == [0.25, 0.6, 1.0]
    assert list(k) == [0, 1, 2]
    assert list(n) == [3, 4, 4]
    assert n.dtype == np.int64


def test_plan_before_first_knot_and_merge():
    a, b, k, n = _backend.plan_segments(np.array([0.5, 0.5 + 1e-14, 3.0]), 1.0, 0.3)
    assert list(a) == [0.0, 0.5]
    assert list(k) == [-1, 1]
    assert list(n) == [2, 2]


def test_plan_exact_multiple():
    _, _, _, n = _backend.plan_segments(np.zeros(0), 1.0, 1e-3)
    assert list(n) == [1000]


def test_plan_rejects_bad_args():
    with pytest.raises(ValueError):
        _backend.plan_segments(np.zeros(0), 0.0, 0.1)


@pytest.mark.parametrize("backend", ["python"] + (["cython"] if has_cython else []))
def test_trace_hits_knot_times(backend):
    drv = CircleDriver.piecewise([0.0, 0.123, 0.4567], [0.0, 1.0, 2.0])
    tr = radial.integrate(0.5j, drv, 1.0, 0.05, backend=backend)
    assert 0.123 in tr.t and 0.4567 in tr.t
    assert tr.t[-1] == 1.0


@needs_cython
@pytest.mark.parametrize("seed", range(5))
def test_radial_parity(seed):
    drv = random_circle_driver(np.random.default_rng(seed), 2.0)
    drv_lin = CircleDriver.piecewise(drv.knots_t, drv.knots_theta, "linear")
    for d in (drv, drv_lin, radial.optimal_driver(0.3 - 0.8j, "minus")):
        a = radial.integrate(0.3 - 0.8j, d, 2.0, 1e-2, backend="python")
        b = radial.integrate(0.3 - 0.8j, d, 2.0, 1e-2, backend="cython")
        np.testing.assert_allclose(a.rho, b.rho, rtol=0, atol=1e-14)
        np.testing.assert_allclose(a.phi, b.phi, rtol=0, atol=1e-14)
        np.testing.assert_array_equal(a.t, b.t)


@needs_cython
@pytest.mark.parametrize("seed", range(5))
def test_chordal_parity(seed):
    drv = random_real_driver(np.random.default_rng(seed), 2.0, 0.5, 1.5)
    line, _ = chordal.line_driver(0.5 + 1.5j, 3 + 4j)
    for d in (drv, line):
        a = chordal.integrate_chordal(0.5 + 1.5j, d, 2.0, 1e-2, backend="python")
        b = chordal.integrate_chordal(0.5 + 1.5j, d, 2.0, 1e-2, backend="cython")
        np.testing.assert_allclose(a.points, b.points, rtol=0, atol=1e-13)


@pytest.mark.parametrize("backend", ["python"] + (["cython"] if has_cython else []))
def test_early_stop_near_origin(backend):
    # w decays like e^{-t}; the rho floor stops the run well before T
    tr = radial.integrate(1e-10, CircleDriver.constant(math.pi), 40.0, 0.01, backend=backend)
    assert tr.truncated
    assert tr.rho[-1] < 1e-13
