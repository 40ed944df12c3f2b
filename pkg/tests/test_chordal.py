import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from loewner_regions import chordal
from loewner_regions.drivers import RealDriver, random_real_driver
from loewner_regions.errors import DomainError, SingularityError, UnreachableTargetError


def test_zero_driver_vertical_motion():
    tr = chordal.integrate_chordal(1j, RealDriver.piecewise([0.0], [0.0]), 2.0)
    np.testing.assert_allclose(tr.y, np.sqrt(4 * tr.t + 1), rtol=1e-13)
    assert np.max(np.abs(tr.x)) == 0.0
    assert tr.y[-1] == pytest.approx(3.0, rel=1e-13)


def test_unit_slope_line():
    driver, t_hit = chordal.line_driver(1j, 1 + 2j)
    assert driver.c == 1.0
    assert t_hit == pytest.approx(1.5, rel=1e-15)
    tr = chordal.integrate_chordal(1j, driver, t_hit)
    np.testing.assert_allclose(tr.x, tr.y - 1.0, atol=1e-12)
    assert abs(tr.points[-1] - (1 + 2j)) < 1e-12


@pytest.mark.parametrize("target, c, t_hit", [
    (2j, 0.0, 0.75),
    (-3 + 2j, -3.0, 7.5),
    (0.5 + 5j, 0.125, 6.0 * 1.015625),
])
def test_line_driver_examples(target, c, t_hit):
    driver, th = chordal.line_driver(1j, target)
    assert driver.c == pytest.approx(c, rel=1e-15)
    assert th == pytest.approx(t_hit, rel=1e-15)
    assert abs(chordal.line_solution(1j, driver.c, th) - target) < 1e-14


def test_line_driver_rejects_lower_targets():
    with pytest.raises(UnreachableTargetError):
        chordal.line_driver(1j, 3 + 1j)
    with pytest.raises(UnreachableTargetError):
        chordal.line_driver(1j, 0.5j)
    with pytest.raises(DomainError):
        chordal.line_driver(-1j, 1j)


def test_region_contains():
    assert chordal.halfplane_region_contains(1j, 1j)
    assert chordal.halfplane_region_contains(1j, 100 + 1.0001j)
    assert not chordal.halfplane_region_contains(1j, 5 + 1j)
    assert not chordal.halfplane_region_contains(1j, 0.5j)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1), st.floats(0.25, 4.0))
def test_scaling_covariance(seed, lam):
    # w solves with U  =>  lam*w(t/lam^2) solves with lam*U(t/lam^2)
    rng = np.random.default_rng(seed)
    base = random_real_driver(rng, 1.0, 0.0, 1.0)
    scaled = RealDriver.piecewise(base.knots_t * lam ** 2, base.knots_u * lam)
    a = chordal.integrate_chordal(0.2 + 1j, base, 1.0, 1e-3)
    b = chordal.integrate_chordal(lam * (0.2 + 1j), scaled, lam ** 2, 1e-3 * lam ** 2)
    assert abs(lam * a.points[-1] - b.points[-1]) < 1e-9 * lam


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1), st.floats(-5, 5), st.floats(0.1, 5))
def test_random_drivers_strictly_rise(seed, x0, y0):
    drv = random_real_driver(np.random.default_rng(seed), 1.0, x0, y0)
    tr = chordal.integrate_chordal(complex(x0, y0), drv, 1.0, 1e-2)
    assert np.all(np.diff(tr.y) > 0)


def test_singularity_guard():
    with pytest.raises(SingularityError):
        chordal.integrate_chordal(1e-11j, RealDriver.piecewise([0.0], [0.0]), 1.0)


def test_rhs_values():
    dx, dy = chordal.rhs(0.0, 1.0, 1.0)
    assert (dx, dy) == (1.0, 1.0)
    assert chordal.rhs(0.0, 2.0, 0.0) == (0.0, 1.0)


def test_halfplane_point_validation():
    with pytest.raises(DomainError):
        chordal.HalfPlanePoint(0.0, 0.0)
    with pytest.raises(DomainError):
        chordal.HalfPlanePoint(math.nan, 1.0)
