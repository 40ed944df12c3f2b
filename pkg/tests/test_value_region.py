import cmath
import math

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from loewner_regions import radial
from loewner_regions.drivers import random_circle_driver
from loewner_regions.errors import DegeneratePointError
from loewner_regions.hyp_geom import hyp_dist
from loewner_regions.value_region import (
    CONVEX_RADIUS, ISOLATED_RADIUS, boundary_polyline, contains_closure, contains_value,
    grunsky_disk, is_convex, origin_isolated, polyline_is_convex, region, residual,
)

Z0S = [0.5 + 0.4j, 0.7 + 0.65j, 0.99, 0.3j, -0.2 - 0.9j, 0.1 - 0.05j]

disk_z = st.builds(lambda r, a: r * cmath.exp(1j * a),
                   st.floats(0.01, 0.98), st.floats(-math.pi, math.pi))


@pytest.mark.parametrize("z0", Z0S)
def test_z0_and_origin_in_closure(z0):
    spec = region(z0)
    assert contains_closure(spec, z0)
    assert contains_closure(spec, 0)
    assert contains_value(spec, z0)
    assert not contains_value(spec, 0)


def test_radial_shrink_is_value():
    assert contains_value(region(0.5), 0.25)


def test_outward_point_is_not_reachable():
    spec = region(0.5)
    assert not contains_closure(spec, 0.6)
    # Monte-Carlo oracle: no random control gets from 0.5 to distance d(0, 0.6)
    rho_target = hyp_dist(0, 0.6)
    rng = np.random.default_rng(12)
    for _ in range(200):
        tr = radial.integrate(0.5, random_circle_driver(rng, 1.0), 1.0, 1e-2)
        assert tr.rho.max() < rho_target


def test_quarter_turn_point_excluded():
    spec = region(0.5)
    deficit = math.log(3) - 2 * math.atanh(0.3)
    assert deficit == pytest.approx(0.4796, abs=1e-4)
    assert deficit < math.pi / 2
    assert not contains_closure(spec, 0.3j)


def test_degenerate_region():
    spec = region(0)
    assert spec.degenerate
    assert contains_closure(spec, 0)
    assert not contains_closure(spec, 0.01)
    assert not contains_value(spec, 0)


def test_vectorised_membership():
    spec = region(0.5 + 0.4j)
    z = np.array([0.5 + 0.4j, 0.0, 0.95, 0.2 + 0.16j, 2.0])
    assert list(contains_closure(spec, z)) == [True, True, False, True, False]
    assert list(contains_value(spec, z)) == [True, False, False, True, False]


@pytest.mark.parametrize("r, convex", [(0.5, True), (0.7, False), (CONVEX_RADIUS, True),
                                       (math.nextafter(CONVEX_RADIUS, 1), False)])
def test_is_convex_threshold(r, convex):
    assert is_convex(region(r)) is convex


@pytest.mark.parametrize("r, isolated", [(0.9, False), (0.95, True), (ISOLATED_RADIUS, False),
                                         (math.nextafter(ISOLATED_RADIUS, 1), True)])
def test_origin_isolated_threshold(r, isolated):
    assert origin_isolated(region(r)) is isolated


def test_threshold_decimals():
    assert f"{CONVEX_RADIUS:.8f}".startswith("0.655794")
    assert f"{ISOLATED_RADIUS:.8f}".startswith("0.917152")


@pytest.mark.parametrize("z0", Z0S)
def test_polyline_closed_and_on_boundary(z0):
    spec = region(z0)
    poly = boundary_polyline(spec, 256)
    assert poly.size == 512
    assert poly[0] == poly[-1] == complex(z0)
    nz = poly[poly != 0]
    assert np.all(np.abs(residual(spec, nz)) < 1e-9)
    has_origin = np.any(poly == 0)
    assert has_origin == (spec.rho0 <= math.pi)


@pytest.mark.parametrize("r", [0.3, 0.6, 0.655, 0.66, 0.7, 0.9])
def test_sampled_convexity_agrees(r):
    for angle in (0.0, 1.1, -2.5):
        spec = region(r * cmath.exp(1j * angle))
        assert polyline_is_convex(boundary_polyline(spec, 512)) == is_convex(spec)


@given(disk_z, disk_z, st.floats(1e-6, 1.0))
def test_starlike_wrt_origin(z0, z, t):
    spec = region(z0)
    assume(contains_value(spec, z, eps=0.0))
    assert contains_value(spec, t * z)


@given(disk_z, disk_z, st.floats(-math.pi, math.pi))
def test_rotation_equivariance(z0, z, alpha):
    spec = region(z0)
    assume(abs(residual(spec, z)) > 1e-9)
    rot = cmath.exp(1j * alpha)
    assert contains_value(spec, z) == contains_value(region(rot * z0), rot * z)


@given(disk_z, disk_z, st.floats(0.0, 1.0))
def test_monotone_in_distance(z0, z, shrink):
    spec = region(z0)
    assume(contains_closure(spec, z))
    rho = hyp_dist(0, z)
    z2 = math.tanh(0.5 * shrink * rho) * cmath.exp(1j * cmath.phase(z))
    assert contains_closure(spec, z2)


def test_grunsky_examples():
    c, r = grunsky_disk(0.5)
    assert c == pytest.approx(0.28768207245178092744, abs=1e-15)
    assert r == pytest.approx(1.0986122886681096914, abs=1e-15)
    c, r = grunsky_disk(1e-9 * (1 + 1j))
    assert abs(c) < 1e-15 and r < 1e-8
    with pytest.raises(DegeneratePointError):
        grunsky_disk(0)


@given(st.floats(1e-6, 0.999))
def test_grunsky_radius_dominates_center(r):
    c, rad = grunsky_disk(r)
    assert rad >= abs(c)
