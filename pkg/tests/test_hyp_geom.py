import cmath
import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from loewner_regions.errors import DegeneratePointError, DomainError
from loewner_regions.hyp_geom import DiskPoint, HypPolar, from_polar, hyp_dist, to_polar, wrap_angle

# frozen from mpmath at 40 digits
ROOT_041 = 0.6403124237
RHO_05_04 = 1.5174061940330563087
PHI_05_04 = 0.67474094222355266306


def disk_points(max_r=0.999):
    return st.builds(
        lambda r, a: DiskPoint(r * math.cos(a), r * math.sin(a)),
        st.floats(0.0, max_r), st.floats(-math.pi, math.pi),
    )


def test_diskpoint_rejects_boundary_and_exterior():
    with pytest.raises(DomainError):
        DiskPoint(1.0, 0.0)
    with pytest.raises(DomainError):
        DiskPoint(0.8, 0.7)
    with pytest.raises(DomainError):
        DiskPoint(float("nan"), 0.0)


def test_hypdist_zero():
    assert hyp_dist(0, 0) == 0.0


@pytest.mark.parametrize("r, expected", [
    (0.917152335667274, math.pi),
    (0.655794202632672, math.pi / 2),
])
def test_hypdist_threshold_radii(r, expected):
    assert hyp_dist(0, r) == pytest.approx(expected, abs=1e-13)


def test_hypdist_matches_log_form():
    a, b = 0.3 - 0.2j, -0.5 + 0.45j
    m = abs((a - b) / (1 - b.conjugate() * a))
    assert hyp_dist(a, b) == pytest.approx(math.log((1 + m) / (1 - m)), rel=1e-14)


def test_hypdist_against_mpmath():
    with mpmath.workdps(40):
        a, b = mpmath.mpc(0.1, 0.7), mpmath.mpc(-0.6, 0.2)
        m = abs((a - b) / (1 - mpmath.conj(b) * a))
        ref = float(mpmath.log((1 + m) / (1 - m)))
    assert hyp_dist(0.1 + 0.7j, -0.6 + 0.2j) == pytest.approx(ref, rel=1e-14)


def test_to_polar_examples():
    p = to_polar(0.5, 0.0)
    assert p.rho == pytest.approx(math.log(3), abs=1e-15) and p.phi == 0.0
    p = to_polar(-0.5, math.pi)
    assert p.rho == pytest.approx(math.log(3), abs=1e-15) and p.phi == pytest.approx(math.pi)
    p = to_polar(0.5 + 0.4j, 0.0)
    assert abs(0.5 + 0.4j) == pytest.approx(ROOT_041, abs=1e-10)
    assert p.rho == pytest.approx(RHO_05_04, abs=1e-15)
    assert p.phi == pytest.approx(PHI_05_04, abs=1e-15)


def test_to_polar_rejects_origin():
    with pytest.raises(DegeneratePointError):
        to_polar(0)


@pytest.mark.parametrize("hint", [-7.0, -math.pi, 0.0, 2.5, 10.0])
def test_to_polar_branch_window(hint):
    z = -0.3 - 0.4j
    p = to_polar(z, hint)
    assert hint - math.pi < p.phi <= hint + math.pi
    assert cmath.exp(1j * p.phi) == pytest.approx(z / abs(z), abs=1e-14)


def test_from_polar_examples():
    assert from_polar(HypPolar(0.0, 1.234)).z == 0
    assert from_polar(HypPolar(math.pi, 0.0)).re == pytest.approx(0.917152335667274, abs=1e-15)
    z = from_polar(HypPolar(math.log(3), math.pi / 2)).z
    assert z == pytest.approx(0.5j, abs=1e-15)


def test_wrap_angle_half_open():
    assert wrap_angle(math.pi) == pytest.approx(math.pi)
    assert wrap_angle(-math.pi) == pytest.approx(math.pi)
    assert wrap_angle(3 * math.pi + 0.1) == pytest.approx(-math.pi + 0.1)


@given(disk_points(), disk_points())
def test_hypdist_symmetric(a, b):
    assert hyp_dist(a, b) == pytest.approx(hyp_dist(b, a), rel=1e-12, abs=1e-12)


@given(disk_points(0.99), disk_points(0.99), st.floats(-math.pi, math.pi))
def test_hypdist_rotation_invariant(a, b, alpha):
    rot = cmath.exp(1j * alpha)
    d = hyp_dist(a, b)
    assert hyp_dist(rot * a.z, rot * b.z) == pytest.approx(d, rel=1e-9, abs=1e-9)


@given(disk_points(0.99))
def test_hypdist_zero_iff_equal(a):
    assert hyp_dist(a, a) == 0.0


@settings(max_examples=300)
@given(st.floats(0.0, 10.0), st.floats(-20.0, 20.0))
def test_polar_round_trip(rho, phi):
    z = from_polar(HypPolar(rho, phi))
    assert abs(hyp_dist(0, z) - rho) < 1e-12
    if rho > 1e-6:
        back = to_polar(z, phi)
        assert back.rho == pytest.approx(rho, abs=1e-12)
        assert back.phi == pytest.approx(phi, abs=1e-9)


def test_hypdist_near_boundary_pair():
    # 40-digit mpmath value; the naive 2*artanh(m) form is off by ~1e-12 here
    a = complex(0.998046875, 0.0)
    b = complex(0.5392470279269911, 0.8398274867906936)
    ref = 12.390662562521404626
    assert hyp_dist(a, b) == pytest.approx(ref, rel=1e-15)
    assert hyp_dist(a, b) == hyp_dist(b, a)
