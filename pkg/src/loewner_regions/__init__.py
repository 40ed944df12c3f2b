"""Value regions of bounded univalent functions and Loewner flows.

Hyperbolic disk geometry, hyperbolic Archimedean spirals, the exact value
region at a point, and RK4 integrators for the radial and chordal Loewner
equations (compiled kernel with a pure-Python fallback).
"""
from ._backend import BACKEND
from .chordal import (ChordalTrace, HalfPlanePoint, halfplane_region_contains,
                      integrate_chordal, line_driver, line_solution)
from .drivers import CircleDriver, RealDriver, random_circle_driver, random_real_driver
from .errors import (DegeneratePointError, DomainError, DriverFileError, SingularityError,
                     UnreachableTargetError)
from .hyp_geom import DiskPoint, HypPolar, from_polar, hyp_dist, to_polar
from .radial import (PolarTrace, check_differential_inequality, integrate, optimal_driver,
                     optimal_trajectory, rhs_polar, t_max)
from .spirals import SpiralArc, euclid_spiral_point, gamma_arc, hyp_arc_length, hyp_spiral_point
from .value_region import (RegionSpec, boundary_polyline, contains_closure, contains_value,
                           grunsky_disk, is_convex, origin_isolated, region)

__version__ = "0.1.0"
