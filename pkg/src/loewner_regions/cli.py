"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage / bad input, 3 I/O.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from . import chordal, ensemble, radial, value_region
from ._backend import BACKEND
from .drivers import CircleDriver, RealDriver
from .errors import DomainError, DriverFileError, UnreachableTargetError
from .io import fmt, parse_complex, read_driver_file, region_svg, write_csv

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _complex_arg(text: str) -> complex:
    try:
        return parse_complex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _disk_point(z: complex) -> complex:
    if not abs(z) < 1.0:
        raise UsageError(f"z0 = {z} is not inside the unit disk")
    return z


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    with open(out, "w", newline="") as fh:
        fh.write(text)


def _log(args, msg: str) -> None:
    # keep stdout clean when the data itself goes there
    stream = sys.stderr if args.out in (None, "-") else sys.stdout
    print(msg, file=stream)


def _write_csv(out, header, columns) -> None:
    write_csv(sys.stdout if out in (None, "-") else out, header, columns)


def cmd_region(args) -> int:
    z0 = _disk_point(args.z0)
    spec = value_region.region(z0)
    if spec.degenerate:
        _log(args, "z0 = 0: the region is the single point 0")
        poly = np.zeros(1, dtype=complex)
        rho = phi = np.zeros(1)
    else:
        poly, rho, phi = value_region.boundary_polar(spec, args.samples)
    if args.format == "svg":
        _emit(region_svg(poly, z0, title=f"value region at z0 = {z0}"), args.out)
    else:
        tparam = np.linspace(0.0, 1.0, poly.size) if poly.size > 1 else np.zeros(1)
        _write_csv(args.out, ["t_param", "re", "im", "rho", "phi_lifted"],
                   [tparam, poly.real, poly.imag, rho, phi])
    if not spec.degenerate:
        lp, lm = value_region.arc_lengths(spec)
        center, radius = value_region.grunsky_disk(z0)
        _log(args, f"z0: {z0!r}")
        _log(args, f"rho0: {fmt(spec.rho0)}")
        _log(args, f"is_convex: {value_region.is_convex(spec)}")
        _log(args, f"origin_isolated: {value_region.origin_isolated(spec)}")
        _log(args, f"arc_length_plus: {fmt(lp)}")
        _log(args, f"arc_length_minus: {fmt(lm)}")
        _log(args, f"t_max: {fmt(radial.t_max(z0))}")
        _log(args, f"grunsky_center: {fmt(center.real)}")
        _log(args, f"grunsky_radius: {fmt(radius)}")
    return EXIT_OK


def _disk_trajectory(args) -> int:
    z0 = _disk_point(args.z0)
    if z0 == 0:
        raise UsageError("z0 = 0 is a fixed point; no trajectory to integrate")
    name = args.driver or "optimal"
    sign = None
    if name in ("optimal", "plus", "minus"):
        sign = args.sign if name == "optimal" else name
        driver = radial.optimal_driver(z0, sign)
    else:
        kt, kv, interp = read_driver_file(name)
        driver = CircleDriver.piecewise(kt, kv, interp)
    tr = radial.integrate(z0, driver, args.T, args.step)
    pts = tr.points
    header = ["t", "re", "im", "rho", "phi_lifted", "theta_driver"]
    cols = [tr.t, pts.real, pts.imag, tr.rho, tr.phi, tr.theta]
    if sign is not None:
        rho_x, phi_x = radial.optimal_polar(z0, sign, tr.t)
        header += ["rho_exact", "phi_exact", "rho_residual", "phi_residual"]
        cols += [rho_x, phi_x, tr.rho - rho_x, tr.phi - phi_x]
        worst = max(np.abs(tr.rho - rho_x).max(), np.abs(tr.phi - phi_x).max())
        _log(args, f"max_residual: {fmt(worst)}")
    if tr.truncated:
        _log(args, f"warning: trace truncated at t = {fmt(tr.t[-1])}")
    _write_csv(args.out, header, cols)
    return EXIT_OK


def _halfplane_trajectory(args) -> int:
    z0 = args.z0
    if not z0.imag > 0:
        raise UsageError(f"z0 = {z0} is not in the upper half-plane")
    name = args.driver or "line"
    c = None
    if name == "line":
        if args.target is None:
            c = 0.0
            driver = RealDriver.line(0.0, z0.real, z0.imag)
        else:
            driver, t_hit = chordal.line_driver(z0, args.target)
            c = driver.c
            _log(args, f"t_hit: {fmt(t_hit)}")
    else:
        kt, kv, interp = read_driver_file(name)
        driver = RealDriver.piecewise(kt, kv, interp)
    tr = chordal.integrate_chordal(z0, driver, args.T, args.step)
    header = ["t", "re", "im", "u_driver"]
    cols = [tr.t, tr.x, tr.y, tr.u]
    if c is not None:
        exact = chordal.line_solution(z0, c, tr.t)
        header += ["re_exact", "im_exact", "residual"]
        cols += [exact.real, exact.imag, np.abs(tr.points - exact)]
        _log(args, f"max_residual: {fmt(np.abs(tr.points - exact).max())}")
    _write_csv(args.out, header, cols)
    return EXIT_OK


def cmd_trajectory(args) -> int:
    if args.mode == "halfplane":
        return _halfplane_trajectory(args)
    return _disk_trajectory(args)


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    blocks = []
    ok = True
    if args.mode in ("disk", "both"):
        z0 = _disk_point(args.z0 if args.z0 is not None else 0.5 + 0.4j)
        if z0 == 0:
            raise UsageError("z0 = 0 has no nontrivial trajectories")
        rep = ensemble.radial_ensemble(z0, args.trials, args.T, args.step, args.seed, args.tol)
        ok &= rep.ok
        blocks.append("[disk]\n" + rep.to_text() + f"status: {'PASS' if rep.ok else 'FAIL'}\n")
    if args.mode in ("halfplane", "both"):
        hz0 = args.hz0 if args.mode == "both" else args.z0
        hz0 = hz0 if hz0 is not None else 1j
        if not hz0.imag > 0:
            raise UsageError(f"z0 = {hz0} is not in the upper half-plane")
        rep = ensemble.chordal_ensemble(hz0, args.trials, args.T, args.step, args.seed, args.tol)
        ok &= rep.ok
        blocks.append("[halfplane]\n" + rep.to_text() + f"status: {'PASS' if rep.ok else 'FAIL'}\n")
    text = "\n".join(blocks) + f"\noverall: {'PASS' if ok else 'FAIL'}\n"
    _emit(text, args.out)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="loewner-regions",
        description="Value regions of bounded univalent maps via Loewner flows.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s (kernels: {BACKEND})")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, z0_default):
        sp.add_argument("--z0", type=_complex_arg, default=z0_default,
                        help="start point, e.g. 0.5+0.4i")
        sp.add_argument("--out", default=None, help="output file (default: stdout)")

    r = sub.add_parser("region", help="boundary of the value region at z0")
    common(r, 0.5 + 0.4j)
    r.add_argument("--samples", type=int, default=512, help="samples per boundary arc")
    r.add_argument("--format", choices=("csv", "svg"), default="csv")
    r.set_defaults(func=cmd_region)

    t = sub.add_parser("trajectory", help="integrate one Loewner trajectory")
    common(t, 0.5 + 0.4j)
    t.add_argument("--mode", choices=("disk", "halfplane"), default="disk")
    t.add_argument("--driver", default=None,
                   help="disk: optimal|plus|minus|FILE; halfplane: line|FILE")
    t.add_argument("--sign", choices=("plus", "minus"), default="plus")
    t.add_argument("--target", type=_complex_arg, default=None,
                   help="halfplane line driver target (default: vertical ray)")
    t.add_argument("--T", type=float, default=5.0)
    t.add_argument("--step", type=float, default=1e-3)
    t.set_defaults(func=cmd_trajectory)

    v = sub.add_parser("verify", help="Monte-Carlo check over seeded random drivers")
    common(v, None)
    v.add_argument("--mode", choices=("disk", "halfplane", "both"), default="disk")
    v.add_argument("--hz0", type=_complex_arg, default=None,
                   help="half-plane start point when --mode both (default i)")
    v.add_argument("--trials", type=int, default=10_000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--tol", type=float, default=1e-7)
    v.add_argument("--T", type=float, default=3.0)
    v.add_argument("--step", type=float, default=1e-3)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "T", 1.0) <= 0 or getattr(args, "step", 1.0) <= 0:
        parser.error("--T and --step must be positive")
    if getattr(args, "samples", 2) < 2:
        parser.error("--samples must be >= 2")
    try:
        return args.func(args)
    except (UsageError, DomainError, DriverFileError, UnreachableTargetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
