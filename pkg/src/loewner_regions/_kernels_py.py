"""Pure-Python RK4 kernels.

Mirror of ``_kernels.pyx`` statement for statement; used when the compiled
extension is unavailable or when ``LOEWNER_REGIONS_BACKEND=python`` is set.
Both backends consume the same segment plan (see ``_backend.plan_segments``).
"""
from math import asinh, exp, sin, sinh, sqrt, tanh, isfinite, pi

import numpy as np

# driver kind codes shared with the Cython kernel
CONSTANT = 0
LINEAR = 1
CLOSED_PLUS = 2   # radial optimal control, plus branch
CLOSED_MINUS = 3  # radial optimal control, minus branch
CLOSED_LINE = 2   # chordal straight-line driver

OK = 0
TRUNCATED = 1
SINGULAR = 2

RHO_FLOOR = 1e-14
DEN_FLOOR = 1e-20
HALF_PI = 0.5 * pi


def _piecewise(kind, k, t, kt, kv):
    n = len(kt)
    if k < 0:
        return kv[0]
    if kind == CONSTANT or k >= n - 1:
        return kv[k]
    return kv[k] + (kv[k + 1] - kv[k]) * (t - kt[k]) / (kt[k + 1] - kt[k])


def _theta(kind, k, t, kt, kv, p0, p1):
    if kind == CLOSED_PLUS:
        return asinh(exp(-t) * sinh(p0)) - p0 + p1 - HALF_PI
    if kind == CLOSED_MINUS:
        return -(asinh(exp(-t) * sinh(p0)) - p0) + p1 + HALF_PI
    return _piecewise(kind, k, t, kt, kv)


def _radial_rhs(rho, phi, theta):
    r = tanh(0.5 * rho)
    om = 2.0 / (1.0 + exp(rho))
    s = sin(0.5 * (phi - theta))
    den = om * om + 4.0 * r * s * s
    return -2.0 * r / den, -2.0 * r * sin(phi - theta) / den


def radial_rk4(rho0, phi0, kind, kt, kv, p0, p1, seg_a, seg_b, seg_k, seg_n):
    """Fixed-step RK4 for the radial flow in (rho, phi).

    Returns ``(t, rho, phi, status)``; arrays are cut at the last good sample
    when the state leaves the finite range or rho drops under ``RHO_FLOOR``.
    """
    kt = [float(v) for v in kt]
    kv = [float(v) for v in kv]
    total = int(sum(int(n) for n in seg_n)) + 1
    ts = [0.0] * total
    rs = [0.0] * total
    ps = [0.0] * total
    ts[0] = 0.0
    rs[0] = rho0
    ps[0] = phi0
    rho = rho0
    phi = phi0
    cr = cp = 0.0
    j = 0
    status = OK
    for s in range(len(seg_n)):
        a = float(seg_a[s])
        b = float(seg_b[s])
        k = int(seg_k[s])
        n = int(seg_n[s])
        h = (b - a) / n
        for i in range(n):
            t0 = a + i * h
            th1 = _theta(kind, k, t0, kt, kv, p0, p1)
            th2 = _theta(kind, k, t0 + 0.5 * h, kt, kv, p0, p1)
            th4 = _theta(kind, k, t0 + h, kt, kv, p0, p1)
            k1r, k1p = _radial_rhs(rho, phi, th1)
            k2r, k2p = _radial_rhs(rho + 0.5 * h * k1r, phi + 0.5 * h * k1p, th2)
            k3r, k3p = _radial_rhs(rho + 0.5 * h * k2r, phi + 0.5 * h * k2p, th2)
            k4r, k4p = _radial_rhs(rho + h * k3r, phi + h * k3p, th4)
            # compensated update: increments are ~h times smaller than the state
            inc_r = h / 6.0 * (k1r + 2.0 * k2r + 2.0 * k3r + k4r) - cr
            inc_p = h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p) - cp
            rho_n = rho + inc_r
            phi_n = phi + inc_p
            if not (isfinite(rho_n) and isfinite(phi_n)) or rho_n < RHO_FLOOR:
                status = TRUNCATED
                break
            cr = (rho_n - rho) - inc_r
            cp = (phi_n - phi) - inc_p
            rho = rho_n
            phi = phi_n
            j += 1
            ts[j] = b if i == n - 1 else a + (i + 1) * h
            rs[j] = rho
            ps[j] = phi
        if status != OK:
            break
    m = j + 1
    return (np.array(ts[:m]), np.array(rs[:m]), np.array(ps[:m]), status)


def _drive(kind, k, t, kt, kv, p0, p1, p2):
    if kind == CLOSED_LINE:
        return 2.0 * p0 * sqrt(4.0 * t / (1.0 + p0 * p0) + p2 * p2) + p1 - p0 * p2
    return _piecewise(kind, k, t, kt, kv)


def chordal_rk4(x0, y0, kind, kt, kv, p0, p1, p2, seg_a, seg_b, seg_k, seg_n):
    """Fixed-step RK4 for the chordal flow in (x, y).

    Status ``SINGULAR`` means |w - U|^2 fell under ``DEN_FLOOR`` at some stage.
    """
    kt = [float(v) for v in kt]
    kv = [float(v) for v in kv]
    total = int(sum(int(n) for n in seg_n)) + 1
    ts = [0.0] * total
    xs = [0.0] * total
    ys = [0.0] * total
    xs[0] = x0
    ys[0] = y0
    x = x0
    y = y0
    cx = cy = 0.0
    j = 0
    status = OK
    for s in range(len(seg_n)):
        a = float(seg_a[s])
        b = float(seg_b[s])
        k = int(seg_k[s])
        n = int(seg_n[s])
        h = (b - a) / n
        for i in range(n):
            t0 = a + i * h
            u1 = _drive(kind, k, t0, kt, kv, p0, p1, p2)
            u2 = _drive(kind, k, t0 + 0.5 * h, kt, kv, p0, p1, p2)
            u4 = _drive(kind, k, t0 + h, kt, kv, p0, p1, p2)

            d = u1 - x
            den = d * d + y * y
            if den < DEN_FLOOR:
                status = SINGULAR
                break
            k1x = 2.0 * d / den
            k1y = 2.0 * y / den

            xa = x + 0.5 * h * k1x
            ya = y + 0.5 * h * k1y
            d = u2 - xa
            den = d * d + ya * ya
            if den < DEN_FLOOR:
                status = SINGULAR
                break
            k2x = 2.0 * d / den
            k2y = 2.0 * ya / den

            xa = x + 0.5 * h * k2x
            ya = y + 0.5 * h * k2y
            d = u2 - xa
            den = d * d + ya * ya
            if den < DEN_FLOOR:
                status = SINGULAR
                break
            k3x = 2.0 * d / den
            k3y = 2.0 * ya / den

            xa = x + h * k3x
            ya = y + h * k3y
            d = u4 - xa
            den = d * d + ya * ya
            if den < DEN_FLOOR:
                status = SINGULAR
                break
            k4x = 2.0 * d / den
            k4y = 2.0 * ya / den

            inc_x = h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x) - cx
            inc_y = h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y) - cy
            x_n = x + inc_x
            y_n = y + inc_y
            if not (isfinite(x_n) and isfinite(y_n)):
                status = TRUNCATED
                break
            cx = (x_n - x) - inc_x
            cy = (y_n - y) - inc_y
            x = x_n
            y = y_n
            j += 1
            ts[j] = b if i == n - 1 else a + (i + 1) * h
            xs[j] = x
            ys[j] = y
        if status != OK:
            break
    m = j + 1
    return (np.array(ts[:m]), np.array(xs[:m]), np.array(ys[:m]), status)
