# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled RK4 kernels for the radial and chordal Loewner flows.

Same arithmetic, in the same order, as ``_kernels_py``; the two backends
agree to the last bit on platforms without FMA contraction.
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport asinh, exp, sin, sinh, sqrt, tanh, isfinite, M_PI

cnp.import_array()

cdef enum:
    CONSTANT = 0
    LINEAR = 1
    CLOSED_PLUS = 2
    CLOSED_MINUS = 3
    CLOSED_LINE = 2

cdef enum:
    OK = 0
    TRUNCATED = 1
    SINGULAR = 2

cdef double RHO_FLOOR = 1e-14
cdef double DEN_FLOOR = 1e-20


cdef inline double _piecewise(int kind, Py_ssize_t k, double t,
                              const double[::1] kt, const double[::1] kv) noexcept nogil:
    cdef Py_ssize_t n = kt.shape[0]
    if k < 0:
        return kv[0]
    if kind == CONSTANT or k >= n - 1:
        return kv[k]
    return kv[k] + (kv[k + 1] - kv[k]) * (t - kt[k]) / (kt[k + 1] - kt[k])


cdef inline double _theta(int kind, Py_ssize_t k, double t,
                          const double[::1] kt, const double[::1] kv,
                          double p0, double p1) noexcept nogil:
    if kind == CLOSED_PLUS:
        return asinh(exp(-t) * sinh(p0)) - p0 + p1 - 0.5 * M_PI
    if kind == CLOSED_MINUS:
        return -(asinh(exp(-t) * sinh(p0)) - p0) + p1 + 0.5 * M_PI
    return _piecewise(kind, k, t, kt, kv)


cdef inline void _radial_rhs(double rho, double phi, double theta,
                             double* drho, double* dphi) noexcept nogil:
    cdef double r = tanh(0.5 * rho)
    cdef double om = 2.0 / (1.0 + exp(rho))
    cdef double s = sin(0.5 * (phi - theta))
    cdef double den = om * om + 4.0 * r * s * s
    drho[0] = -2.0 * r / den
    dphi[0] = -2.0 * r * sin(phi - theta) / den


cdef inline double _drive(int kind, Py_ssize_t k, double t,
                          const double[::1] kt, const double[::1] kv,
                          double p0, double p1, double p2) noexcept nogil:
    if kind == CLOSED_LINE:
        return 2.0 * p0 * sqrt(4.0 * t / (1.0 + p0 * p0) + p2 * p2) + p1 - p0 * p2
    return _piecewise(kind, k, t, kt, kv)


def radial_rk4(double rho0, double phi0, int kind,
               const double[::1] kt, const double[::1] kv,
               double p0, double p1,
               const double[::1] seg_a, const double[::1] seg_b,
               const long[::1] seg_k, const long[::1] seg_n):
    cdef Py_ssize_t nseg = seg_n.shape[0]
    cdef Py_ssize_t total = 1
    cdef Py_ssize_t s, i, j = 0
    for s in range(nseg):
        total += seg_n[s]
    out_t = np.empty(total, dtype=np.float64)
    out_r = np.empty(total, dtype=np.float64)
    out_p = np.empty(total, dtype=np.float64)
    cdef double[::1] ts = out_t
    cdef double[::1] rs = out_r
    cdef double[::1] ps = out_p
    cdef double rho = rho0, phi = phi0, cr = 0.0, cp = 0.0, inc_r, inc_p
    cdef double a, b, h, t0, th1, th2, th4
    cdef double k1r, k1p, k2r, k2p, k3r, k3p, k4r, k4p, rho_n, phi_n
    cdef Py_ssize_t k, n
    cdef int status = OK
    ts[0] = 0.0
    rs[0] = rho0
    ps[0] = phi0
    with nogil:
        for s in range(nseg):
            a = seg_a[s]
            b = seg_b[s]
            k = seg_k[s]
            n = seg_n[s]
            h = (b - a) / n
            for i in range(n):
                t0 = a + i * h
                th1 = _theta(kind, k, t0, kt, kv, p0, p1)
                th2 = _theta(kind, k, t0 + 0.5 * h, kt, kv, p0, p1)
                th4 = _theta(kind, k, t0 + h, kt, kv, p0, p1)
                _radial_rhs(rho, phi, th1, &k1r, &k1p)
                _radial_rhs(rho + 0.5 * h * k1r, phi + 0.5 * h * k1p, th2, &k2r, &k2p)
                _radial_rhs(rho + 0.5 * h * k2r, phi + 0.5 * h * k2p, th2, &k3r, &k3p)
                _radial_rhs(rho + h * k3r, phi + h * k3p, th4, &k4r, &k4p)
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
    return out_t[:j + 1].copy(), out_r[:j + 1].copy(), out_p[:j + 1].copy(), status


def chordal_rk4(double x0, double y0, int kind,
                const double[::1] kt, const double[::1] kv,
                double p0, double p1, double p2,
                const double[::1] seg_a, const double[::1] seg_b,
                const long[::1] seg_k, const long[::1] seg_n):
    cdef Py_ssize_t nseg = seg_n.shape[0]
    cdef Py_ssize_t total = 1
    cdef Py_ssize_t s, i, j = 0
    for s in range(nseg):
        total += seg_n[s]
    out_t = np.empty(total, dtype=np.float64)
    out_x = np.empty(total, dtype=np.float64)
    out_y = np.empty(total, dtype=np.float64)
    cdef double[::1] ts = out_t
    cdef double[::1] xs = out_x
    cdef double[::1] ys = out_y
    cdef double x = x0, y = y0, cx = 0.0, cy = 0.0, inc_x, inc_y
    cdef double a, b, h, t0, u1, u2, u4, d, den, xa, ya
    cdef double k1x, k1y, k2x, k2y, k3x, k3y, k4x, k4y, x_n, y_n
    cdef Py_ssize_t k, n
    cdef int status = OK
    ts[0] = 0.0
    xs[0] = x0
    ys[0] = y0
    with nogil:
        for s in range(nseg):
            a = seg_a[s]
            b = seg_b[s]
            k = seg_k[s]
            n = seg_n[s]
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
    return out_t[:j + 1].copy(), out_x[:j + 1].copy(), out_y[:j + 1].copy(), status
