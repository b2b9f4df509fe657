# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; semantics identical to quadca._kernels_py."""

import numpy as np

cimport numpy as cnp
from libc.math cimport acos, fabs, hypot, sqrt

cnp.import_array()


def face_gradients(double[::1] x, double[::1] y, long[:, ::1] faces,
                   double[::1] u):
    cdef Py_ssize_t f, nf = faces.shape[0]
    cdef long i1, i2, i3, i4
    cdef double d1x, d1y, d2x, d2y, a, b, n1, n2
    gx_arr = np.empty(nf)
    gy_arr = np.empty(nf)
    cdef double[::1] gx = gx_arr
    cdef double[::1] gy = gy_arr
    for f in range(nf):
        i1 = faces[f, 0]; i2 = faces[f, 1]; i3 = faces[f, 2]; i4 = faces[f, 3]
        d1x = x[i3] - x[i1]
        d1y = y[i3] - y[i1]
        d2x = x[i4] - x[i2]
        d2y = y[i4] - y[i2]
        a = u[i3] - u[i1]
        b = u[i4] - u[i2]
        n1 = d1x * d1x + d1y * d1y
        n2 = d2x * d2x + d2y * d2y
        gx[f] = a * d1x / n1 + b * d2x / n2
        gy[f] = a * d1y / n1 + b * d2y / n2
    return gx_arr, gy_arr


def laplacian_ratio(double[::1] x, double[::1] y, long[:, ::1] faces,
                    double[::1] u, Py_ssize_t nv):
    cdef Py_ssize_t f, nf = faces.shape[0]
    cdef long i1, i2, i3, i4
    cdef double d1, d2, w13, w24
    lap_arr = np.zeros(nv)
    cdef double[::1] lap = lap_arr
    for f in range(nf):
        i1 = faces[f, 0]; i2 = faces[f, 1]; i3 = faces[f, 2]; i4 = faces[f, 3]
        d1 = hypot(x[i3] - x[i1], y[i3] - y[i1])
        d2 = hypot(x[i4] - x[i2], y[i4] - y[i2])
        w13 = d2 / d1
        w24 = d1 / d2
        lap[i1] += w13 * (u[i3] - u[i1])
        lap[i3] += w13 * (u[i1] - u[i3])
        lap[i2] += w24 * (u[i4] - u[i2])
        lap[i4] += w24 * (u[i2] - u[i4])
    return lap_arr


cdef inline double _angle_slope(double r, double p, double q,
                                double* slope) nogil:
    cdef double A = r + p
    cdef double B = r + q
    cdef double C = p + q
    cdef double c = (A * A + B * B - C * C) / (2.0 * A * B)
    cdef double ang, s, dcos
    if c > 1.0:
        c = 1.0
    elif c < -1.0:
        c = -1.0
    ang = acos(c)
    s = sqrt(max(1.0 - c * c, 0.0))
    if s < 1e-14:
        slope[0] = 0.0
        return ang
    dcos = (A + B) * (C * C - (A - B) * (A - B)) / (2.0 * A * A * B * B)
    slope[0] = -dcos / s
    return ang


def pack_sweep(double[::1] radii, long[::1] pairs_a, long[::1] pairs_b,
               long[::1] offsets, long[::1] order):
    cdef double two_pi = 2.0 * 3.14159265358979323846
    cdef double worst = 0.0, r, theta, slope, da, resid, rn
    cdef Py_ssize_t k, e
    cdef long v
    for k in range(order.shape[0]):
        v = order[k]
        r = radii[v]
        theta = 0.0
        slope = 0.0
        for e in range(offsets[k], offsets[k + 1]):
            theta += _angle_slope(r, radii[pairs_a[e]], radii[pairs_b[e]], &da)
            slope += da
        resid = theta - two_pi
        if fabs(resid) > worst:
            worst = fabs(resid)
        if slope != 0.0:
            rn = r - resid / slope
            if rn < 0.5 * r:
                rn = 0.5 * r
            elif rn > 2.0 * r:
                rn = 2.0 * r
            radii[v] = rn
    return worst


def pack_residuals(double[::1] radii, long[::1] pairs_a, long[::1] pairs_b,
                   long[::1] offsets, long[::1] order):
    cdef double two_pi = 2.0 * 3.14159265358979323846
    cdef double r, theta, da
    cdef Py_ssize_t k, e
    out_arr = np.empty(order.shape[0])
    cdef double[::1] out = out_arr
    for k in range(order.shape[0]):
        r = radii[order[k]]
        theta = 0.0
        for e in range(offsets[k], offsets[k + 1]):
            theta += _angle_slope(r, radii[pairs_a[e]], radii[pairs_b[e]], &da)
        out[k] = theta - two_pi
    return out_arr
