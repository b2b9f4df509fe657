"""Pure-Python/numpy kernel implementations.

Mirrors quadca._kernels_c exactly (same formulas, same evaluation order) so the
two backends agree to machine precision; see quadca.kernels for selection.
"""

from __future__ import annotations

import math

import numpy as np


def face_gradients(x, y, faces, u):
    """Per-face discrete gradient, returned as (gx, gy) float arrays.

    grad = (u3-u1) d1 / |d1|^2 + (u4-u2) d2 / |d2|^2 with d1 = z3-z1, d2 = z4-z2.
    """
    i1, i2, i3, i4 = faces[:, 0], faces[:, 1], faces[:, 2], faces[:, 3]
    d1x = x[i3] - x[i1]
    d1y = y[i3] - y[i1]
    d2x = x[i4] - x[i2]
    d2y = y[i4] - y[i2]
    a = u[i3] - u[i1]
    b = u[i4] - u[i2]
    n1 = d1x * d1x + d1y * d1y
    n2 = d2x * d2x + d2y * d2y
    gx = a * d1x / n1 + b * d2x / n2
    gy = a * d1y / n1 + b * d2y / n2
    return gx, gy


def laplacian_ratio(x, y, faces, u, nv):
    """Ratio-form Laplacian accumulated at every vertex.

    For each face and each diagonal slot pair, the diagonal through z gets
    weight |other diagonal| / |own diagonal| times the u-difference along it.
    """
    i1, i2, i3, i4 = faces[:, 0], faces[:, 1], faces[:, 2], faces[:, 3]
    d1 = np.hypot(x[i3] - x[i1], y[i3] - y[i1])
    d2 = np.hypot(x[i4] - x[i2], y[i4] - y[i2])
    w13 = d2 / d1
    w24 = d1 / d2
    lap = np.zeros(nv)
    np.add.at(lap, i1, w13 * (u[i3] - u[i1]))
    np.add.at(lap, i3, w13 * (u[i1] - u[i3]))
    np.add.at(lap, i2, w24 * (u[i4] - u[i2]))
    np.add.at(lap, i4, w24 * (u[i2] - u[i4]))
    return lap


def _flower_angle_and_slope(r, p, q):
    """Angle at the center circle of a tangent triple and d(angle)/dr."""
    A = r + p
    B = r + q
    C = p + q
    c = (A * A + B * B - C * C) / (2.0 * A * B)
    if c > 1.0:
        c = 1.0
    elif c < -1.0:
        c = -1.0
    ang = math.acos(c)
    s = math.sqrt(max(1.0 - c * c, 0.0))
    if s < 1e-14:
        return ang, 0.0
    dcos = (A + B) * (C * C - (A - B) * (A - B)) / (2.0 * A * A * B * B)
    return ang, -dcos / s


def pack_sweep(radii, pairs_a, pairs_b, offsets, order):
    """One Gauss-Seidel Newton sweep over `order`; returns max pre-update
    |angle sum - 2*pi|.  Updates radii in place, clamped to [r/2, 2r]."""
    two_pi = 2.0 * math.pi
    worst = 0.0
    for k in range(len(order)):
        v = order[k]
        r = radii[v]
        theta = 0.0
        slope = 0.0
        for e in range(offsets[k], offsets[k + 1]):
            ang, da = _flower_angle_and_slope(r, radii[pairs_a[e]], radii[pairs_b[e]])
            theta += ang
            slope += da
        resid = theta - two_pi
        if abs(resid) > worst:
            worst = abs(resid)
        if slope != 0.0:
            rn = r - resid / slope
            if rn < 0.5 * r:
                rn = 0.5 * r
            elif rn > 2.0 * r:
                rn = 2.0 * r
            radii[v] = rn
    return worst


def pack_residuals(radii, pairs_a, pairs_b, offsets, order):
    """Angle-sum residuals theta(v) - 2*pi for each vertex in `order`."""
    two_pi = 2.0 * math.pi
    out = np.empty(len(order))
    for k in range(len(order)):
        r = radii[order[k]]
        theta = 0.0
        for e in range(offsets[k], offsets[k + 1]):
            ang, _ = _flower_angle_and_slope(r, radii[pairs_a[e]], radii[pairs_b[e]])
            theta += ang
        out[k] = theta - two_pi
    return out
