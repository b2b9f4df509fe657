"""Low-level planar geometry predicates and helpers.

Conventions: points are (x, y) pairs (tuples or length-2 arrays); polygons are
(n, 2) arrays in cyclic order; all boundary contact is inclusive (closed sets).
"""

from __future__ import annotations

import numpy as np


def orient(a, b, c) -> float:
    """Twice the signed area of triangle abc (>0 for counterclockwise)."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def on_segment(p, a, b) -> bool:
    """True if p lies on the closed segment ab (collinearity assumed checked)."""
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def segments_intersect(p1, p2, q1, q2) -> bool:
    """Closed-segment intersection test, endpoint/touching contact included."""
    d1 = orient(q1, q2, p1)
    d2 = orient(q1, q2, p2)
    d3 = orient(p1, p2, q1)
    d4 = orient(p1, p2, q2)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and (
        (d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)
    ):
        return True
    if d1 == 0 and on_segment(p1, q1, q2):
        return True
    if d2 == 0 and on_segment(p2, q1, q2):
        return True
    if d3 == 0 and on_segment(q1, p1, p2):
        return True
    if d4 == 0 and on_segment(q2, p1, p2):
        return True
    return False


def segments_cross_interior(p1, p2, q1, q2) -> bool:
    """True only for proper crossings (intersection point interior to both)."""
    d1 = orient(q1, q2, p1)
    d2 = orient(q1, q2, p2)
    d3 = orient(p1, p2, q1)
    d4 = orient(p1, p2, q2)
    return ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and (
        (d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)
    )


def polygon_signed_area(poly) -> float:
    """Shoelace signed area (positive for counterclockwise order)."""
    x = np.asarray(poly, dtype=float)[:, 0]
    y = np.asarray(poly, dtype=float)[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def point_in_polygon(p, poly) -> bool:
    """Closed-region containment (boundary points count as inside)."""
    poly = np.asarray(poly, dtype=float)
    n = len(poly)
    inside = False
    px, py = float(p[0]), float(p[1])
    for i in range(n):
        a = poly[i]
        b = poly[(i + 1) % n]
        if orient(a, b, (px, py)) == 0 and on_segment((px, py), a, b):
            return True
        if (a[1] > py) != (b[1] > py):
            xcross = a[0] + (py - a[1]) * (b[0] - a[0]) / (b[1] - a[1])
            if px < xcross:
                inside = not inside
    return inside


def polygon_is_simple(poly) -> bool:
    """Simplicity check for a small polygon: non-adjacent edges must not meet,
    adjacent edges must meet only at the shared vertex."""
    poly = np.asarray(poly, dtype=float)
    n = len(poly)
    edges = [(poly[i], poly[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            a1, a2 = edges[i]
            b1, b2 = edges[j]
            adjacent = (j == i + 1) or (i == 0 and j == n - 1)
            if adjacent:
                # shared endpoint allowed; any further contact is degenerate
                shared = a2 if j == i + 1 else a1
                other_a = a1 if j == i + 1 else a2
                other_b = b2 if j == i + 1 else b1
                if orient(b1, b2, other_a) == 0 and on_segment(other_a, b1, b2):
                    if not np.array_equal(other_a, shared):
                        return False
                if orient(a1, a2, other_b) == 0 and on_segment(other_b, a1, a2):
                    if not np.array_equal(other_b, shared):
                        return False
            elif segments_intersect(a1, a2, b1, b2):
                return False
    return True


def _interior_angle(prev, cur, nxt) -> float:
    """CCW sweep from the outgoing edge (cur->nxt) to the incoming (cur->prev)."""
    a = (prev[0] - cur[0], prev[1] - cur[1])
    b = (nxt[0] - cur[0], nxt[1] - cur[1])
    ang = np.arctan2(
        b[0] * a[1] - b[1] * a[0], a[0] * b[0] + a[1] * b[1]
    )
    if ang < 0:
        ang += 2 * np.pi
    return float(ang)


def interior_angles_ccw(poly) -> np.ndarray:
    """Interior angles of a simple polygon, normalizing orientation to CCW."""
    poly = np.asarray(poly, dtype=float)
    if polygon_signed_area(poly) < 0:
        poly = poly[::-1]
    n = len(poly)
    return np.array(
        [_interior_angle(poly[i - 1], poly[i], poly[(i + 1) % n]) for i in range(n)]
    )


def point_segment_distance(p, a, b) -> float:
    """Euclidean distance from point p to closed segment ab."""
    ax, ay = a[0], a[1]
    bx, by = b[0], b[1]
    px, py = p[0], p[1]
    dx, dy = bx - ax, by - ay
    L2 = dx * dx + dy * dy
    if L2 == 0.0:
        return float(np.hypot(px - ax, py - ay))
    t = ((px - ax) * dx + (py - ay) * dy) / L2
    t = min(1.0, max(0.0, t))
    return float(np.hypot(px - (ax + t * dx), py - (ay + t * dy)))


def points_to_segments_distance(points: np.ndarray, segs_a: np.ndarray,
                                segs_b: np.ndarray) -> np.ndarray:
    """Min distance from each point to any of the segments (vectorized).

    points: (N, 2); segs_a, segs_b: (M, 2) segment endpoints.
    Returns (N,) array.  Chunked over points to bound memory.
    """
    points = np.asarray(points, dtype=float)
    d = segs_b - segs_a  # (M, 2)
    L2 = np.einsum("ij,ij->i", d, d)
    L2 = np.where(L2 == 0.0, 1.0, L2)
    out = np.empty(len(points))
    chunk = max(1, int(4e6) // max(1, len(segs_a)))
    for s in range(0, len(points), chunk):
        p = points[s : s + chunk]  # (n, 2)
        w = p[:, None, :] - segs_a[None, :, :]  # (n, M, 2)
        t = np.einsum("nmj,mj->nm", w, d) / L2[None, :]
        np.clip(t, 0.0, 1.0, out=t)
        proj = segs_a[None, :, :] + t[:, :, None] * d[None, :, :]
        dist = np.sqrt(np.sum((p[:, None, :] - proj) ** 2, axis=2))
        out[s : s + chunk] = dist.min(axis=1)
    return out


def point_polygon_distance(p, poly) -> float:
    """Distance from p to the closed polygonal region (0 if inside)."""
    if point_in_polygon(p, poly):
        return 0.0
    poly = np.asarray(poly, dtype=float)
    n = len(poly)
    return min(
        point_segment_distance(p, poly[i], poly[(i + 1) % n]) for i in range(n)
    )


def densify_polyline(pts: np.ndarray, closed: bool, step: float) -> np.ndarray:
    """Sample points along a polyline at spacing <= step (vertices included)."""
    pts = np.asarray(pts, dtype=float)
    segs = list(zip(pts[:-1], pts[1:]))
    if closed and len(pts) > 1:
        segs.append((pts[-1], pts[0]))
    out = [pts[0]]
    for a, b in segs:
        L = float(np.hypot(*(b - a)))
        k = max(1, int(np.ceil(L / step)))
        for i in range(1, k + 1):
            out.append(a + (b - a) * (i / k))
    return np.asarray(out)


def polyline_length(pts: np.ndarray, closed: bool) -> float:
    pts = np.asarray(pts, dtype=float)
    L = float(np.sum(np.hypot(*(pts[1:] - pts[:-1]).T))) if len(pts) > 1 else 0.0
    if closed and len(pts) > 2:
        L += float(np.hypot(*(pts[0] - pts[-1])))
    return L


def bbox_overlap(amin, amax, bmin, bmax) -> bool:
    return (
        amin[0] <= bmax[0]
        and bmin[0] <= amax[0]
        and amin[1] <= bmax[1]
        and bmin[1] <= amax[1]
    )
