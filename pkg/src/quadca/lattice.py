"""Quadrilateral lattices: construction, validation, and geometric diagnostics.

A lattice is a finite, simply connected quadrangulation of a plane domain:
faces are simple quadrilaterals listed in cyclic vertex order, every interior
edge bounds exactly two faces, and the boundary edges form one cycle.  The
edge graph of such a quadrangulation is always bipartite; vertices carry a
BLACK/WHITE coloring with vertex 0 declared BLACK.  In every face the two
diagonals then connect same-colored pairs: one all-BLACK, one all-WHITE.

Orthogonality of the diagonals is *measured*, not assumed: geometry_report
returns the worst-case defect together with two regularity statistics,

* k_round: the smallest K such that every face has interior angles >= 2*pi/K
  and pairwise edge ratios <= K (reported as max over faces, floored at 4);
* skopenkov_c: the classical uniform-nondegeneracy constant (diagonal length
  ratio, reciprocal diagonal angle, and the maximum number of vertices in any
  ball of radius max_edge).

The two notions are incomparable; the generators module constructs lattices
that separate them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import cKDTree

from . import geometry as geom
from .errors import (
    DegenerateFace,
    EmptyPolyline,
    MultipleBoundaryComponents,
    NonManifoldEdge,
    NotBipartite,
    NotOrthogonal,
    ValidationFailed,
)

BLACK = 0
WHITE = 1


@dataclass(frozen=True)
class Polyline:
    """Open or closed chain of points, shape (n, 2)."""

    points: np.ndarray
    closed: bool = False

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2 or len(pts) < 2:
            raise EmptyPolyline("polyline needs at least two points")
        if not np.all(np.isfinite(pts)):
            raise EmptyPolyline("polyline has non-finite coordinates")
        object.__setattr__(self, "points", pts)

    @property
    def length(self) -> float:
        return geom.polyline_length(self.points, self.closed)

    def segments(self):
        """(M, 2, 2) array of segment endpoints."""
        pts = self.points
        segs = np.stack([pts[:-1], pts[1:]], axis=1)
        if self.closed:
            wrap = np.stack([pts[-1:], pts[:1]], axis=1)
            segs = np.concatenate([segs, wrap], axis=0)
        return segs


@dataclass(frozen=True)
class FaceMetrics:
    """Shape statistics of a single face."""

    diameter: float
    area: float
    min_edge: float
    max_edge: float
    min_diagonal: float
    max_diagonal: float
    min_angle: float
    edge_ratio: float
    defect: float
    k_round: float


@dataclass
class GeometryReport:
    """Per-face and aggregate regularity statistics of a lattice."""

    n_vertices: int
    n_faces: int
    max_edge: float
    min_edge: float
    min_diameter: float
    max_diameter: float
    k_round: float
    skopenkov_c: float
    max_defect: float
    orthogonal: bool
    ortho_tol: float
    face_defect: np.ndarray = field(repr=False)
    face_k: np.ndarray = field(repr=False)
    face_diameter: np.ndarray = field(repr=False)
    face_area: np.ndarray = field(repr=False)


class QuadLattice:
    """Validated quadrilateral lattice.  Construct via build_lattice()."""

    def __init__(self, positions, faces, color, boundary, max_edge, metadata):
        self.positions = positions
        self.faces = faces
        self.color = color
        self.boundary = boundary
        self.max_edge = max_edge
        self.metadata = dict(metadata) if metadata else {}
        for arr in (self.positions, self.faces, self.color, self.boundary):
            arr.setflags(write=False)
        self._z = None
        self._vertex_faces = None
        self._edge_faces = None
        self._boundary_mask = None
        self._black_diag_faces = None
        self._region = None

    # -- basic accessors ------------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.positions)

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    @property
    def z(self) -> np.ndarray:
        """Vertex positions as complex numbers."""
        if self._z is None:
            self._z = self.positions[:, 0] + 1j * self.positions[:, 1]
            self._z.setflags(write=False)
        return self._z

    @property
    def boundary_mask(self) -> np.ndarray:
        if self._boundary_mask is None:
            m = np.zeros(self.n_vertices, dtype=bool)
            m[self.boundary] = True
            m.setflags(write=False)
            self._boundary_mask = m
        return self._boundary_mask

    @property
    def interior(self) -> np.ndarray:
        """Indices of non-boundary vertices."""
        return np.nonzero(~self.boundary_mask)[0]

    @property
    def edge_faces(self) -> dict:
        """Undirected edge (i, j) with i < j -> list of incident face indices."""
        if self._edge_faces is None:
            self._edge_faces = _edge_face_map(self.faces)
        return self._edge_faces

    @property
    def vertex_faces(self):
        """For each vertex, incident faces sorted CCW by centroid direction."""
        if self._vertex_faces is None:
            vf = [[] for _ in range(self.n_vertices)]
            cent = self.positions[self.faces].mean(axis=1)
            for f, quad in enumerate(self.faces):
                for v in quad:
                    vf[v].append(f)
            for v, fl in enumerate(vf):
                p = self.positions[v]
                fl.sort(key=lambda f: (np.arctan2(cent[f, 1] - p[1],
                                                  cent[f, 0] - p[0]), f))
            self._vertex_faces = vf
        return self._vertex_faces

    def face_polygon(self, f: int) -> np.ndarray:
        return self.positions[self.faces[f]]

    def face_slots(self, f: int, v: int) -> np.ndarray:
        """Face f cyclically relabeled so vertex v sits in the first slot."""
        quad = self.faces[f]
        k = int(np.nonzero(quad == v)[0][0])
        return np.roll(quad, -k)

    def black_diagonal(self, f: int):
        """(b1, b3, w2, w4): the BLACK diagonal pair then the WHITE pair."""
        v1, v2, v3, v4 = self.faces[f]
        if self.color[v1] == BLACK:
            return v1, v3, v2, v4
        return v2, v4, v1, v3

    @property
    def black_diag_faces(self) -> dict:
        """frozenset({b1, b3}) -> list of faces having that BLACK diagonal."""
        if self._black_diag_faces is None:
            m = {}
            for f in range(self.n_faces):
                b1, b3, _, _ = self.black_diagonal(f)
                m.setdefault(frozenset((int(b1), int(b3))), []).append(f)
            self._black_diag_faces = m
        return self._black_diag_faces

    @property
    def region(self) -> np.ndarray:
        """Boundary polygon (CCW) enclosing the lattice region."""
        if self._region is None:
            self._region = self.positions[self.boundary]
        return self._region

    def boundary_polyline(self) -> Polyline:
        return Polyline(self.positions[self.boundary], closed=True)

    def __repr__(self):
        return (f"QuadLattice(vertices={self.n_vertices}, faces={self.n_faces},"
                f" boundary={len(self.boundary)}, max_edge={self.max_edge:.6g})")


def _edge_face_map(faces) -> dict:
    ef = {}
    for f, quad in enumerate(faces):
        for k in range(4):
            a = int(quad[k])
            b = int(quad[(k + 1) % 4])
            key = (a, b) if a < b else (b, a)
            ef.setdefault(key, []).append(f)
    return ef


def two_color(positions, faces) -> np.ndarray:
    """Proper 2-coloring of the edge graph by BFS; vertex 0 is BLACK.

    Raises NotBipartite on any odd cycle.  (For valid quadrangulations the
    coloring always exists: every cycle decomposes into 4-cycles.)
    """
    faces = np.asarray(faces, dtype=np.int64)
    nv = len(positions)
    adj = [[] for _ in range(nv)]
    for quad in faces:
        for k in range(4):
            a, b = int(quad[k]), int(quad[(k + 1) % 4])
            adj[a].append(b)
            adj[b].append(a)
    color = np.full(nv, 255, dtype=np.uint8)
    for start in range(nv):
        if color[start] != 255 or not adj[start]:
            continue
        color[start] = BLACK if start == 0 else BLACK
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if color[w] == 255:
                    color[w] = WHITE - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    raise NotBipartite(f"odd cycle through vertices {v}, {w}")
    return color


def build_lattice(positions, faces, metadata=None) -> QuadLattice:
    """Validate raw arrays and assemble a QuadLattice.

    positions: (V, 2) floats; faces: (F, 4) vertex indices in cyclic order.
    Checks: index range, distinct vertices per face, geometric simplicity and
    nonzero area, manifold edges, a single boundary cycle (normalized CCW),
    disk Euler characteristic, non-overlapping faces (area balance), and
    bipartiteness.
    """
    positions = np.ascontiguousarray(np.asarray(positions, dtype=float))
    faces = np.ascontiguousarray(np.asarray(faces, dtype=np.int64))
    if positions.ndim != 2 or positions.shape[1] != 2:
        raise ValidationFailed("positions must have shape (V, 2)")
    if not np.all(np.isfinite(positions)):
        raise ValidationFailed("positions contain non-finite values")
    if faces.ndim != 2 or faces.shape[1] != 4 or len(faces) == 0:
        raise ValidationFailed("faces must have shape (F, 4) with F >= 1")
    nv = len(positions)
    if faces.min() < 0 or faces.max() >= nv:
        raise ValidationFailed("face vertex index out of range")

    used = np.zeros(nv, dtype=bool)
    used[faces.ravel()] = True
    if not used.all():
        raise ValidationFailed("unreferenced vertices present")

    for f, quad in enumerate(faces):
        if len(set(int(v) for v in quad)) != 4:
            raise DegenerateFace(f"face {f} repeats a vertex")
        poly = positions[quad]
        area = geom.polygon_signed_area(poly)
        if area == 0.0:
            raise DegenerateFace(f"face {f} has zero area")
        if not geom.polygon_is_simple(poly):
            raise DegenerateFace(f"face {f} is self-intersecting")

    ef = _edge_face_map(faces)
    for (a, b), fl in ef.items():
        if len(fl) > 2:
            raise NonManifoldEdge(f"edge ({a}, {b}) bounds {len(fl)} faces")

    boundary = _assemble_boundary(ef, nv)

    # disk Euler characteristic: V - E + F = 1
    if nv - len(ef) + len(faces) != 1:
        raise MultipleBoundaryComponents(
            "Euler characteristic is not that of a disk")

    # overlapping faces would break the area balance
    face_area = np.array(
        [abs(geom.polygon_signed_area(positions[q])) for q in faces])
    region_area = abs(geom.polygon_signed_area(positions[boundary]))
    scale = max(region_area, face_area.sum())
    if abs(face_area.sum() - region_area) > 1e-8 * scale:
        raise ValidationFailed(
            "face areas do not tile the boundary region (overlap or gap)")

    if geom.polygon_signed_area(positions[boundary]) < 0:
        boundary = boundary[::-1].copy()

    color = two_color(positions, faces)
    for f, quad in enumerate(faces):
        c = color[quad]
        if c[0] != c[2] or c[1] != c[3] or c[0] == c[1]:
            raise NotBipartite(f"face {f} diagonals are not color-pure")

    edge_vec = positions[faces] - positions[np.roll(faces, -1, axis=1)]
    max_edge = float(np.max(np.hypot(edge_vec[:, :, 0], edge_vec[:, :, 1])))

    return QuadLattice(positions, faces, color, boundary, max_edge, metadata)


def _assemble_boundary(edge_faces: dict, nv: int) -> np.ndarray:
    """Orient the 1-face edges into a single cycle."""
    nbr = {}
    n_bedges = 0
    for (a, b), fl in edge_faces.items():
        if len(fl) == 1:
            n_bedges += 1
            nbr.setdefault(a, []).append(b)
            nbr.setdefault(b, []).append(a)
    if n_bedges == 0:
        raise MultipleBoundaryComponents("no boundary edges (closed surface?)")
    for v, ws in nbr.items():
        if len(ws) != 2:
            raise MultipleBoundaryComponents(
                f"boundary pinches at vertex {v} ({len(ws)} boundary edges)")
    start = min(nbr)
    cycle = [start]
    prev, cur = None, start
    while True:
        a, b = nbr[cur]
        nxt = b if a == prev else a
        if nxt == start:
            break
        cycle.append(nxt)
        prev, cur = cur, nxt
        if len(cycle) > n_bedges:
            raise MultipleBoundaryComponents("boundary walk does not close")
    if len(cycle) != n_bedges:
        raise MultipleBoundaryComponents(
            f"{n_bedges - len(cycle)} boundary edges outside the main cycle")
    return np.asarray(cycle, dtype=np.int64)


# -- per-face metrics ----------------------------------------------------------


def face_metrics(Q: QuadLattice, f: int) -> FaceMetrics:
    """Shape statistics of face f; assumes the face is simple (validated)."""
    poly = Q.face_polygon(f)
    d1 = poly[2] - poly[0]
    d2 = poly[3] - poly[1]
    L1 = float(np.hypot(*d1))
    L2 = float(np.hypot(*d2))
    edges = np.array([np.hypot(*(poly[(k + 1) % 4] - poly[k])) for k in range(4)])
    diffs = poly[:, None, :] - poly[None, :, :]
    diameter = float(np.sqrt(np.max(np.sum(diffs ** 2, axis=2))))
    area = abs(geom.polygon_signed_area(poly))
    angles = geom.interior_angles_ccw(poly)
    min_angle = float(angles.min())
    edge_ratio = float(edges.max() / edges.min())
    defect = abs(float(d1 @ d2)) / (L1 * L2)
    k_round = max(2 * np.pi / min_angle, edge_ratio, 4.0)
    return FaceMetrics(
        diameter=diameter,
        area=float(area),
        min_edge=float(edges.min()),
        max_edge=float(edges.max()),
        min_diagonal=min(L1, L2),
        max_diagonal=max(L1, L2),
        min_angle=min_angle,
        edge_ratio=edge_ratio,
        defect=defect,
        k_round=float(k_round),
    )


def geometry_report(Q: QuadLattice, ortho_tol: float = 1e-9) -> GeometryReport:
    """Aggregate regularity report; never raises, see .orthogonal flag."""
    nf = Q.n_faces
    defect = np.empty(nf)
    face_k = np.empty(nf)
    diam = np.empty(nf)
    area = np.empty(nf)
    min_edge = np.inf
    diag_stat = 1.0
    for f in range(nf):
        m = face_metrics(Q, f)
        defect[f] = m.defect
        face_k[f] = m.k_round
        diam[f] = m.diameter
        area[f] = m.area
        min_edge = min(min_edge, m.min_edge)
        ratio = m.max_diagonal / m.min_diagonal
        # angle between diagonal lines, in (0, pi/2]
        cosang = min(1.0, m.defect)
        ang = float(np.arccos(cosang))
        if ang <= 0:
            diag_stat = np.inf
        else:
            diag_stat = max(diag_stat, ratio, 1.0 / ang)
    tree = cKDTree(Q.positions)
    counts = tree.query_ball_point(Q.positions, r=Q.max_edge * (1 + 1e-12),
                                   return_length=True)
    skopenkov_c = float(max(diag_stat, counts.max()))
    max_defect = float(defect.max())
    return GeometryReport(
        n_vertices=Q.n_vertices,
        n_faces=nf,
        max_edge=Q.max_edge,
        min_edge=float(min_edge),
        min_diameter=float(diam.min()),
        max_diameter=float(diam.max()),
        k_round=float(face_k.max()),
        skopenkov_c=skopenkov_c,
        max_defect=max_defect,
        orthogonal=bool(max_defect <= ortho_tol),
        ortho_tol=ortho_tol,
        face_defect=defect,
        face_k=face_k,
        face_diameter=diam,
        face_area=area,
    )


def require_orthogonal(Q: QuadLattice, ortho_tol: float = 1e-9) -> None:
    """Raise NotOrthogonal if any face's diagonal defect exceeds ortho_tol."""
    z = Q.z
    f = Q.faces
    d1 = z[f[:, 2]] - z[f[:, 0]]
    d2 = z[f[:, 3]] - z[f[:, 1]]
    defect = np.abs(d1.real * d2.real + d1.imag * d2.imag) / (
        np.abs(d1) * np.abs(d2))
    worst = int(np.argmax(defect))
    if defect[worst] > ortho_tol:
        raise NotOrthogonal(
            f"face {worst} has diagonal defect {defect[worst]:.3e} > {ortho_tol:.3e}")


def neighborhood(Q: QuadLattice, f: int) -> np.ndarray:
    """Indices of all faces sharing at least one vertex with face f (incl. f)."""
    vf = Q.vertex_faces
    out = set()
    for v in Q.faces[f]:
        out.update(vf[int(v)])
    return np.asarray(sorted(out), dtype=np.int64)


# -- polyline comparisons --------------------------------------------------------


def hausdorff_distance(a: Polyline, b: Polyline, sample_step: float) -> float:
    """Symmetric Hausdorff distance between two polylines.

    Each polyline is densified at spacing <= sample_step and measured against
    the other's exact segments, so the result is accurate to within
    sample_step.
    """
    if sample_step <= 0:
        raise ValueError("sample_step must be positive")
    pa = geom.densify_polyline(a.points, a.closed, sample_step)
    pb = geom.densify_polyline(b.points, b.closed, sample_step)
    sa = a.segments()
    sb = b.segments()
    d_ab = geom.points_to_segments_distance(pa, sb[:, 0], sb[:, 1]).max()
    d_ba = geom.points_to_segments_distance(pb, sa[:, 0], sa[:, 1]).max()
    return float(max(d_ab, d_ba))


@dataclass(frozen=True)
class CurveCover:
    """Faces whose closed region meets a polyline, with their diameter sum."""

    faces: np.ndarray
    diam_sum: float


def curve_cover(Q: QuadLattice, gamma: Polyline) -> CurveCover:
    """All faces whose closed region intersects gamma (inclusive contact)."""
    segs = gamma.segments()
    smin = segs.min(axis=1)
    smax = segs.max(axis=1)
    hit = []
    diam_sum = 0.0
    for f in range(Q.n_faces):
        poly = Q.face_polygon(f)
        pmin = poly.min(axis=0)
        pmax = poly.max(axis=0)
        found = False
        for s in range(len(segs)):
            if not geom.bbox_overlap(pmin, pmax, smin[s], smax[s]):
                continue
            p1, p2 = segs[s, 0], segs[s, 1]
            if geom.point_in_polygon(p1, poly) or geom.point_in_polygon(p2, poly):
                found = True
                break
            for k in range(4):
                if geom.segments_intersect(p1, p2, poly[k], poly[(k + 1) % 4]):
                    found = True
                    break
            if found:
                break
        if found:
            hit.append(f)
            diffs = poly[:, None, :] - poly[None, :, :]
            diam_sum += float(np.sqrt(np.max(np.sum(diffs ** 2, axis=2))))
    return CurveCover(np.asarray(hit, dtype=np.int64), diam_sum)
