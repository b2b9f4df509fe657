"""Exception types raised across the package.

Everything derives from QuadcaError so callers (and the CLI) can map the
whole family to a validation exit code in one except clause.
"""


class QuadcaError(Exception):
    """Base class for all package errors."""


# -- lattice construction / validation ---------------------------------------

class DegenerateFace(QuadcaError):
    """A face has repeated vertices, zero area, or self-intersecting edges."""


class NonManifoldEdge(QuadcaError):
    """An edge is shared by more than two faces."""


class MultipleBoundaryComponents(QuadcaError):
    """The boundary edges do not assemble into a single cycle."""


class NotBipartite(QuadcaError):
    """The edge graph admits no proper two-coloring."""


class NotOrthogonal(QuadcaError):
    """A face's diagonals fail the orthogonality tolerance."""


class EmptyPolyline(QuadcaError):
    """A polyline with no segments was supplied."""


# -- operators ----------------------------------------------------------------

class NonFiniteValue(QuadcaError):
    """A field evaluation produced NaN or infinity."""


class DegenerateDiagonal(QuadcaError):
    """A face diagonal has zero length."""


class DisconnectedDiagonalGraph(QuadcaError):
    """A single-color diagonal graph is disconnected."""


class InvalidPath(QuadcaError):
    """A vertex path is not a chain of same-color face diagonals."""


# -- solver -------------------------------------------------------------------

class ZeroDiagonal(QuadcaError):
    """A face diagonal of zero length makes the edge weight undefined."""


class DisconnectedInteriorComponent(QuadcaError):
    """An interior component has no path to the boundary."""


# -- generators ---------------------------------------------------------------

class EmptyDomain(QuadcaError):
    """Requested mesh dimensions admit no faces."""


class CycleLengthMismatch(QuadcaError):
    """Welded trees have different sizes."""


class NonSphericalResult(QuadcaError):
    """Welded complex failed the closed-surface checks."""


class NoConvergence(QuadcaError):
    """Circle packing iteration did not reach tolerance."""


class InvalidBoundaryRadii(QuadcaError):
    """Boundary radii must be finite and positive."""


class InvalidTriangulation(QuadcaError):
    """Triangle list fails disk-triangulation validation."""


class ClippedToEmpty(QuadcaError):
    """Clipping removed every quadrilateral."""


class ValidationFailed(QuadcaError):
    """Derived quadrilaterals do not form a valid lattice."""


# -- harness ------------------------------------------------------------------

class SquareTooSmall(QuadcaError):
    """Test square side must exceed the lattice mesh size."""


class SquareNotInterior(QuadcaError):
    """Test square must lie inside the lattice region."""


class BallOutOfRange(QuadcaError):
    """Probe ball radius must exceed max(|z - w|, M(Q))."""


# -- io -----------------------------------------------------------------------

class ParseError(QuadcaError):
    """Malformed mesh/table/config document."""


class ValidationError(QuadcaError):
    """Loaded document fails lattice validation (wraps the lattice error)."""
