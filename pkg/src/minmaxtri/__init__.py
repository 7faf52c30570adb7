"""Min-max angle triangulation by edge insertion.

The package provides exact-predicate planar geometry, a validated
triangulation type, optimal polygon retriangulation by dynamic programming,
the edge-insertion local search, a brute-force oracle for small point sets,
and a generator plus exhaustive verifier for an adversarial family of
triangulations on which the only improving insertion joins the two most
combinatorially distant vertices.
"""

from .kernels import BACKEND
from .errors import (
    CannotPlace,
    CapExceeded,
    ClaimViolated,
    DegenerateTriangle,
    EdgeAlreadyPresent,
    InvalidParams,
    InvalidTriangulation,
    MinMaxTriError,
    MismatchedPointSet,
    NonSimplePolygon,
    NoTriangulation,
    PerturbationBreaksClaim,
    RoundLimitExceeded,
    SegmentOutsideHull,
    TooLarge,
    VertexOnSegment,
)
from .geometry import Point, Segment, orient2d, segments_cross, triangle_angles

__version__ = "0.1.0"
