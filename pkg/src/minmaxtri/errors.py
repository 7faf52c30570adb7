"""Exception hierarchy shared across the package."""


class MinMaxTriError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateTriangle(MinMaxTriError):
    """Three collinear points where a proper triangle is required."""


class InvalidTriangulation(MinMaxTriError):
    """Triangle set is not a valid triangulation of its point set."""


class MismatchedPointSet(MinMaxTriError):
    """Two triangulations compared over different point sets."""


class NonSimplePolygon(MinMaxTriError):
    """Polygon boundary self-intersects or degenerates."""


class NoTriangulation(MinMaxTriError):
    """Retriangulation failed; cannot happen for a simple polygon."""


class TooLarge(MinMaxTriError):
    """Input exceeds an enumeration guardrail."""


class CapExceeded(MinMaxTriError):
    """Enumeration produced more results than the caller's cap."""


class EdgeAlreadyPresent(MinMaxTriError):
    """Requested insertion endpoints are already adjacent."""


class VertexOnSegment(MinMaxTriError):
    """Insertion segment passes exactly through a third vertex."""


class SegmentOutsideHull(MinMaxTriError):
    """Insertion segment crosses no edge; defensive, should not occur."""


class InvalidParams(MinMaxTriError):
    """Instance parameters out of range or inconsistent."""


class ClaimViolated(MinMaxTriError):
    """Generated instance fails one of the required angle inequalities."""

    def __init__(self, message, failed=()):
        super().__init__(message)
        self.failed = tuple(failed)


class CannotPlace(MinMaxTriError):
    """No apex position satisfies the requested angle margin."""


class PerturbationBreaksClaim(MinMaxTriError):
    """Perturbed instance no longer verifies; reduce the perturbation."""


class RoundLimitExceeded(MinMaxTriError):
    """Optimization loop exceeded its round guardrail."""
