"""Planar primitives: points, segments, orientation, angles.

Topological decisions (orientation, crossing, on-segment) are exact for any
finite double coordinates; metric quantities (angles) are double precision.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

from . import kernels
from .errors import DegenerateTriangle


class Point(NamedTuple):
    x: float
    y: float


def as_point(p) -> Point:
    pt = Point(float(p[0]), float(p[1]))
    if not (math.isfinite(pt.x) and math.isfinite(pt.y)):
        raise ValueError(f"non-finite coordinates: {p!r}")
    return pt


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self):
        object.__setattr__(self, "a", as_point(self.a))
        object.__setattr__(self, "b", as_point(self.b))
        if self.a == self.b:
            raise ValueError("zero-length segment")


def orient2d(a, b, c) -> int:
    """Sign of the signed area of (a, b, c): 1 counterclockwise, -1
    clockwise, 0 collinear.  Exact for representable inputs."""
    return kernels.orient2d(a[0], a[1], b[0], b[1], c[0], c[1])


def segments_cross(s: Segment, t: Segment) -> bool:
    """Proper crossing test: a single intersection point interior to both."""
    return kernels.segments_cross(
        s.a.x, s.a.y, s.b.x, s.b.y, t.a.x, t.a.y, t.b.x, t.b.y
    )


def segments_cross_coords(a, b, c, d) -> bool:
    return kernels.segments_cross(a[0], a[1], b[0], b[1], c[0], c[1], d[0], d[1])


def on_open_segment(a, b, p) -> bool:
    """True iff p lies strictly inside the open segment (a, b)."""
    return kernels.on_open_segment(a[0], a[1], b[0], b[1], p[0], p[1])


def strictly_inside_triangle(p, a, b, c) -> bool:
    return kernels.strictly_inside_triangle(
        p[0], p[1], a[0], a[1], b[0], b[1], c[0], c[1]
    )


def triangle_angles(a, b, c) -> tuple[float, float, float]:
    """Interior angles at a, b, c in radians.

    Raises DegenerateTriangle if the points are collinear.  Uses atan2 of
    cross/dot rather than acos, so values are stable near 0 and pi.
    """
    if orient2d(a, b, c) == 0:
        raise DegenerateTriangle(f"collinear points {a}, {b}, {c}")
    return kernels.triangle_angles(a[0], a[1], b[0], b[1], c[0], c[1])


def triangle_max_angle(a, b, c) -> float:
    if orient2d(a, b, c) == 0:
        raise DegenerateTriangle(f"collinear points {a}, {b}, {c}")
    return kernels.triangle_max_angle(a[0], a[1], b[0], b[1], c[0], c[1])


def angle_at(vertex, p, q) -> float:
    """Unsigned angle at `vertex` between rays to p and to q, in [0, pi]."""
    ux, uy = p[0] - vertex[0], p[1] - vertex[1]
    vx, vy = q[0] - vertex[0], q[1] - vertex[1]
    return math.atan2(abs(ux * vy - uy * vx), ux * vx + uy * vy)


def line_angle_max(u, v) -> float:
    """Largest of the two angles formed by the lines with directions u, v."""
    a = math.atan2(abs(u[0] * v[1] - u[1] * v[0]), u[0] * v[0] + u[1] * v[1])
    return max(a, math.pi - a)
