"""Pure-Python geometric kernels.

Orientation uses a floating-point filter with an exact rational fallback, so
the returned sign is always the true sign of the determinant for any finite
double inputs.  Everything downstream (crossing tests, point-on-segment,
point-in-triangle) is built from that exact sign.  Angle computations are
plain double precision via atan2, which is stable for near-degenerate
triangles where acos of a ratio would not be.

A compiled drop-in replacement lives in _kernels.pyx; this module is the
fallback selected at import by minmaxtri.kernels.
"""

import math
from fractions import Fraction

# Machine epsilon discovery, same scheme as the classic adaptive predicates:
# find the largest power of two such that 1 + eps rounds away from 1.
_every_other = True
_epsilon = 1.0
_check = 1.0
while True:
    _lastcheck = _check
    _epsilon *= 0.5
    _check = 1.0 + _epsilon
    if _check == 1.0 or _check == _lastcheck:
        break

# Error bound for the orientation filter.
_ccwerrbound_a = (3.0 + 16.0 * _epsilon) * _epsilon


def _orient2d_exact(ax, ay, bx, by, cx, cy):
    det = (Fraction(ax) - Fraction(cx)) * (Fraction(by) - Fraction(cy)) - (
        Fraction(ay) - Fraction(cy)
    ) * (Fraction(bx) - Fraction(cx))
    if det > 0:
        return 1
    if det < 0:
        return -1
    return 0


def orient2d(ax, ay, bx, by, cx, cy):
    """Exact sign of the signed area of triangle (a, b, c): 1, 0 or -1."""
    detleft = (ax - cx) * (by - cy)
    detright = (ay - cy) * (bx - cx)
    det = detleft - detright

    if detleft > 0.0:
        if detright <= 0.0:
            return (det > 0.0) - (det < 0.0)
        detsum = detleft + detright
    elif detleft < 0.0:
        if detright >= 0.0:
            return (det > 0.0) - (det < 0.0)
        detsum = -detleft - detright
    else:
        return (det > 0.0) - (det < 0.0)

    errbound = _ccwerrbound_a * detsum
    if det >= errbound or -det >= errbound:
        return (det > 0.0) - (det < 0.0)
    return _orient2d_exact(ax, ay, bx, by, cx, cy)


def on_open_segment(ax, ay, bx, by, px, py):
    """True iff p lies strictly inside the open segment (a, b)."""
    if orient2d(ax, ay, bx, by, px, py) != 0:
        return False
    if ax != bx:
        return (ax < px < bx) or (bx < px < ax)
    return (ay < py < by) or (by < py < ay)


def segments_cross(ax, ay, bx, by, cx, cy, dx, dy):
    """True iff open segments (a, b) and (c, d) cross at a single interior
    point of both.  Shared endpoints and endpoint-touching do not count."""
    o1 = orient2d(ax, ay, bx, by, cx, cy)
    o2 = orient2d(ax, ay, bx, by, dx, dy)
    if o1 * o2 >= 0:
        return False
    o3 = orient2d(cx, cy, dx, dy, ax, ay)
    o4 = orient2d(cx, cy, dx, dy, bx, by)
    return o3 * o4 < 0


def strictly_inside_triangle(px, py, ax, ay, bx, by, cx, cy):
    """True iff p is strictly interior to triangle (a, b, c)."""
    s1 = orient2d(ax, ay, bx, by, px, py)
    s2 = orient2d(bx, by, cx, cy, px, py)
    s3 = orient2d(cx, cy, ax, ay, px, py)
    return (s1 > 0 and s2 > 0 and s3 > 0) or (s1 < 0 and s2 < 0 and s3 < 0)


def _corner_angle(ux, uy, vx, vy):
    return math.atan2(abs(ux * vy - uy * vx), ux * vx + uy * vy)


def triangle_angles(ax, ay, bx, by, cx, cy):
    """Interior angles at a, b, c of a nondegenerate triangle, in radians."""
    aa = _corner_angle(bx - ax, by - ay, cx - ax, cy - ay)
    bb = _corner_angle(cx - bx, cy - by, ax - bx, ay - by)
    cc = _corner_angle(ax - cx, ay - cy, bx - cx, by - cy)
    return (aa, bb, cc)


def triangle_max_angle(ax, ay, bx, by, cx, cy):
    aa, bb, cc = triangle_angles(ax, ay, bx, by, cx, cy)
    return max(aa, bb, cc)
