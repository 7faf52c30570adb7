"""Optimal retriangulation of a polygonal region.

dp_retriangulate minimizes the maximum triangle angle by interval dynamic
programming over the boundary sequence; enumerate_polygon_triangulations
lists every triangulation of a small polygon and serves as the test oracle.

Feasibility is decided with exact predicates only: a diagonal must leave
both endpoints through the interior wedge, pass through no vertex, and cross
no boundary edge; a candidate triangle must additionally be correctly
oriented and empty of boundary vertices.  The core works on the boundary
sequence rather than the vertex set, so it also accepts the weakly simple
boundaries produced by channel extraction, where a vertex may appear twice
(a spur hanging into the region after surrounding edges were removed).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NonSimplePolygon, NoTriangulation, TooLarge
from .geometry import Point, as_point
from .kernels import (
    on_open_segment as _on_seg,
    orient2d as _orient,
    segments_cross as _cross,
    strictly_inside_triangle as _inside,
    triangle_max_angle as _tri_max,
)

ENUMERATION_MAX_VERTICES = 14


def _orient_pts(a: Point, b: Point, c: Point) -> int:
    return _orient(a[0], a[1], b[0], b[1], c[0], c[1])


def _signed_area2(pts: Sequence[Point]) -> Fraction:
    total = Fraction(0)
    k = len(pts)
    for t in range(k):
        ax, ay = pts[t]
        bx, by = pts[(t + 1) % k]
        total += Fraction(ax) * Fraction(by) - Fraction(bx) * Fraction(ay)
    return total


@dataclass(frozen=True)
class Polygon:
    """Polygonal region given by its counterclockwise boundary; ids index the
    parent point set.  Strict construction demands a simple polygon; channel
    extraction may pass allow_repeats=True for boundaries that traverse a
    spur vertex twice."""

    ids: tuple[int, ...]
    pts: tuple[Point, ...]

    def __init__(self, ids: Sequence[int], pts: Sequence, allow_repeats: bool = False):
        ids = tuple(int(i) for i in ids)
        pts = tuple(as_point(p) for p in pts)
        if len(ids) != len(pts):
            raise ValueError("ids and points length mismatch")
        if len(ids) < 3:
            raise NonSimplePolygon("polygon needs at least 3 vertices")
        if not allow_repeats and (
            len(set(ids)) != len(ids) or len(set(pts)) != len(pts)
        ):
            raise NonSimplePolygon("repeated vertex")
        if _signed_area2(pts) <= 0:
            raise NonSimplePolygon("boundary must be counterclockwise")
        _check_boundary(pts, strict=not allow_repeats)
        object.__setattr__(self, "ids", ids)
        object.__setattr__(self, "pts", pts)

    def __len__(self) -> int:
        return len(self.ids)


def _check_boundary(pts: Sequence[Point], strict: bool) -> None:
    k = len(pts)
    for s in range(k):
        a, b = pts[s], pts[(s + 1) % k]
        if a == b:
            raise NonSimplePolygon("zero-length boundary edge")
        if strict:
            c = pts[(s + 2) % k]
            if _orient_pts(a, b, c) == 0:
                ux, uy = b[0] - a[0], b[1] - a[1]
                vx, vy = c[0] - b[0], c[1] - b[1]
                if ux * vx + uy * vy < 0:
                    raise NonSimplePolygon("boundary spike")
        for t in range(s + 1, k):
            c, d = pts[t], pts[(t + 1) % k]
            adjacent = (t == s + 1) or (s == 0 and t == k - 1)
            if adjacent:
                continue
            if _cross(a[0], a[1], b[0], b[1], c[0], c[1], d[0], d[1]):
                raise NonSimplePolygon(f"boundary edges {s} and {t} cross")
        for t in range(k):
            if t in (s, (s + 1) % k):
                continue
            p = pts[t]
            if p == a or p == b:
                continue
            if _on_seg(a[0], a[1], b[0], b[1], p[0], p[1]):
                raise NonSimplePolygon(f"vertex {t} lies on boundary edge {s}")


class _Region:
    """Feasibility context for the interval recursion over a boundary
    sequence (counterclockwise, repeats permitted)."""

    def __init__(self, pts: Sequence[Point]):
        self.pts = tuple(pts)
        self.k = len(self.pts)
        self._diag: dict[tuple[int, int], bool] = {}

    def _in_cone(self, a: int, b: int) -> bool:
        pts = self.pts
        k = self.k
        a_prev = pts[(a - 1) % k]
        a_pt = pts[a]
        a_next = pts[(a + 1) % k]
        b_pt = pts[b]
        if a_prev == a_next:
            # spur tip: the region surrounds the slit toward a_prev
            if _orient_pts(a_pt, a_prev, b_pt) != 0:
                return True
            ux, uy = a_prev[0] - a_pt[0], a_prev[1] - a_pt[1]
            vx, vy = b_pt[0] - a_pt[0], b_pt[1] - a_pt[1]
            return ux * vx + uy * vy < 0
        if _orient_pts(a_prev, a_pt, a_next) >= 0:
            # convex or straight corner
            return (
                _orient_pts(a_pt, b_pt, a_prev) > 0
                and _orient_pts(b_pt, a_pt, a_next) > 0
            )
        # reflex corner: anywhere except the exterior wedge
        return not (
            _orient_pts(a_pt, b_pt, a_next) >= 0
            and _orient_pts(b_pt, a_pt, a_prev) >= 0
        )

    def link_ok(self, i: int, j: int) -> bool:
        """Positions i < j usable as a triangle side: a boundary edge or a
        diagonal interior to the region."""
        if j == i + 1 or (i == 0 and j == self.k - 1):
            return True
        key = (i, j)
        cached = self._diag.get(key)
        if cached is not None:
            return cached
        ok = self._diagonal_ok(i, j)
        self._diag[key] = ok
        return ok

    def _diagonal_ok(self, i: int, j: int) -> bool:
        pts = self.pts
        k = self.k
        a, b = pts[i], pts[j]
        if a == b:
            return False
        if not (self._in_cone(i, j) and self._in_cone(j, i)):
            return False
        for w in range(k):
            p = pts[w]
            if p == a or p == b:
                continue
            if _on_seg(a[0], a[1], b[0], b[1], p[0], p[1]):
                return False
        for t in range(k):
            c, d = pts[t], pts[(t + 1) % k]
            if c in (a, b) or d in (a, b):
                continue
            if _cross(a[0], a[1], b[0], b[1], c[0], c[1], d[0], d[1]):
                return False
        return True

    def triangle_ok(self, i: int, m: int, j: int) -> bool:
        pts = self.pts
        a, b, c = pts[i], pts[m], pts[j]
        if _orient_pts(a, b, c) <= 0:
            return False
        for w in range(self.k):
            p = pts[w]
            if p == a or p == b or p == c:
                continue
            if _inside(p[0], p[1], a[0], a[1], b[0], b[1], c[0], c[1]):
                return False
        return True

    def max_angle(self, i: int, m: int, j: int) -> float:
        a, b, c = self.pts[i], self.pts[m], self.pts[j]
        return _tri_max(a[0], a[1], b[0], b[1], c[0], c[1])


def retriangulate_sequence(
    ids: Sequence[int], pts: Sequence[Point]
) -> tuple[list[tuple[int, int, int]], float]:
    """Min-max angle triangulation of the region bounded by the given
    counterclockwise boundary sequence.  Split-vertex ties break toward the
    smallest position, making the result deterministic."""
    k = len(pts)
    if k == 3:
        region = _Region(pts)
        return [(ids[0], ids[1], ids[2])], region.max_angle(0, 1, 2)

    region = _Region(pts)
    INF = float("inf")
    cost = [[INF] * k for _ in range(k)]
    split = [[-1] * k for _ in range(k)]
    for i in range(k - 1):
        cost[i][i + 1] = 0.0

    for span in range(2, k):
        for i in range(0, k - span):
            j = i + span
            if not region.link_ok(i, j):
                continue
            best = INF
            best_m = -1
            for m in range(i + 1, j):
                if cost[i][m] == INF or cost[m][j] == INF:
                    continue
                if not (region.link_ok(i, m) and region.link_ok(m, j)):
                    continue
                if not region.triangle_ok(i, m, j):
                    continue
                c = max(region.max_angle(i, m, j), cost[i][m], cost[m][j])
                if c < best:
                    best = c
                    best_m = m
            if best_m >= 0:
                cost[i][j] = best
                split[i][j] = best_m

    if cost[0][k - 1] == INF:
        raise NoTriangulation("interval recursion found no triangulation")

    triangles: list[tuple[int, int, int]] = []

    def emit(i: int, j: int) -> None:
        if j - i < 2:
            return
        m = split[i][j]
        triangles.append((ids[i], ids[m], ids[j]))
        emit(i, m)
        emit(m, j)

    emit(0, k - 1)
    return triangles, cost[0][k - 1]


def dp_retriangulate(p: Polygon) -> tuple[list[tuple[int, int, int]], float]:
    """Triangulation of p minimizing the maximum triangle angle; returns
    (triangles as parent-point-set id triples, optimal cost)."""
    return retriangulate_sequence(p.ids, p.pts)


def enumerate_polygon_triangulations(p: Polygon) -> list[list[tuple[int, int, int]]]:
    """All triangulations of p by interior diagonals; oracle for small
    polygons (guardrail at 14 vertices)."""
    pts = p.pts
    ids = p.ids
    k = len(pts)
    if k > ENUMERATION_MAX_VERTICES:
        raise TooLarge(f"{k} vertices exceeds limit {ENUMERATION_MAX_VERTICES}")
    if k == 3:
        return [[(ids[0], ids[1], ids[2])]]

    region = _Region(pts)
    memo: dict[tuple[int, int], list[list[tuple[int, int, int]]]] = {}

    def rec(i: int, j: int) -> list[list[tuple[int, int, int]]]:
        if j - i < 2:
            return [[]]
        key = (i, j)
        if key in memo:
            return memo[key]
        out: list[list[tuple[int, int, int]]] = []
        for m in range(i + 1, j):
            if not (region.link_ok(i, m) and region.link_ok(m, j)):
                continue
            if not region.triangle_ok(i, m, j):
                continue
            tri = (ids[i], ids[m], ids[j])
            for left in rec(i, m):
                for right in rec(m, j):
                    out.append(left + [tri] + right)
        memo[key] = out
        return out

    result = rec(0, k - 1)
    if not result:
        raise NoTriangulation("interval recursion found no triangulation")
    return result
