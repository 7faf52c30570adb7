"""Ground-truth oracle: enumerate every triangulation of a small point set
and pick the best one under the improvement order.

Enumeration is over maximal crossing-free edge sets (all of which have
exactly 3v-3-h edges), found by backtracking over the candidate edge list
with conflict bitmasks.  It deliberately does not reuse the local-search
machinery it is used to test.
"""

from typing import Optional

from .errors import CapExceeded, InvalidParams, TooLarge
from .geometry import on_open_segment, orient2d, strictly_inside_triangle
from .kernels import segments_cross as _segs_cross
from .triangulation import (
    DEFAULT_TIE_TOL,
    PointSet,
    Triangulation,
    convex_hull,
)

MAX_POINTS = 10
DEFAULT_CAP = 200_000


def _require_general_position(ps: PointSet) -> None:
    pts = ps.points
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if orient2d(pts[i], pts[j], pts[k]) == 0:
                    raise InvalidParams(
                        f"points {i}, {j}, {k} are collinear; oracle needs "
                        "general position"
                    )


def enumerate_triangulations(
    ps: PointSet, cap: int = DEFAULT_CAP
) -> list[Triangulation]:
    """All triangulations of ps, in a canonical order.

    Requires at most 10 points in general position.  Raises CapExceeded if
    more than `cap` triangulations exist.
    """
    n = len(ps)
    if n > MAX_POINTS:
        raise TooLarge(f"{n} points exceeds oracle limit {MAX_POINTS}")
    _require_general_position(ps)
    pts = ps.points

    candidates = [(i, j) for i in range(n) for j in range(i + 1, n)]
    m = len(candidates)
    conflict = [0] * m
    for s in range(m):
        a, b = candidates[s]
        pa, pb = pts[a], pts[b]
        for t in range(s + 1, m):
            c, d = candidates[t]
            if a in (c, d) or b in (c, d):
                continue
            pc, pd = pts[c], pts[d]
            if _segs_cross(pa.x, pa.y, pb.x, pb.y, pc.x, pc.y, pd.x, pd.y):
                conflict[s] |= 1 << t
                conflict[t] |= 1 << s

    hull = convex_hull(pts)
    target = 3 * n - 3 - len(hull)

    results: list[tuple] = []

    def backtrack(idx: int, chosen: list[int], blocked: int, count: int) -> None:
        if count == target:
            results.append(tuple(chosen))
            if len(results) > cap:
                raise CapExceeded(f"more than {cap} triangulations")
            return
        remaining = m - idx
        if count + remaining < target:
            return
        if idx == m:
            return
        if not (blocked >> idx) & 1:
            chosen.append(idx)
            backtrack(idx + 1, chosen, blocked | conflict[idx], count + 1)
            chosen.pop()
        backtrack(idx + 1, chosen, blocked, count)

    backtrack(0, [], 0, 0)

    out = []
    for edge_idx in results:
        edges = [candidates[s] for s in edge_idx]
        triangles = _faces_from_edges(ps, edges)
        out.append(Triangulation(ps, triangles))
    out.sort(key=lambda t: t.triangles)
    return out


def _faces_from_edges(ps: PointSet, edges: list[tuple[int, int]]) -> list[tuple[int, int, int]]:
    """Triangles of a maximal crossing-free edge set: edge-complete triples
    with no vertex strictly inside (valid in general position)."""
    pts = ps.points
    n = len(ps)
    adj = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    triangles = []
    for i in range(n):
        for j in adj[i]:
            if j <= i:
                continue
            for k in adj[j]:
                if k <= j or k not in adj[i]:
                    continue
                pa, pb, pc = pts[i], pts[j], pts[k]
                empty = True
                for w in range(n):
                    if w in (i, j, k):
                        continue
                    p = pts[w]
                    if strictly_inside_triangle(p, pa, pb, pc):
                        empty = False
                        break
                if empty:
                    triangles.append((i, j, k))
    return triangles


def _angle_vector(t: Triangulation) -> tuple[float, ...]:
    """All triangle max angles sorted descending; full per-corner vector is
    not needed because comparisons stop at the first difference anyway."""
    angles: list[float] = []
    pts = t.point_set.points
    from .kernels import triangle_angles

    for (i, j, k) in t.triangles:
        a, b, c = pts[i], pts[j], pts[k]
        angles.extend(triangle_angles(a.x, a.y, b.x, b.y, c.x, c.y))
    return tuple(sorted(angles, reverse=True))


def brute_force_optimum(
    ps: PointSet, cap: int = DEFAULT_CAP, tie_tol: float = DEFAULT_TIE_TOL
) -> Triangulation:
    """The best triangulation under the improvement order, with ties among
    incomparable minima broken by the lexicographically smallest descending
    angle vector."""
    all_tris = enumerate_triangulations(ps, cap)
    best_measure = min(t.measure(tie_tol).max_angle for t in all_tris)
    pool = [
        t
        for t in all_tris
        if t.measure(tie_tol).max_angle <= best_measure + tie_tol
    ]
    minimal = []
    for t in pool:
        att = t.measure(tie_tol).attaining
        if not any(
            other is not t and other.measure(tie_tol).attaining < att
            for other in pool
        ):
            minimal.append(t)
    minimal.sort(key=lambda t: (_angle_vector(t), t.triangles))
    return minimal[0]
