"""Edge insertion: cut a segment between two vertices through a
triangulation, remove every edge it crosses, and retriangulate the two
resulting polygonal regions optimally.  The outer loop repeats the first
improving insertion until no candidate improves.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .errors import (
    EdgeAlreadyPresent,
    InvalidTriangulation,
    RoundLimitExceeded,
    SegmentOutsideHull,
    VertexOnSegment,
)
from .geometry import on_open_segment, orient2d
from .kernels import segments_cross as _segs_cross
from .polygon import Polygon, _signed_area2, dp_retriangulate
from .triangulation import (
    DEFAULT_TIE_TOL,
    PointSet,
    Triangulation,
    Triple,
    improves,
)


@dataclass(frozen=True)
class Channel:
    """The region cut out by an inserted segment: removed edges plus the two
    simple polygons on either side, each closed by the inserted edge."""

    inserted: tuple[int, int]
    removed_edges: tuple[tuple[int, int], ...]
    left: Polygon
    right: Polygon


@dataclass(frozen=True)
class InsertionOutcome:
    result: Triangulation
    channel: Channel
    improved: bool


@dataclass(frozen=True)
class TraceEntry:
    u: int
    v: int
    crossings: int
    measure_before: float
    measure_after: float


def extract_channel(t: Triangulation, u: int, v: int) -> Channel:
    """Edges crossed by segment (u, v) and the two boundary polygons of the
    union of crossed triangles, split at u and v."""
    pts = t.point_set.points
    n = len(pts)
    if u == v or not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"bad vertex pair ({u}, {v})")
    if t.has_edge(u, v):
        raise EdgeAlreadyPresent(f"({u}, {v}) is already an edge")
    pu, pv = pts[u], pts[v]
    for w in range(n):
        if w not in (u, v) and on_open_segment(pu, pv, pts[w]):
            raise VertexOnSegment(f"vertex {w} lies on segment ({u}, {v})")

    removed = []
    for a, b in t.edges:
        if a in (u, v) or b in (u, v):
            continue
        pa, pb = pts[a], pts[b]
        if _segs_cross(pu.x, pu.y, pv.x, pv.y, pa.x, pa.y, pb.x, pb.y):
            removed.append((a, b))
    if not removed:
        raise SegmentOutsideHull(
            f"segment ({u}, {v}) crosses no edge; not insertable"
        )
    removed_set = set(removed)

    crossed = _crossed_triangles(t, removed_set)

    # boundary of the union: triangle edges that are neither removed nor
    # shared by two crossed triangles
    edge_use: dict[tuple[int, int], int] = {}
    for tri in crossed:
        for a, b in ((tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2])):
            e = (min(a, b), max(a, b))
            edge_use[e] = edge_use.get(e, 0) + 1
    boundary = [e for e, cnt in edge_use.items() if cnt == 1 and e not in removed_set]

    nbrs: dict[int, list[int]] = {}
    for a, b in boundary:
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)
    for w, lst in nbrs.items():
        if len(lst) != 2:
            raise InvalidTriangulation(f"channel boundary pinches at vertex {w}")
    if u not in nbrs or v not in nbrs:
        raise InvalidTriangulation("channel boundary misses an endpoint")

    def walk(first: int) -> list[int]:
        path = [u, first]
        while path[-1] != v:
            a, b = nbrs[path[-1]]
            nxt = b if a == path[-2] else a
            path.append(nxt)
        return path

    s1, s2 = nbrs[u]
    path1 = walk(s1)
    path2 = walk(s2)
    side1 = orient2d(pu, pv, pts[path1[1]])
    side2 = orient2d(pu, pv, pts[path2[1]])
    if side1 == side2 or side1 == 0 or side2 == 0:
        raise InvalidTriangulation("channel sides are not separated")
    left_path = path1 if side1 > 0 else path2
    right_path = path2 if side1 > 0 else path1
    for path, sign in ((left_path, 1), (right_path, -1)):
        for w in path[1:-1]:
            if orient2d(pu, pv, pts[w]) != sign:
                raise InvalidTriangulation("channel side switches sides")

    def mk_polygon(path: list[int]) -> Polygon:
        ids = list(path)
        ppts = [pts[i] for i in ids]
        if _signed_area2(ppts) < 0:
            ids.reverse()
            ppts.reverse()
        return Polygon(ids, ppts)

    left = mk_polygon(left_path)
    right = mk_polygon(right_path)

    # the two sides must exactly tile the union of crossed triangles
    area = abs(_signed_area2(left.pts)) + abs(_signed_area2(right.pts))
    crossed_area = Fraction(0)
    for tri in crossed:
        crossed_area += abs(_signed_area2([pts[i] for i in tri]))
    if area != crossed_area:
        raise InvalidTriangulation("channel polygons do not tile the channel")

    return Channel(
        inserted=(u, v),
        removed_edges=tuple(sorted(removed)),
        left=left,
        right=right,
    )


def _crossed_triangles(t: Triangulation, removed: Iterable[tuple[int, int]]) -> list[Triple]:
    removed_set = set(removed)
    out = []
    for tri in t.triangles:
        for a, b in ((tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2])):
            if (min(a, b), max(a, b)) in removed_set:
                out.append(tri)
                break
    return out


def edge_insertion(
    t: Triangulation, u: int, v: int, tie_tol: float = DEFAULT_TIE_TOL
) -> InsertionOutcome:
    """Insert edge (u, v), retriangulate both sides optimally, and report
    whether the result improves on t."""
    channel = extract_channel(t, u, v)
    left_tris, _ = dp_retriangulate(channel.left)
    right_tris, _ = dp_retriangulate(channel.right)
    crossed = _crossed_triangles(t, channel.removed_edges)
    result = t.replace_triangles(crossed, left_tris + right_tris)
    if not result.has_edge(u, v):
        raise InvalidTriangulation("inserted edge missing from result")
    return InsertionOutcome(
        result=result,
        channel=channel,
        improved=improves(result, t, tie_tol),
    )


def bootstrap_triangulation(ps: PointSet) -> Triangulation:
    """Deterministic initial triangulation: sort points lexicographically,
    triangulate the first three, then attach each next point to every hull
    edge it sees."""
    pts = ps.points
    order = sorted(range(len(pts)), key=lambda i: pts[i])
    a, b, c = order[0], order[1], order[2]
    if orient2d(pts[a], pts[b], pts[c]) == 0:
        raise InvalidTriangulation("first three points are collinear")
    if orient2d(pts[a], pts[b], pts[c]) < 0:
        b, c = c, b
    triangles: list[tuple[int, int, int]] = [(a, b, c)]
    hull: list[int] = [a, b, c]

    for q in order[3:]:
        pq = pts[q]
        m = len(hull)
        visible = [
            s
            for s in range(m)
            if orient2d(pts[hull[s]], pts[hull[(s + 1) % m]], pq) < 0
        ]
        if not visible:
            raise InvalidTriangulation(f"point {q} not outside hull during bootstrap")
        for s in visible:
            h1, h2 = hull[s], hull[(s + 1) % m]
            triangles.append((h1, q, h2))
        # visible edges form one contiguous cyclic run; splice q in place of
        # the run's interior vertices
        vis = set(visible)
        start = next(s for s in range(m) if s in vis and (s - 1) % m not in vis)
        run = len(visible)
        new_hull = [hull[start], q]
        idx = (start + run) % m
        while idx != start:
            new_hull.append(hull[idx])
            idx = (idx + 1) % m
        hull = new_hull

    return Triangulation(ps, triangles)


def _candidate_pairs(t: Triangulation) -> list[tuple[int, int]]:
    n = len(t.point_set)
    return [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if not t.has_edge(u, v)
    ]


def _try_insertion(
    t: Triangulation, u: int, v: int, tie_tol: float
) -> Optional[InsertionOutcome]:
    try:
        return edge_insertion(t, u, v, tie_tol)
    except (VertexOnSegment, SegmentOutsideHull):
        return None


def edge_insertion_algorithm(
    ps_or_tri: Union[PointSet, Triangulation],
    initial: Union[Triangulation, str, None] = "arbitrary",
    tie_tol: float = DEFAULT_TIE_TOL,
    max_rounds: Optional[int] = None,
    scan_mode: str = "serial",
    workers: int = 4,
) -> tuple[Triangulation, list[TraceEntry]]:
    """Local search over single edge insertions.

    Scans candidate pairs in lexicographic order, accepts the first improving
    insertion, and repeats until a full scan finds none.  `scan_mode`
    "parallel" evaluates candidates concurrently but accepts the same pair as
    the serial scan, so both modes produce identical traces.
    """
    if isinstance(ps_or_tri, Triangulation):
        t = ps_or_tri
        ps = t.point_set
    else:
        ps = ps_or_tri
        if isinstance(initial, Triangulation):
            t = initial
        elif initial == "arbitrary" or initial is None:
            t = bootstrap_triangulation(ps)
        else:
            raise ValueError(f"bad initial {initial!r}")
    if isinstance(ps_or_tri, PointSet) and isinstance(initial, Triangulation):
        if initial.point_set != ps:
            raise InvalidTriangulation("initial triangulation over different points")
    if scan_mode not in ("serial", "parallel"):
        raise ValueError(f"bad scan_mode {scan_mode!r}")
    if max_rounds is None:
        max_rounds = 10 * len(t.edges)

    trace: list[TraceEntry] = []
    for _ in range(max_rounds):
        pairs = _candidate_pairs(t)
        accepted: Optional[tuple[int, int, InsertionOutcome]] = None
        if scan_mode == "serial":
            for u, v in pairs:
                outcome = _try_insertion(t, u, v, tie_tol)
                if outcome is not None and outcome.improved:
                    accepted = (u, v, outcome)
                    break
        else:
            chunk = max(1, 2 * workers)
            with ThreadPoolExecutor(max_workers=workers) as pool:
                for base in range(0, len(pairs), chunk):
                    block = pairs[base : base + chunk]
                    results = list(
                        pool.map(
                            lambda uv: _try_insertion(t, uv[0], uv[1], tie_tol),
                            block,
                        )
                    )
                    for (u, v), outcome in zip(block, results):
                        if outcome is not None and outcome.improved:
                            accepted = (u, v, outcome)
                            break
                    if accepted is not None:
                        break
        if accepted is None:
            return t, trace
        u, v, outcome = accepted
        trace.append(
            TraceEntry(
                u=u,
                v=v,
                crossings=len(outcome.channel.removed_edges),
                measure_before=t.measure(tie_tol).max_angle,
                measure_after=outcome.result.measure(tie_tol).max_angle,
            )
        )
        t = outcome.result
    raise RoundLimitExceeded(f"no fixed point within {max_rounds} rounds")
