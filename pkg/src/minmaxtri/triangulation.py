"""Triangulation over a planar point set: validation, measure, improvement
order, and graph metrics.

A triangulation is stored as a plain triangle list with derived edge and
adjacency structure; instances are immutable after construction.  Validation
is strict: exact non-crossing, Euler counts against the convex hull, proper
edge sharing, and an exact (rational) area identity between the triangles and
the hull.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegenerateTriangle, InvalidTriangulation, MismatchedPointSet
from .geometry import Point, as_point, on_open_segment, orient2d
from .kernels import segments_cross as _segs_cross
from .kernels import triangle_max_angle as _tri_max_angle

DEFAULT_TIE_TOL = 1e-9

Triple = tuple[int, int, int]


class PointSet:
    """Ordered list of distinct finite points; the index is the vertex id."""

    __slots__ = ("points",)

    def __init__(self, points: Iterable):
        pts = tuple(as_point(p) for p in points)
        if len(pts) < 3:
            raise ValueError("point set needs at least 3 points")
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate points")
        self.points = pts

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other) -> bool:
        return isinstance(other, PointSet) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self) -> str:
        return f"PointSet({len(self.points)} points)"


@dataclass(frozen=True)
class Measure:
    """Largest triangle angle of a triangulation plus the triangles within
    tie tolerance of it."""

    max_angle: float
    attaining: frozenset[Triple]


def canonical_triple(tri: Sequence[int], points: Sequence[Point]) -> Triple:
    """Rotate/flip a vertex triple to start at its smallest id with positive
    orientation."""
    i, j, k = tri
    if len({i, j, k}) != 3:
        raise InvalidTriangulation(f"repeated vertex in triangle {tri}")
    s = orient2d(points[i], points[j], points[k])
    if s == 0:
        raise DegenerateTriangle(f"degenerate triangle {tri}")
    if s < 0:
        j, k = k, j
    # rotate smallest id first
    if j <= i and j <= k:
        i, j, k = j, k, i
    elif k <= i and k <= j:
        i, j, k = k, i, j
    return (i, j, k)


def convex_hull(points: Sequence[Point]) -> list[int]:
    """Indices of strict hull corners in counterclockwise order (monotone
    chain with exact orientation; collinear boundary points excluded)."""
    order = sorted(range(len(points)), key=lambda i: points[i])
    if len(order) < 3:
        return list(order)

    def half(ids):
        chain: list[int] = []
        for i in ids:
            while (
                len(chain) >= 2
                and orient2d(points[chain[-2]], points[chain[-1]], points[i]) <= 0
            ):
                chain.pop()
            chain.append(i)
        return chain

    lower = half(order)
    upper = half(reversed(order))
    return lower[:-1] + upper[:-1]


def hull_boundary_count(points: Sequence[Point], hull: Sequence[int]) -> int:
    """Number of points lying on the hull boundary, collinear ones included."""
    on_boundary = set(hull)
    m = len(hull)
    for idx in range(len(points)):
        if idx in on_boundary:
            continue
        p = points[idx]
        for t in range(m):
            a, b = points[hull[t]], points[hull[(t + 1) % m]]
            if on_open_segment(a, b, p):
                on_boundary.add(idx)
                break
    return len(on_boundary)


def _shoelace2(points: Sequence[Point], ids: Sequence[int]) -> Fraction:
    """Twice the signed area of the polygon over `ids`, exact."""
    total = Fraction(0)
    m = len(ids)
    for t in range(m):
        ax, ay = points[ids[t]]
        bx, by = points[ids[(t + 1) % m]]
        total += Fraction(ax) * Fraction(by) - Fraction(bx) * Fraction(ay)
    return total


class Triangulation:
    """Immutable validated triangulation of a PointSet."""

    __slots__ = ("point_set", "triangles", "edges", "adjacency", "hull", "_measures")

    def __init__(self, point_set: PointSet, triangles: Iterable[Sequence[int]], *, validate: bool = True):
        self.point_set = point_set
        pts = point_set.points
        n = len(pts)
        triples = []
        for tri in triangles:
            i, j, k = tri
            if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
                raise InvalidTriangulation(f"vertex id out of range in {tri}")
            try:
                triples.append(canonical_triple((i, j, k), pts))
            except DegenerateTriangle as exc:
                raise InvalidTriangulation(str(exc)) from exc
        self.triangles: tuple[Triple, ...] = tuple(sorted(triples))
        if len(set(self.triangles)) != len(self.triangles):
            raise InvalidTriangulation("duplicate triangle")

        edge_count: dict[tuple[int, int], int] = {}
        for (i, j, k) in self.triangles:
            for a, b in ((i, j), (j, k), (i, k)):
                e = (a, b) if a < b else (b, a)
                edge_count[e] = edge_count.get(e, 0) + 1
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(edge_count))

        adj: dict[int, set[int]] = {i: set() for i in range(n)}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        self.adjacency: dict[int, tuple[int, ...]] = {
            v: tuple(sorted(nbrs)) for v, nbrs in adj.items()
        }

        self.hull: tuple[int, ...] = tuple(convex_hull(pts))
        self._measures: dict[float, Measure] = {}

        if validate:
            self._validate(edge_count)

    # -- validation -------------------------------------------------------

    def _validate(self, edge_count: dict[tuple[int, int], int]) -> None:
        pts = self.point_set.points
        n = len(pts)
        if not self.triangles:
            raise InvalidTriangulation("empty triangle list")

        used = set()
        for tri in self.triangles:
            used.update(tri)
        if used != set(range(n)):
            missing = sorted(set(range(n)) - used)
            raise InvalidTriangulation(f"unused vertices {missing}")

        edges = self.edges
        for a, b in edges:
            pa, pb = pts[a], pts[b]
            for w in range(n):
                if w != a and w != b and on_open_segment(pa, pb, pts[w]):
                    raise InvalidTriangulation(
                        f"vertex {w} lies on edge ({a},{b})"
                    )
        m = len(edges)
        for s in range(m):
            a, b = edges[s]
            pa, pb = pts[a], pts[b]
            for t in range(s + 1, m):
                c, d = edges[t]
                if a in (c, d) or b in (c, d):
                    continue
                pc, pd = pts[c], pts[d]
                if _segs_cross(pa.x, pa.y, pb.x, pb.y, pc.x, pc.y, pd.x, pd.y):
                    raise InvalidTriangulation(
                        f"edges ({a},{b}) and ({c},{d}) cross"
                    )

        hull = self.hull
        h = hull_boundary_count(pts, hull)
        v = n
        if len(self.edges) != 3 * v - 3 - h:
            raise InvalidTriangulation(
                f"edge count {len(self.edges)} != 3v-3-h = {3 * v - 3 - h}"
            )
        if len(self.triangles) != 2 * v - 2 - h:
            raise InvalidTriangulation(
                f"triangle count {len(self.triangles)} != 2v-2-h = {2 * v - 2 - h}"
            )

        # boundary edges lie on the hull and belong to one triangle,
        # interior edges to exactly two
        hull_m = len(hull)
        for e, cnt in edge_count.items():
            a, b = e
            on_hull_edge = False
            for t in range(hull_m):
                p, q = pts[hull[t]], pts[hull[(t + 1) % hull_m]]
                pa, pb = pts[a], pts[b]
                a_on = pa == p or pa == q or on_open_segment(p, q, pa)
                b_on = pb == p or pb == q or on_open_segment(p, q, pb)
                if a_on and b_on:
                    on_hull_edge = True
                    break
            expected = 1 if on_hull_edge else 2
            if cnt != expected:
                raise InvalidTriangulation(
                    f"edge {e} in {cnt} triangles, expected {expected}"
                )

        area = Fraction(0)
        for tri in self.triangles:
            area += _shoelace2(pts, tri)
        hull_area = _shoelace2(pts, hull)
        if area != hull_area:
            raise InvalidTriangulation(
                "triangle areas do not tile the convex hull"
            )

    # -- queries ----------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def triangle_max_angle(self, tri: Triple) -> float:
        pts = self.point_set.points
        a, b, c = (pts[t] for t in tri)
        return _tri_max_angle(a.x, a.y, b.x, b.y, c.x, c.y)

    def measure(self, tie_tol: float = DEFAULT_TIE_TOL) -> Measure:
        cached = self._measures.get(tie_tol)
        if cached is not None:
            return cached
        angles = [self.triangle_max_angle(tri) for tri in self.triangles]
        top = max(angles)
        attaining = frozenset(
            tri for tri, ang in zip(self.triangles, angles) if ang >= top - tie_tol
        )
        result = Measure(top, attaining)
        self._measures[tie_tol] = result
        return result

    def replace_triangles(
        self,
        remove: Iterable[Triple],
        add: Iterable[Sequence[int]],
        *,
        validate: bool = True,
    ) -> "Triangulation":
        removed = {canonical_triple(t, self.point_set.points) for t in remove}
        kept = [t for t in self.triangles if t not in removed]
        return Triangulation(self.point_set, kept + list(add), validate=validate)


def build_triangulation(ps: PointSet, triangles: Iterable[Sequence[int]]) -> Triangulation:
    """Validate and normalize a triangle list into a Triangulation."""
    return Triangulation(ps, triangles, validate=True)


def measure(t: Triangulation, tie_tol: float = DEFAULT_TIE_TOL) -> Measure:
    return t.measure(tie_tol)


def improves(t1: Triangulation, t2: Triangulation, tie_tol: float = DEFAULT_TIE_TOL) -> bool:
    """True iff t1 strictly improves on t2: smaller measure, or equal measure
    with a strictly smaller set of measure-attaining triangles."""
    if t1.point_set != t2.point_set:
        raise MismatchedPointSet("triangulations over different point sets")
    m1 = t1.measure(tie_tol)
    m2 = t2.measure(tie_tol)
    if m1.max_angle < m2.max_angle - tie_tol:
        return True
    if abs(m1.max_angle - m2.max_angle) <= tie_tol:
        return m1.attaining < m2.attaining
    return False


def combinatorial_distance(t: Triangulation, u: int, v: int) -> int:
    """Shortest path length between u and v in the edge graph."""
    if u == v:
        return 0
    seen = {u: 0}
    queue = deque([u])
    while queue:
        w = queue.popleft()
        d = seen[w]
        for x in t.adjacency[w]:
            if x not in seen:
                if x == v:
                    return d + 1
                seen[x] = d + 1
                queue.append(x)
    raise InvalidTriangulation(f"no path between {u} and {v}")


def diameter(t: Triangulation) -> int:
    """Largest combinatorial distance over all vertex pairs."""
    n = len(t.point_set)
    best = 0
    for s in range(n):
        seen = {s: 0}
        queue = deque([s])
        while queue:
            w = queue.popleft()
            d = seen[w]
            if d > best:
                best = d
            for x in t.adjacency[w]:
                if x not in seen:
                    seen[x] = d + 1
                    queue.append(x)
        if len(seen) != n:
            raise InvalidTriangulation("edge graph is disconnected")
    return best
