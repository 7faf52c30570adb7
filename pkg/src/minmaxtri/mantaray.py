"""Generator and exhaustive verifier for the adversarial triangulation
family on which edge insertion is maximally non-local.

The instance is a flat isosceles "head" triangle OAB with obtuse apex angle
omega, a strip of 2n triangles between two symmetric rays leaving the base
corners, and a far apex P on the axis of symmetry.  The head's apex angle is
the unique largest angle, no single insertion except (O, P) improves the
triangulation, and (O, P) joins the two vertices at maximal combinatorial
distance while crossing every rung and diagonal of the strip.

Angle system, with tb = (pi - omega)/2 the head's base angle and theta the
inward tilt of each ray from the corresponding head side:

  ray direction from horizontal   gamma = tb + theta
  strip apex angle                phi   = pi - gamma
  boundary angle at A0/B0         psi   = pi - theta
  head-side vs axis (larger)      alpha = pi - omega/2
  ray vs axis (larger)            beta  = pi/2 + gamma

The required inequalities phi < omega, psi > omega, alpha < omega and
beta < omega hold with theta = (2/3)(pi - omega) exactly when
omega > 10*pi/13; "auto" theta uses that rule and generation re-validates
the inequalities numerically from the coordinates.
"""

import math
import random
from dataclasses import dataclass, replace
from typing import Optional, Union

from .errors import (
    CannotPlace,
    ClaimViolated,
    InvalidParams,
    PerturbationBreaksClaim,
    SegmentOutsideHull,
    VertexOnSegment,
)
from .geometry import Point, angle_at, line_angle_max, orient2d
from .insertion import edge_insertion, extract_channel
from .triangulation import (
    DEFAULT_TIE_TOL,
    PointSet,
    Triangulation,
    combinatorial_distance,
    diameter,
)

DEFAULT_OMEGA = 0.78 * math.pi
DEFAULT_P_MARGIN = 1e-6
_MAX_DOUBLINGS = 80


@dataclass(frozen=True)
class MantaRayParams:
    n: int
    omega: float = DEFAULT_OMEGA
    theta: Union[float, str] = "auto"
    p_distance: Union[float, str] = "auto"
    base_length: float = 1.0


@dataclass(frozen=True)
class ClaimAngles:
    omega: float
    theta: float
    theta_prime: float
    phi: float
    psi: float
    alpha: float
    beta: float

    def margins(self) -> tuple[float, float, float, float]:
        return (
            self.omega - self.phi,
            self.psi - self.omega,
            self.omega - self.alpha,
            self.omega - self.beta,
        )


@dataclass(frozen=True)
class MantaRayInstance:
    params: MantaRayParams  # resolved: theta and p_distance numeric
    labels: dict[str, int]
    triangulation: Triangulation
    angles: ClaimAngles
    perturbed: bool = False

    @property
    def n(self) -> int:
        return self.params.n

    def point(self, name: str) -> Point:
        return self.triangulation.point_set[self.labels[name]]


@dataclass(frozen=True)
class PropositionReport:
    n: int
    edge_count: int
    expected_edge_count: int
    diameter: int
    expected_diameter: int
    op_crossings: int
    expected_op_crossings: int
    op_distance: int
    improving_insertions: tuple[tuple[str, str], ...]
    claim_margins: tuple[float, float, float, float]
    verdict: bool


def _resolve_params(params: MantaRayParams) -> tuple[MantaRayParams, bool]:
    if not isinstance(params.n, int) or params.n < 0:
        raise InvalidParams(f"n must be a nonnegative integer, got {params.n!r}")
    omega = float(params.omega)
    if not (0.0 < omega < math.pi) or not math.isfinite(omega):
        raise InvalidParams(f"omega must lie in (0, pi), got {omega!r}")
    base = float(params.base_length)
    if not (base > 0.0) or not math.isfinite(base):
        raise InvalidParams(f"base_length must be positive, got {base!r}")
    theta_auto = params.theta == "auto"
    if theta_auto:
        theta = (2.0 / 3.0) * (math.pi - omega)
    else:
        theta = float(params.theta)
    if not (0.0 < theta < math.pi / 2) or not math.isfinite(theta):
        raise InvalidParams(f"theta must lie in (0, pi/2), got {theta!r}")
    resolved = replace(params, omega=omega, theta=theta, base_length=base)
    return resolved, theta_auto


def _structural_bulge(n: int) -> float:
    """Slope scale of the built-in outward bend of each chain.

    Exactly collinear chain points are not representable in doubles together
    with the rung-length rule, and rounding would scatter them to either
    side of the ideal ray, dropping some strictly inside the convex hull and
    breaking maximality.  A deterministic convex bend far below every
    measurement tolerance keeps all chain points hull corners.  The scale
    grows with n because consecutive-triple orientation must stay clear of
    the rounding noise of the geometrically growing coordinates.
    """
    return min(1e-11, max(4e-14, 1.6e-14 * n * n))


def _bend_chain(chain: list[Point], gamma: float, scale: float) -> list[Point]:
    """Offset chain points along the outward ray normal with strictly
    decreasing slopes, so every consecutive triple turns strictly left."""
    n = len(chain) - 1
    if n < 1 or scale == 0.0:
        return chain
    nx, ny = math.sin(gamma), -math.cos(gamma)
    arc = [0.0]
    for i in range(1, n + 1):
        arc.append(
            arc[-1]
            + math.hypot(chain[i].x - chain[i - 1].x, chain[i].y - chain[i - 1].y)
        )
    out = [chain[0]]
    offset = 0.0
    for i in range(1, n + 1):
        slope = scale * (2.0 - (2.0 * i - 1.0) / n)
        offset += slope * (arc[i] - arc[i - 1])
        out.append(Point(chain[i].x + offset * nx, chain[i].y + offset * ny))
    for i in range(1, n):
        if orient2d(out[i - 1], out[i], out[i + 1]) <= 0:
            raise InvalidParams(
                "internal: chain bend lost to rounding; instance too large"
            )
    return out


def _chain_geometry(params: MantaRayParams) -> tuple[list[Point], float]:
    """Right-flank chain points A_0..A_n; the left flank is the mirror."""
    omega = params.omega
    theta = params.theta
    base = params.base_length
    tb = (math.pi - omega) / 2.0
    gamma = tb + theta
    if not (math.sin(gamma) > 0.0):
        raise InvalidParams("ray does not ascend; instance degenerate")
    if not (1.0 + 2.0 * math.cos(gamma) > 0.0):
        raise InvalidParams("strip collapses onto the axis; instance degenerate")
    ux, uy = math.cos(gamma), math.sin(gamma)
    x0 = base / 2.0
    y0 = x0 / math.tan(omega / 2.0)
    chain = [Point(x0, y0)]
    for _ in range(params.n):
        x, y = chain[-1]
        ell = 2.0 * x
        chain.append(Point(x + ell * ux, y + ell * uy))
    return _bend_chain(chain, gamma, _structural_bulge(params.n)), gamma


def _fan_triangle_points(
    o: Point, a_chain: list[Point], b_chain: list[Point], p: Point
) -> list[tuple[Point, Point, Point]]:
    tris = [(p, o, a_chain[0]), (p, o, b_chain[0])]
    for i in range(len(a_chain) - 1):
        tris.append((p, a_chain[i], a_chain[i + 1]))
        tris.append((p, b_chain[i], b_chain[i + 1]))
    return tris


def _p_is_far_enough(
    o: Point,
    a_chain: list[Point],
    b_chain: list[Point],
    p: Point,
    omega: float,
    margin: float,
) -> bool:
    from .kernels import triangle_angles

    bound = omega - margin
    # the strip's top triangle apex angle at P
    if angle_at(p, a_chain[-1], b_chain[-1]) >= bound:
        return False
    for (q, r, s) in _fan_triangle_points(o, a_chain, b_chain, p):
        for ang in triangle_angles(q.x, q.y, r.x, r.y, s.x, s.y):
            if ang >= bound:
                return False
    return True


def place_p(
    o: Point,
    a_chain: list[Point],
    b_chain: list[Point],
    omega: float,
    base_length: float,
    margin: float = DEFAULT_P_MARGIN,
) -> Point:
    """Smallest axis height of the form base_length * 2**k, beyond the last
    rung, at which every angle of the apex fan stays below omega - margin."""
    if not (margin > 0.0):
        raise InvalidParams("margin must be positive")
    top = a_chain[-1].y
    k = 0
    while base_length * (2.0**k) <= top:
        k += 1
    for _ in range(_MAX_DOUBLINGS):
        p = Point(0.0, base_length * (2.0**k))
        if _p_is_far_enough(o, a_chain, b_chain, p, omega, margin):
            return p
        k += 1
    raise CannotPlace(
        f"no apex position within 2**{k} satisfies margin {margin}"
    )


def _measure_angles(
    o: Point,
    a_chain: list[Point],
    b_chain: list[Point],
    params: MantaRayParams,
    check_uniform: bool,
) -> ClaimAngles:
    n = params.n
    omega_m = angle_at(o, a_chain[0], b_chain[0])
    theta_prime = math.pi - omega_m
    axis = (0.0, 1.0)

    da = (a_chain[0].x - o.x, a_chain[0].y - o.y)
    alpha = line_angle_max(da, axis)

    if n >= 1:
        phis = [angle_at(a_chain[i], a_chain[i + 1], b_chain[i]) for i in range(n)]
        phis += [angle_at(b_chain[i], b_chain[i + 1], a_chain[i]) for i in range(n)]
        betas = [
            line_angle_max(
                (a_chain[i].x - a_chain[i - 1].x, a_chain[i].y - a_chain[i - 1].y),
                axis,
            )
            for i in range(1, n + 1)
        ]
        psis = [angle_at(a_chain[0], o, a_chain[1]), angle_at(b_chain[0], o, b_chain[1])]
        if check_uniform:
            tol = max(1e-12, 16.0 * _structural_bulge(n))
            for seq, name in ((phis, "phi"), (betas, "beta"), (psis, "psi")):
                if max(seq) - min(seq) > tol:
                    raise InvalidParams(
                        f"{name} varies along the strip by "
                        f"{max(seq) - min(seq):.3e}; construction broken"
                    )
        phi = max(phis)
        beta = max(betas)
        psi = min(psis)
    else:
        # no strip to measure; use the construction's closed forms
        tb = (math.pi - params.omega) / 2.0
        gamma = tb + params.theta
        phi = math.pi - gamma
        beta = line_angle_max((math.cos(gamma), math.sin(gamma)), axis)
        psi = math.pi - params.theta

    theta_m = math.pi - psi
    return ClaimAngles(
        omega=omega_m,
        theta=theta_m,
        theta_prime=theta_prime,
        phi=phi,
        psi=psi,
        alpha=alpha,
        beta=beta,
    )


_CLAIM_NAMES = (
    "(i) strip apex angle < omega",
    "(ii) boundary angle at the base corners > omega",
    "(iii) head side vs axis angle < omega",
    "(iv) ray vs axis angle < omega",
)


def check_claims(angles: ClaimAngles) -> list[str]:
    """Names of the violated inequalities, empty when all hold."""
    return [
        name
        for name, margin in zip(_CLAIM_NAMES, angles.margins())
        if not (margin > 0.0)
    ]


def _assemble(
    params: MantaRayParams,
    o: Point,
    a_chain: list[Point],
    b_chain: list[Point],
    p: Point,
    perturbed: bool,
) -> MantaRayInstance:
    n = params.n
    points = [o] + a_chain + b_chain + [p]
    labels = {"O": 0, "P": 2 * n + 3}
    for i in range(n + 1):
        labels[f"A{i}"] = 1 + i
        labels[f"B{i}"] = n + 2 + i
    a0, b0 = labels["A0"], labels["B0"]
    pid = labels["P"]
    triangles = [(0, a0, b0)]
    for i in range(n):
        ai, bi = a0 + i, b0 + i
        triangles.append((ai, bi, ai + 1))
        triangles.append((ai + 1, bi, bi + 1))
    triangles.append((a0 + n, pid, b0 + n))
    tri = Triangulation(PointSet(points), triangles)
    angles = _measure_angles(o, a_chain, b_chain, params, check_uniform=not perturbed)
    return MantaRayInstance(
        params=params,
        labels=labels,
        triangulation=tri,
        angles=angles,
        perturbed=perturbed,
    )


def generate(
    params: MantaRayParams, p_margin: float = DEFAULT_P_MARGIN
) -> MantaRayInstance:
    """Build the instance; with theta = "auto" the four required angle
    inequalities are re-validated numerically and violations are an error."""
    resolved, theta_auto = _resolve_params(params)
    a_chain, _gamma = _chain_geometry(resolved)
    b_chain = [Point(-q.x, q.y) for q in a_chain]
    o = Point(0.0, 0.0)

    if resolved.p_distance == "auto":
        p = place_p(o, a_chain, b_chain, resolved.omega, resolved.base_length, p_margin)
    else:
        d = float(resolved.p_distance)
        if not (d > a_chain[-1].y) or not math.isfinite(d):
            raise InvalidParams(
                f"p_distance {d!r} must exceed the last rung height "
                f"{a_chain[-1].y:.6g}"
            )
        p = Point(0.0, d)
    resolved = replace(resolved, p_distance=p.y)

    inst = _assemble(resolved, o, a_chain, b_chain, p, perturbed=False)
    if theta_auto:
        failed = check_claims(inst.angles)
        if failed:
            raise ClaimViolated(
                "claim inequalities violated: " + "; ".join(failed), failed
            )
    return inst


def measure_claim_angles(inst: MantaRayInstance) -> ClaimAngles:
    """Re-measure the angle record from the instance's coordinates."""
    n = inst.n
    o = inst.point("O")
    a_chain = [inst.point(f"A{i}") for i in range(n + 1)]
    b_chain = [inst.point(f"B{i}") for i in range(n + 1)]
    return _measure_angles(
        o, a_chain, b_chain, inst.params, check_uniform=not inst.perturbed
    )


def _id_to_name(inst: MantaRayInstance) -> dict[int, str]:
    return {v: k for k, v in inst.labels.items()}


def verify_proposition(
    inst: MantaRayInstance, tie_tol: float = DEFAULT_TIE_TOL
) -> PropositionReport:
    """Check every quantitative assertion about the instance, including an
    exhaustive edge-insertion scan over all non-adjacent vertex pairs."""
    t = inst.triangulation
    n = inst.n
    o_id, p_id = inst.labels["O"], inst.labels["P"]
    names = _id_to_name(inst)

    edge_count = len(t.edges)
    diam = diameter(t)
    op_distance = combinatorial_distance(t, o_id, p_id)
    op_crossings = len(extract_channel(t, o_id, p_id).removed_edges)

    improving: list[tuple[str, str]] = []
    nv = len(t.point_set)
    for u in range(nv):
        for v in range(u + 1, nv):
            if t.has_edge(u, v):
                continue
            try:
                outcome = edge_insertion(t, u, v, tie_tol)
            except (VertexOnSegment, SegmentOutsideHull):
                continue
            if outcome.improved:
                pair = tuple(sorted((names[u], names[v])))
                improving.append(pair)
    improving.sort()

    margins = inst.angles.margins()
    # the inserted spine crosses all n+1 rungs plus the n strip diagonals
    expected_crossings = 2 * n + 1
    verdict = (
        edge_count == 4 * n + 5
        and diam == n + 2
        and op_distance == n + 2
        and op_crossings == expected_crossings
        and improving == [("O", "P")]
        and all(m > 0.0 for m in margins)
    )
    return PropositionReport(
        n=n,
        edge_count=edge_count,
        expected_edge_count=4 * n + 5,
        diameter=diam,
        expected_diameter=n + 2,
        op_crossings=op_crossings,
        expected_op_crossings=expected_crossings,
        op_distance=op_distance,
        improving_insertions=tuple(improving),
        claim_margins=margins,
        verdict=verdict,
    )


def perturb_general_position(
    inst: MantaRayInstance, eps: float, seed: int
) -> MantaRayInstance:
    """Bend both chains onto strictly convex curves so no three points are
    collinear, keeping O, A0, B0 and P fixed and the mirror symmetry exact.

    Offsets are applied along the outward normal of the ray with strictly
    decreasing slopes, which keeps every chain point a hull corner (the
    triangulation stays maximal).  The perturbed instance is re-verified and
    the perturbation rejected if any assertion no longer holds.
    """
    params = inst.params
    base = params.base_length
    if eps == 0.0:
        return inst
    if not (0.0 < eps < 1e-3 * base):
        raise InvalidParams(f"eps must lie in (0, {1e-3 * base:.3g}), got {eps!r}")
    n = params.n
    if n == 0:
        return inst

    o = inst.point("O")
    a_chain = [inst.point(f"A{i}") for i in range(n + 1)]
    tb = (math.pi - params.omega) / 2.0
    gamma = tb + params.theta
    ux, uy = math.cos(gamma), math.sin(gamma)
    nx, ny = uy, -ux  # outward normal (away from the axis)

    arc = [0.0]
    for i in range(1, n + 1):
        step = math.hypot(
            a_chain[i].x - a_chain[i - 1].x, a_chain[i].y - a_chain[i - 1].y
        )
        arc.append(arc[-1] + step)
    total = arc[-1]

    rng = random.Random(seed)
    scale = eps * base / total
    # strictly decreasing positive slopes keep the offset profile strictly
    # concave in arclength regardless of the geometric rung spacing
    slopes = [
        scale * (2.0 - (2.0 * i - 1.0) / n + (2.0 * rng.random() - 1.0) / (2.0 * n))
        for i in range(1, n + 1)
    ]
    offsets = [0.0]
    for i in range(1, n + 1):
        offsets.append(offsets[-1] + slopes[i - 1] * (arc[i] - arc[i - 1]))

    new_a = [a_chain[0]]
    for i in range(1, n + 1):
        d = offsets[i]
        new_a.append(Point(a_chain[i].x + d * nx, a_chain[i].y + d * ny))
    new_b = [Point(-q.x, q.y) for q in new_a]

    candidate = _assemble(params, o, new_a, new_b, inst.point("P"), perturbed=True)

    pts = candidate.triangulation.point_set.points
    nv = len(pts)
    for i in range(nv):
        for j in range(i + 1, nv):
            for k in range(j + 1, nv):
                if orient2d(pts[i], pts[j], pts[k]) == 0:
                    raise PerturbationBreaksClaim(
                        f"points {i}, {j}, {k} remain collinear"
                    )

    report = verify_proposition(candidate)
    if not report.verdict:
        raise PerturbationBreaksClaim(
            f"verification fails after perturbation: {report}"
        )
    return candidate
