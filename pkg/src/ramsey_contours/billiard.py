"""Point-particle billiards inside a closed boundary.

Free flight along straight lines alternates with specular reflection
``d' = d - 2 (d.n) n`` about the inward unit normal at the hit point. The
reflection points are numbered 1.. in temporal order and can be handed to the
slope coloring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from ramsey_contours.coloring import ColoredCompleteGraph, DegeneracyPolicy, color_by_slope
from ramsey_contours.contour import Circle, Contour, LabeledPoint, Point2, as_point
from ramsey_contours.errors import CornerHit, Grazing, NoIntersection

EPS_T = 1e-9
EPS_CORNER = 1e-9
EPS_GRAZE = 1e-9

Vec = tuple[float, float]


def _unit(dx: float, dy: float) -> Vec:
    norm = math.hypot(dx, dy)
    if norm == 0:
        raise ValueError("zero direction vector")
    return (dx / norm, dy / norm)


@dataclass(frozen=True)
class ParticleState:
    position: Point2
    direction: Vec

    def __post_init__(self):
        object.__setattr__(self, "position", as_point(self.position))
        dx, dy = self.direction
        if abs(math.hypot(dx, dy) - 1.0) > 1e-12:
            raise ValueError(f"direction {self.direction} is not a unit vector")

    @classmethod
    def towards(cls, position, direction) -> "ParticleState":
        """Build a state, normalizing the direction."""
        return cls(as_point(position), _unit(*direction))


@dataclass
class Trajectory:
    boundary: Contour
    start: ParticleState
    reflections: list[LabeledPoint] = field(default_factory=list)
    directions_after: list[Vec] = field(default_factory=list)
    # inward normals at each hit, kept for checking the reflection law
    normals: list[Vec] = field(default_factory=list)
    incoming: list[Vec] = field(default_factory=list)
    termination: str = "completed"
    error: Optional[str] = None


def _reflect(d: Vec, n: Vec) -> Vec:
    dot = d[0] * n[0] + d[1] * n[1]
    return _unit(d[0] - 2 * dot * n[0], d[1] - 2 * dot * n[1])


def _circle_hit(circle: Circle, p: Point2, d: Vec, eps_t: float) -> tuple[Point2, Vec]:
    cx, cy = circle.center.x, circle.center.y
    rx, ry = p.x - cx, p.y - cy
    b = d[0] * rx + d[1] * ry
    c = rx * rx + ry * ry - circle.radius**2
    disc = b * b - c
    if disc < 0:
        raise NoIntersection("ray misses the circle")
    # numerically stable pair of roots of t^2 + 2bt + c = 0
    q = -(b + math.copysign(math.sqrt(disc), b))
    roots = sorted(r for r in (q, c / q if q != 0 else 0.0) if r > eps_t)
    if not roots:
        raise NoIntersection("no forward intersection with the circle")
    t = roots[0]
    hx, hy = rx + t * d[0], ry + t * d[1]
    # project back onto the circle so errors do not accumulate over bounces
    s = circle.radius / math.hypot(hx, hy)
    hit = Point2(cx + hx * s, cy + hy * s)
    normal = (-hx / math.hypot(hx, hy), -hy / math.hypot(hx, hy))
    return hit, normal


def _segment_normal(a: Point2, b: Point2, orient_sign: int) -> Vec:
    ex, ey = b.x - a.x, b.y - a.y
    n = _unit(-ey, ex)
    return (orient_sign * n[0], orient_sign * n[1])


def _polyline_hit(
    boundary, p: Point2, d: Vec, eps_t: float, eps_corner: float, corner_mode: str
) -> tuple[Point2, Vec]:
    verts = boundary.vertices
    n_seg = len(verts)
    best = None
    for j in range(n_seg):
        a, b = verts[j], verts[(j + 1) % n_seg]
        ex, ey = b.x - a.x, b.y - a.y
        denom = d[0] * ey - d[1] * ex
        if denom == 0:
            continue
        ax, ay = a.x - p.x, a.y - p.y
        t = (ax * ey - ay * ex) / denom
        s = (ax * d[1] - ay * d[0]) / denom
        seg_len = math.hypot(ex, ey)
        slack = eps_corner / seg_len
        if t > eps_t and -slack <= s <= 1 + slack:
            # strict '<' keeps the lower segment index on ties
            if best is None or t < best[0]:
                best = (t, j, s)
    if best is None:
        raise NoIntersection("ray leaves the polygon without a hit")
    t, j, s = best
    a, b = verts[j], verts[(j + 1) % n_seg]
    seg_len = math.hypot(b.x - a.x, b.y - a.y)
    sign = boundary.orientation.sign
    near_start = s * seg_len <= eps_corner
    near_end = (1 - s) * seg_len <= eps_corner
    if near_start or near_end:
        corner = a if near_start else b
        if corner_mode != "bisector":
            raise CornerHit(f"hit polygon vertex {tuple(corner)}")
        k = j if near_start else (j + 1) % n_seg
        prev_a, next_b = verts[(k - 1) % n_seg], verts[(k + 1) % n_seg]
        n1 = _segment_normal(prev_a, verts[k], sign)
        n2 = _segment_normal(verts[k], next_b, sign)
        normal = _unit(n1[0] + n2[0], n1[1] + n2[1])
        if d[0] * normal[0] + d[1] * normal[1] >= 0:
            raise CornerHit(f"cannot reflect off vertex {tuple(corner)}")
        return verts[k], normal
    s = min(max(s, 0.0), 1.0)
    hit = Point2(a.x + s * (b.x - a.x), a.y + s * (b.y - a.y))
    return hit, _segment_normal(a, b, sign)


def _bounce(boundary, state, eps_t, eps_corner, eps_graze, corner_mode) -> tuple[Point2, Vec, Vec]:
    p, d = state.position, state.direction
    if isinstance(boundary, Circle):
        hit, normal = _circle_hit(boundary, p, d, eps_t)
    else:
        hit, normal = _polyline_hit(boundary, p, d, eps_t, eps_corner, corner_mode)
    dn = d[0] * normal[0] + d[1] * normal[1]
    if abs(dn) <= eps_graze:
        raise Grazing(f"near-tangent hit at {tuple(hit)}")
    if dn > 0:
        raise NoIntersection("ray reached the boundary from outside")
    return hit, _reflect(d, normal), normal


def next_reflection(
    boundary: Contour,
    state: ParticleState,
    *,
    eps_t: float = EPS_T,
    eps_corner: float = EPS_CORNER,
    eps_graze: float = EPS_GRAZE,
    corner_mode: str = "error",
) -> tuple[Point2, Vec]:
    """First boundary hit along the ray and the specularly reflected direction.

    ``corner_mode="bisector"`` reflects polyline vertex hits about the
    bisector of the two adjacent edge normals instead of raising ``CornerHit``.
    """
    hit, d_out, _ = _bounce(boundary, state, eps_t, eps_corner, eps_graze, corner_mode)
    return hit, d_out


def _rotate(d: Vec, angle: float) -> Vec:
    c, s = math.cos(angle), math.sin(angle)
    return _unit(c * d[0] - s * d[1], s * d[0] + c * d[1])


def simulate(
    boundary: Contour,
    start: ParticleState,
    bounces: int,
    *,
    eps_t: float = EPS_T,
    eps_corner: float = EPS_CORNER,
    eps_graze: float = EPS_GRAZE,
    corner_mode: str = "error",
    noise_bound: float = 0.0,
    noise_seed: int = 0,
) -> Trajectory:
    """Run ``bounces`` reflections, stopping early on a corner or grazing hit.

    A nonzero ``noise_bound`` rotates each outgoing direction by a seeded
    uniform angle in [-noise_bound, noise_bound] (rotations that would point
    back out of the region are dropped).
    """
    if bounces < 1:
        raise ValueError("bounces must be >= 1")
    traj = Trajectory(boundary, start)
    rng = np.random.default_rng(noise_seed) if noise_bound > 0 else None
    state = start
    for k in range(1, bounces + 1):
        try:
            hit, d_out, normal = _bounce(boundary, state, eps_t, eps_corner, eps_graze, corner_mode)
        except CornerHit as exc:
            traj.termination, traj.error = "corner_hit", str(exc)
            break
        except Grazing as exc:
            traj.termination, traj.error = "grazing", str(exc)
            break
        if rng is not None:
            turned = _rotate(d_out, rng.uniform(-noise_bound, noise_bound))
            if turned[0] * normal[0] + turned[1] * normal[1] > eps_graze:
                d_out = turned
        traj.reflections.append(LabeledPoint(k, hit))
        traj.directions_after.append(d_out)
        traj.incoming.append(state.direction)
        traj.normals.append(normal)
        state = ParticleState(hit, d_out)
    return traj


def reflections_to_graph(
    trajectory: Trajectory,
    policy: DegeneracyPolicy = DegeneracyPolicy.REJECT,
    **kwargs,
) -> ColoredCompleteGraph:
    if len(trajectory.reflections) < 2:
        raise ValueError("need at least two reflection points")
    return color_by_slope(trajectory.reflections, policy, **kwargs)


def window_points(reflections: Sequence[LabeledPoint], start: int, size: int = 6) -> list[LabeledPoint]:
    """A run of consecutive reflections renumbered 1..size."""
    return [
        LabeledPoint(j, p.position, p.curve_param)
        for j, p in enumerate(reflections[start : start + size], start=1)
    ]


def chord_angle_start(circle: Circle, angle: float, phase: float = 0.0) -> ParticleState:
    """Start on a circle at polar angle ``phase`` aimed at the point ``angle`` further on."""
    c, r = circle.center, circle.radius
    p = Point2(c.x + r * math.cos(phase), c.y + r * math.sin(phase))
    q = (c.x + r * math.cos(phase + angle), c.y + r * math.sin(phase + angle))
    return ParticleState.towards(p, (q[0] - p.x, q[1] - p.y))
