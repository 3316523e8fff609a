"""Closed plane curves, point sampling and signed curvature.

Three contour variants are supported:

* ``Circle`` -- analytic, with an explicit traversal orientation.
* ``ClosedPolyline`` -- vertices joined in order, last back to first.
* ``SampledParametric`` -- a polyline whose vertices were sampled from a
  parametric map on [0, 1); the map (and optionally its derivatives) is kept
  so curvature can be evaluated analytically.

Curvature sign convention: a counter-clockwise traversal gives convex arcs
positive curvature.
"""

from __future__ import annotations

import bisect
import enum
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional, Sequence, Union

EPS_ON = 1e-9
TAU = 2.0 * math.pi

Generator = Callable[[float], tuple[float, float]]
# t -> (x', y', x'', y'')
Derivatives = Callable[[float], tuple[float, float, float, float]]


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinates ({self.x}, {self.y})")

    def __iter__(self):
        yield self.x
        yield self.y

    def __sub__(self, other: "Point2") -> tuple[float, float]:
        return (self.x - other.x, self.y - other.y)


def as_point(p) -> Point2:
    if isinstance(p, Point2):
        return p
    x, y = p
    return Point2(float(x), float(y))


class Orientation(enum.Enum):
    CCW = "ccw"
    CW = "cw"

    @property
    def sign(self) -> int:
        return 1 if self is Orientation.CCW else -1

    def flipped(self) -> "Orientation":
        return Orientation.CW if self is Orientation.CCW else Orientation.CCW


@dataclass(frozen=True)
class LabeledPoint:
    index: int
    position: Point2
    curve_param: Optional[float] = None

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("point indices start at 1")


def label_points(positions: Sequence) -> list[LabeledPoint]:
    """Number raw (x, y) positions 1..n in the given order."""
    return [LabeledPoint(i, as_point(p)) for i, p in enumerate(positions, start=1)]


@dataclass(frozen=True)
class CurvatureSample:
    at: Union[Point2, float]
    kappa: float
    y_prime: Optional[float] = None
    y_double_prime: Optional[float] = None

    @property
    def sign(self) -> str:
        if self.kappa > 0:
            return "+"
        if self.kappa < 0:
            return "-"
        return "0"


@dataclass(frozen=True)
class Circle:
    center: Point2
    radius: float
    orientation: Orientation = Orientation.CCW

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise ValueError(f"circle radius must be positive, got {self.radius}")

    def point_at(self, t: float) -> Point2:
        theta = self.orientation.sign * TAU * t
        return Point2(
            self.center.x + self.radius * math.cos(theta),
            self.center.y + self.radius * math.sin(theta),
        )

    def distance_to(self, p: Point2) -> float:
        return abs(math.hypot(p.x - self.center.x, p.y - self.center.y) - self.radius)

    def reversed(self) -> "Circle":
        return Circle(self.center, self.radius, self.orientation.flipped())


@dataclass(frozen=True)
class ClosedPolyline:
    vertices: tuple[Point2, ...]

    def __post_init__(self):
        verts = tuple(as_point(v) for v in self.vertices)
        if len(verts) < 3:
            raise ValueError("a closed polyline needs at least 3 vertices")
        object.__setattr__(self, "vertices", verts)

    @property
    def segments(self) -> list[tuple[Point2, Point2]]:
        v = self.vertices
        return [(v[j], v[(j + 1) % len(v)]) for j in range(len(v))]

    @cached_property
    def signed_area(self) -> float:
        v = self.vertices
        s = 0.0
        for j in range(len(v)):
            a, b = v[j], v[(j + 1) % len(v)]
            s += a.x * b.y - b.x * a.y
        return 0.5 * s

    @property
    def orientation(self) -> Orientation:
        return Orientation.CCW if self.signed_area >= 0 else Orientation.CW

    @cached_property
    def _cumulative(self) -> list[float]:
        out = [0.0]
        for a, b in self.segments:
            out.append(out[-1] + math.hypot(b.x - a.x, b.y - a.y))
        return out

    @property
    def perimeter(self) -> float:
        return self._cumulative[-1]

    def point_at(self, t: float) -> Point2:
        """Point at normalized arc length ``t`` measured from vertex 0."""
        if t == 0.0:
            return self.vertices[0]
        cum = self._cumulative
        s = t * cum[-1]
        j = min(bisect.bisect_right(cum, s) - 1, len(self.vertices) - 1)
        a, b = self.segments[j]
        seg_len = cum[j + 1] - cum[j]
        u = 0.0 if seg_len == 0 else (s - cum[j]) / seg_len
        return Point2(a.x + u * (b.x - a.x), a.y + u * (b.y - a.y))

    def distance_to(self, p: Point2) -> float:
        return min(point_segment_distance(p, a, b) for a, b in self.segments)

    def _reversed_vertices(self) -> tuple[Point2, ...]:
        # keep vertex 0 as the arc-length origin
        return (self.vertices[0],) + tuple(reversed(self.vertices[1:]))

    def reversed(self) -> "ClosedPolyline":
        return ClosedPolyline(self._reversed_vertices())

    def with_orientation(self, orientation: Orientation) -> "ClosedPolyline":
        return self if self.orientation is orientation else self.reversed()


@dataclass(frozen=True)
class SampledParametric(ClosedPolyline):
    generator: Optional[Generator] = field(default=None, compare=False)
    derivatives: Optional[Derivatives] = field(default=None, compare=False)

    @classmethod
    def from_function(
        cls,
        generator: Generator,
        samples: int = 256,
        derivatives: Optional[Derivatives] = None,
    ) -> "SampledParametric":
        verts = tuple(as_point(generator(j / samples)) for j in range(samples))
        return cls(verts, generator, derivatives)

    def derivatives_at(self, t: float) -> tuple[float, float, float, float]:
        if self.derivatives is not None:
            return self.derivatives(t)
        if self.generator is None:
            raise ValueError("sampled curve carries no generator to differentiate")
        # central differences; h balances truncation against rounding
        h = 1e-4
        g = self.generator
        xm, ym = g(t - h)
        x0, y0 = g(t)
        xp, yp = g(t + h)
        return (
            (xp - xm) / (2 * h),
            (yp - ym) / (2 * h),
            (xp - 2 * x0 + xm) / (h * h),
            (yp - 2 * y0 + ym) / (h * h),
        )

    def reversed(self) -> "SampledParametric":
        gen = self.generator
        der = self.derivatives
        rgen = None if gen is None else (lambda t: gen(-t))
        rder = None
        if der is not None:
            def rder(t):
                dx, dy, ddx, ddy = der(-t)
                return (-dx, -dy, ddx, ddy)
        return SampledParametric(self._reversed_vertices(), rgen, rder)

    def with_orientation(self, orientation: Orientation) -> "SampledParametric":
        return self if self.orientation is orientation else self.reversed()


Contour = Union[Circle, ClosedPolyline, SampledParametric]


def contour_orientation(contour: Contour) -> Orientation:
    return contour.orientation


def distance_to_contour(contour: Contour, p) -> float:
    return contour.distance_to(as_point(p))


def point_segment_distance(p: Point2, a: Point2, b: Point2) -> float:
    ex, ey = b.x - a.x, b.y - a.y
    px, py = p.x - a.x, p.y - a.y
    ll = ex * ex + ey * ey
    u = 0.0 if ll == 0 else max(0.0, min(1.0, (px * ex + py * ey) / ll))
    return math.hypot(px - u * ex, py - u * ey)


def _orient(a: Point2, b: Point2, c: Point2) -> float:
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def _on_segment(a: Point2, b: Point2, p: Point2) -> bool:
    return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)


def segments_intersect(a: Point2, b: Point2, c: Point2, d: Point2) -> bool:
    """Closed-segment intersection test, touching and collinear overlap included."""
    o1, o2 = _orient(a, b, c), _orient(a, b, d)
    o3, o4 = _orient(c, d, a), _orient(c, d, b)
    if ((o1 > 0 and o2 < 0) or (o1 < 0 and o2 > 0)) and (
        (o3 > 0 and o4 < 0) or (o3 < 0 and o4 > 0)
    ):
        return True
    return (
        (o1 == 0 and _on_segment(a, b, c))
        or (o2 == 0 and _on_segment(a, b, d))
        or (o3 == 0 and _on_segment(c, d, a))
        or (o4 == 0 and _on_segment(c, d, b))
    )


def validate_simple(contour: Contour) -> bool:
    """True iff the contour does not touch or cross itself."""
    if isinstance(contour, Circle):
        return True
    v = contour.vertices
    n = len(v)
    segs = contour.segments
    for j in range(n):
        a, b = segs[j]
        if a == b:
            return False
        # adjacent edges folding back onto each other
        c = v[(j + 2) % n]
        if _orient(a, b, c) == 0 and (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y) < 0:
            return False
    for j in range(n):
        for m in range(j + 2, n):
            if j == 0 and m == n - 1:
                continue
            if segments_intersect(*segs[j], *segs[m]):
                return False
    return True


def sample_points(contour: Contour, params: Sequence[float]) -> list[LabeledPoint]:
    """Points at normalized arc-length parameters, numbered 1..n in order."""
    params = [float(t) for t in params]
    if not params:
        raise ValueError("need at least one parameter")
    for t in params:
        if not 0.0 <= t < 1.0:
            raise ValueError(f"parameter {t} outside [0, 1)")
    for s, t in zip(params, params[1:]):
        if not t > s:
            raise ValueError("parameters must be strictly increasing")
    return [
        LabeledPoint(i, contour.point_at(t), t) for i, t in enumerate(params, start=1)
    ]


def signed_curvature_graph(y_prime: float, y_double_prime: float) -> float:
    """Curvature of the graph y(x) from its first and second derivatives."""
    return y_double_prime / (1.0 + y_prime * y_prime) ** 1.5


def curvature_sample_graph(x: float, y_prime: float, y_double_prime: float) -> CurvatureSample:
    return CurvatureSample(
        at=x,
        kappa=signed_curvature_graph(y_prime, y_double_prime),
        y_prime=y_prime,
        y_double_prime=y_double_prime,
    )


def signed_curvature_parametric(contour: Contour, param: float) -> CurvatureSample:
    if isinstance(contour, Circle):
        return CurvatureSample(contour.point_at(param), contour.orientation.sign / contour.radius)
    if not isinstance(contour, SampledParametric):
        raise TypeError("polylines have no tangent field; use discrete_curvature")
    dx, dy, ddx, ddy = contour.derivatives_at(param)
    speed2 = dx * dx + dy * dy
    if speed2 == 0:
        raise ValueError(f"parametrization is singular at t={param}")
    kappa = (dx * ddy - dy * ddx) / speed2**1.5
    at = as_point(contour.generator(param)) if contour.generator else param
    return CurvatureSample(at, kappa)


def discrete_curvature(polyline: ClosedPolyline, vertex_index: int) -> float:
    """Signed inverse circumradius of the vertex and its two neighbours.

    ``vertex_index`` is zero-based and wraps around. Left turns are positive.
    """
    if isinstance(polyline, Circle):
        raise TypeError("discrete curvature needs a polyline")
    v = polyline.vertices
    n = len(v)
    a, b, c = v[(vertex_index - 1) % n], v[vertex_index % n], v[(vertex_index + 1) % n]
    ab2 = (b.x - a.x) ** 2 + (b.y - a.y) ** 2
    bc2 = (c.x - b.x) ** 2 + (c.y - b.y) ** 2
    ca2 = (a.x - c.x) ** 2 + (a.y - c.y) ** 2
    if ab2 == 0 or bc2 == 0 or ca2 == 0:
        raise ValueError(f"zero-length edge around vertex {vertex_index}")
    cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x)
    # one sqrt over the product keeps exactly representable cases exact
    return 2.0 * cross / math.sqrt(ab2 * bc2 * ca2)


# -- shape factories --------------------------------------------------------


def regular_polygon(
    n: int,
    radius: float = 1.0,
    center=(0.0, 0.0),
    phase: float = 0.0,
    orientation: Orientation = Orientation.CCW,
) -> ClosedPolyline:
    cx, cy = center
    s = orientation.sign
    verts = [
        (cx + radius * math.cos(phase + s * TAU * j / n), cy + radius * math.sin(phase + s * TAU * j / n))
        for j in range(n)
    ]
    return ClosedPolyline(tuple(verts))


def star_polygon(
    tips: int,
    outer: float = 1.0,
    inner: float = 0.5,
    center=(0.0, 0.0),
    phase: float = 0.0,
) -> ClosedPolyline:
    cx, cy = center
    verts = []
    for j in range(2 * tips):
        r = outer if j % 2 == 0 else inner
        theta = phase + math.pi * j / tips
        verts.append((cx + r * math.cos(theta), cy + r * math.sin(theta)))
    return ClosedPolyline(tuple(verts))


def ellipse(
    a: float,
    b: float,
    center=(0.0, 0.0),
    rotation: float = 0.0,
    samples: int = 256,
) -> SampledParametric:
    cx, cy = center
    cr, sr = math.cos(rotation), math.sin(rotation)

    def gen(t):
        u, v = a * math.cos(TAU * t), b * math.sin(TAU * t)
        return (cx + cr * u - sr * v, cy + sr * u + cr * v)

    def der(t):
        c, s = math.cos(TAU * t), math.sin(TAU * t)
        du, dv = -a * TAU * s, b * TAU * c
        ddu, ddv = -a * TAU * TAU * c, -b * TAU * TAU * s
        return (cr * du - sr * dv, sr * du + cr * dv, cr * ddu - sr * ddv, sr * ddu + cr * ddv)

    return SampledParametric.from_function(gen, samples, der)
