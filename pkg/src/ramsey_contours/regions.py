"""Region labels for points in the plane cut by one or more Jordan curves.

A point's region label is its vector of winding numbers, one per curve. For
pairwise disjoint curves (separate or nested) two points share a label
exactly when they lie in the same complementary region.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from ramsey_contours.coloring import ColoredCompleteGraph, VertexLabeling, color_by_labels
from ramsey_contours.contour import Circle, Contour, LabeledPoint, as_point, validate_simple
from ramsey_contours.errors import OnBoundary, WindingError

EPS_REGION = 1e-9


@dataclass(frozen=True)
class Arrangement:
    curves: tuple[Contour, ...]
    names: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "curves", tuple(self.curves))
        if self.names is not None:
            object.__setattr__(self, "names", tuple(self.names))
            if len(self.names) != len(self.curves):
                raise ValueError("one name per curve")
        for j, c in enumerate(self.curves):
            if not validate_simple(c):
                raise ValueError(f"curve {j} is not simple")


def winding_number(curve: Contour, p, eps_region: float = EPS_REGION) -> int:
    p = as_point(p)
    if curve.distance_to(p) <= eps_region:
        raise OnBoundary(f"point {tuple(p)} lies on the curve")
    if isinstance(curve, Circle):
        inside = math.hypot(p.x - curve.center.x, p.y - curve.center.y) < curve.radius
        return curve.orientation.sign if inside else 0
    total = 0.0
    verts = curve.vertices
    for j in range(len(verts)):
        a, b = verts[j], verts[(j + 1) % len(verts)]
        ax, ay = a.x - p.x, a.y - p.y
        bx, by = b.x - p.x, b.y - p.y
        total += math.atan2(ax * by - ay * bx, ax * bx + ay * by)
    turns = total / (2 * math.pi)
    w = round(turns)
    if abs(turns - w) > 0.25:
        raise WindingError(f"winding sum {turns:.3f} turns is not near an integer")
    return int(w)


def region_signature(arrangement: Arrangement, p, eps_region: float = EPS_REGION) -> tuple[int, ...]:
    return tuple(winding_number(c, p, eps_region) for c in arrangement.curves)


def classify(
    arrangement: Arrangement, points: Sequence[LabeledPoint], eps_region: float = EPS_REGION
) -> VertexLabeling:
    return VertexLabeling(
        {p.index: region_signature(arrangement, p.position, eps_region) for p in points}
    )


def region_graph(
    arrangement: Arrangement, points: Sequence[LabeledPoint], eps_region: float = EPS_REGION
) -> ColoredCompleteGraph:
    """Green inside a common region, Red across regions."""
    graph = color_by_labels(classify(arrangement, points, eps_region))
    graph.metadata.update(rule="regions", eps_region=eps_region)
    return graph

