"""Ramsey colorings of point sets on closed plane curves.

Builds two-colored complete graphs from points on closed contours (chord
slope sign, curvature sign, Jordan region membership), simulates billiards
whose reflection points feed those colorings, and checks the combinatorial
claims by exhaustive enumeration.
"""

from ramsey_contours.errors import (
    CoincidentPoints,
    CornerHit,
    DegenerateSlope,
    GeometryError,
    Grazing,
    NoIntersection,
    OnBoundary,
)
from ramsey_contours.contour import (
    Circle,
    ClosedPolyline,
    LabeledPoint,
    Orientation,
    Point2,
    SampledParametric,
)
from ramsey_contours.coloring import (
    ColoredCompleteGraph,
    DegeneracyPolicy,
    EdgeColor,
    VertexLabeling,
    color_by_labels,
    color_by_slope,
)
from ramsey_contours.ramsey import (
    find_monochromatic_cliques,
    find_monochromatic_triangles,
    verify_multipartite_red_triangle,
    verify_r33,
    verify_transitive_ramsey,
)

__version__ = "0.1.0"

__all__ = [
    "Circle",
    "ClosedPolyline",
    "CoincidentPoints",
    "ColoredCompleteGraph",
    "CornerHit",
    "DegeneracyPolicy",
    "DegenerateSlope",
    "EdgeColor",
    "GeometryError",
    "Grazing",
    "LabeledPoint",
    "NoIntersection",
    "OnBoundary",
    "Orientation",
    "Point2",
    "SampledParametric",
    "VertexLabeling",
    "color_by_labels",
    "color_by_slope",
    "find_monochromatic_cliques",
    "find_monochromatic_triangles",
    "verify_multipartite_red_triangle",
    "verify_r33",
    "verify_transitive_ramsey",
]
