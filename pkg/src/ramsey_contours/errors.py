"""Exception types raised by the geometry and coloring routines."""


class GeometryError(ValueError):
    """Base class for configurations the geometric routines refuse to handle."""


class DegenerateSlope(GeometryError):
    """A chord is horizontal or vertical, so its slope has no sign."""


class CoincidentPoints(DegenerateSlope):
    """Two points share a position, so the chord between them is undefined."""


class CornerHit(GeometryError):
    """A billiard ray hit a polyline vertex, where the normal is undefined."""


class Grazing(GeometryError):
    """A billiard ray met the boundary (nearly) tangentially."""


class NoIntersection(GeometryError):
    pass


class OnBoundary(GeometryError):
    """A query point lies on (or too close to) a curve."""


class WindingError(GeometryError):
    """Accumulated turning angle is too far from a whole number of turns."""
