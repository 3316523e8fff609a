"""Two-colored complete graphs built from labeled points.

Two rules are implemented:

* slope coloring -- the chord between points i and k is Red when its slope
  is positive and Green when negative;
* equality coloring -- Green when two vertices carry the same discrete label
  (curvature sign, region), Red otherwise.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Any, Hashable, Iterator, Mapping, Optional, Sequence

import numpy as np

from ramsey_contours.contour import LabeledPoint, Point2
from ramsey_contours.errors import CoincidentPoints, DegenerateSlope

EPS_SLOPE = 1e-12
EPS_VERT = 1e-12
JITTER = 1e-9
DEFAULT_SEED = 0
MAX_JITTER_DRAWS = 8

Edge = tuple[int, int]


class EdgeColor(enum.Enum):
    RED = "red"
    GREEN = "green"

    def swapped(self) -> "EdgeColor":
        return EdgeColor.GREEN if self is EdgeColor.RED else EdgeColor.RED


class DegeneracyPolicy(enum.Enum):
    REJECT = "reject"
    PERTURB = "perturb"


@dataclass(frozen=True)
class ChordLine:
    i: int
    k: int
    alpha: float
    beta: float


@dataclass(frozen=True)
class LabelPair:
    """Provenance of an equality-colored edge."""

    left: Hashable
    right: Hashable


def edge(i: int, k: int) -> Edge:
    return (i, k) if i < k else (k, i)


@dataclass
class ColoredCompleteGraph:
    n: int
    edge_color: dict[Edge, EdgeColor]
    provenance: dict[Edge, Any] = field(default_factory=dict)
    metadata: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("a complete graph here needs n >= 2")
        expected = set(itertools.combinations(range(1, self.n + 1), 2))
        if set(self.edge_color) != expected:
            raise ValueError("edge coloring is not complete on vertices 1..n")

    def color(self, i: int, k: int) -> EdgeColor:
        return self.edge_color[edge(i, k)]

    def edges(self) -> Iterator[tuple[Edge, EdgeColor]]:
        for e in sorted(self.edge_color):
            yield e, self.edge_color[e]

    def swapped(self) -> "ColoredCompleteGraph":
        return ColoredCompleteGraph(
            self.n,
            {e: c.swapped() for e, c in self.edge_color.items()},
            dict(self.provenance),
            dict(self.metadata),
        )

    def to_bits(self) -> int:
        """Edge-lexicographic bit encoding, bit j set when edge j is Red."""
        bits = 0
        for j, e in enumerate(itertools.combinations(range(1, self.n + 1), 2)):
            if self.edge_color[e] is EdgeColor.RED:
                bits |= 1 << j
        return bits

    @classmethod
    def from_bits(cls, n: int, bits: int) -> "ColoredCompleteGraph":
        colors = {
            e: EdgeColor.RED if bits >> j & 1 else EdgeColor.GREEN
            for j, e in enumerate(itertools.combinations(range(1, n + 1), 2))
        }
        return cls(n, colors)


@dataclass(frozen=True)
class VertexLabeling:
    label: Mapping[int, Hashable]

    def __post_init__(self):
        if sorted(self.label) != list(range(1, len(self.label) + 1)):
            raise ValueError("labels must cover vertices 1..n")

    @property
    def n(self) -> int:
        return len(self.label)

    @classmethod
    def from_sequence(cls, labels: Sequence[Hashable]) -> "VertexLabeling":
        return cls({i: lab for i, lab in enumerate(labels, start=1)})


def _is_vertical(a: Point2, b: Point2, eps_vert: float) -> bool:
    return abs(b.x - a.x) <= eps_vert * max(1.0, abs(a.x), abs(b.x))


def _is_horizontal(a: Point2, b: Point2, eps_slope: float) -> bool:
    return abs(b.y - a.y) <= eps_slope * max(1.0, abs(a.y), abs(b.y))


def chord(p_i: LabeledPoint, p_k: LabeledPoint, eps_vert: float = EPS_VERT) -> ChordLine:
    """Slope and intercept of the line through two labeled points."""
    if p_k.index < p_i.index:
        p_i, p_k = p_k, p_i
    a, b = p_i.position, p_k.position
    if a == b:
        raise CoincidentPoints(f"points {p_i.index} and {p_k.index} coincide at {tuple(a)}")
    if _is_vertical(a, b, eps_vert):
        raise DegenerateSlope(f"chord {p_i.index}-{p_k.index} is vertical")
    alpha = (b.y - a.y) / (b.x - a.x)
    return ChordLine(p_i.index, p_k.index, alpha, a.y - alpha * a.x)


def _check_indices(points: Sequence[LabeledPoint]) -> None:
    if sorted(p.index for p in points) != list(range(1, len(points) + 1)):
        raise ValueError("point indices must be distinct and run 1..n")


def _degenerate_pairs(points, eps_slope, eps_vert) -> list[Edge]:
    bad = []
    for p, q in itertools.combinations(points, 2):
        if p.position == q.position:
            raise CoincidentPoints(f"points {p.index} and {q.index} coincide")
        if _is_vertical(p.position, q.position, eps_vert) or _is_horizontal(
            p.position, q.position, eps_slope
        ):
            bad.append(edge(p.index, q.index))
    return bad


def jitter_points(
    points: Sequence[LabeledPoint],
    seed: int,
    magnitude: float = JITTER,
    rng: Optional[np.random.Generator] = None,
) -> list[LabeledPoint]:
    """Move every point by a uniform offset in [-magnitude, magnitude]^2.

    Pass ``rng`` to continue an existing seeded stream; ``seed`` is then ignored.
    """
    rng = np.random.default_rng(seed) if rng is None else rng
    offsets = rng.uniform(-magnitude, magnitude, size=(len(points), 2))
    return [
        LabeledPoint(p.index, Point2(p.position.x + dx, p.position.y + dy), p.curve_param)
        for p, (dx, dy) in zip(points, offsets.tolist())
    ]


def color_by_slope(
    points: Sequence[LabeledPoint],
    policy: DegeneracyPolicy = DegeneracyPolicy.REJECT,
    *,
    eps_slope: float = EPS_SLOPE,
    eps_vert: float = EPS_VERT,
    seed: int = DEFAULT_SEED,
    jitter: float = JITTER,
) -> ColoredCompleteGraph:
    """Red for positive chord slope, Green for negative.

    Horizontal or vertical chords have no slope sign. Under ``REJECT`` they
    raise ``DegenerateSlope``; under ``PERTURB`` every point is moved by a
    seeded uniform jitter of ``jitter`` times the largest coordinate
    magnitude (at least 1), redrawn from the same stream (at most
    ``MAX_JITTER_DRAWS`` times) until no chord is degenerate.
    """
    points = sorted(points, key=lambda p: p.index)
    if len(points) < 2:
        raise ValueError("need at least two points")
    _check_indices(points)
    policy = DegeneracyPolicy(policy)
    meta = {"rule": "slope", "policy": policy.value, "eps_slope": eps_slope, "eps_vert": eps_vert}

    bad = _degenerate_pairs(points, eps_slope, eps_vert)
    if bad:
        if policy is DegeneracyPolicy.REJECT:
            raise DegenerateSlope(f"degenerate chords: {bad}")
        rng = np.random.default_rng(seed)
        original = points
        # degeneracy is tested relative to coordinate size, so scale the jitter too
        scale = max([1.0] + [abs(c) for p in points for c in p.position])
        for draw in range(1, MAX_JITTER_DRAWS + 1):
            points = jitter_points(original, seed, jitter * scale, rng)
            bad = _degenerate_pairs(points, eps_slope, eps_vert)
            if not bad:
                break
        else:
            raise DegenerateSlope(f"chords still degenerate after {MAX_JITTER_DRAWS} jitter draws: {bad}")
        meta.update(perturbed=True, seed=seed, jitter=jitter, jitter_scale=scale, jitter_draws=draw)
    else:
        meta["perturbed"] = False

    colors, prov = {}, {}
    for p, q in itertools.combinations(points, 2):
        line = chord(p, q, eps_vert)
        e = (line.i, line.k)
        colors[e] = EdgeColor.RED if line.alpha > 0 else EdgeColor.GREEN
        prov[e] = line
    meta["positions"] = [tuple(p.position) for p in points]
    return ColoredCompleteGraph(len(points), colors, prov, meta)


def color_by_labels(labeling: VertexLabeling) -> ColoredCompleteGraph:
    """Green between equally labeled vertices, Red otherwise."""
    n = labeling.n
    if n < 2:
        raise ValueError("need at least two labeled vertices")
    colors, prov = {}, {}
    for i, k in itertools.combinations(range(1, n + 1), 2):
        li, lk = labeling.label[i], labeling.label[k]
        colors[(i, k)] = EdgeColor.GREEN if li == lk else EdgeColor.RED
        prov[(i, k)] = LabelPair(li, lk)
    return ColoredCompleteGraph(n, colors, prov, {"rule": "labels"})


def mirror_x(points: Sequence[LabeledPoint]) -> list[LabeledPoint]:
    """Reflect points across the y-axis; every chord slope changes sign."""
    return [LabeledPoint(p.index, Point2(-p.position.x, p.position.y), p.curve_param) for p in points]


def slope_is_degenerate(a: Point2, b: Point2, eps_slope: float = EPS_SLOPE, eps_vert: float = EPS_VERT) -> bool:
    return a == b or _is_vertical(a, b, eps_vert) or _is_horizontal(a, b, eps_slope)
