"""JSON file formats: contours, arrangements, points, graphs, verdicts, trajectories."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Sequence

from ramsey_contours.coloring import ChordLine, ColoredCompleteGraph, EdgeColor, LabelPair
from ramsey_contours.contour import (
    Circle,
    ClosedPolyline,
    Contour,
    LabeledPoint,
    Orientation,
    Point2,
    SampledParametric,
    label_points,
)


class FormatError(ValueError):
    pass


def load_json(path) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc


def dump_json(obj, path) -> None:
    Path(path).write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _pair(v, what) -> tuple[float, float]:
    try:
        x, y = v
        return float(x), float(y)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"{what}: expected [x, y], got {v!r}") from exc


def contour_from_dict(obj: dict) -> Contour:
    if not isinstance(obj, dict) or "type" not in obj:
        raise FormatError("contour object needs a 'type' field")
    try:
        orientation = Orientation(obj.get("orientation", "ccw"))
    except ValueError as exc:
        raise FormatError(f"bad orientation {obj.get('orientation')!r}") from exc
    kind = obj["type"]
    try:
        if kind == "circle":
            return Circle(Point2(*_pair(obj["center"], "center")), float(obj["radius"]), orientation)
        if kind in ("polyline", "parametric_samples"):
            verts = tuple(Point2(*_pair(v, "vertex")) for v in obj["vertices"])
            cls = ClosedPolyline if kind == "polyline" else SampledParametric
            curve = cls(verts)
            if "orientation" in obj:
                curve = curve.with_orientation(orientation)
            return curve
    except KeyError as exc:
        raise FormatError(f"{kind} contour missing field {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise FormatError(f"invalid {kind} contour: {exc}") from exc
    raise FormatError(f"unknown contour type {kind!r}")


def contour_to_dict(contour: Contour) -> dict:
    if isinstance(contour, Circle):
        return {
            "type": "circle",
            "center": [contour.center.x, contour.center.y],
            "radius": contour.radius,
            "orientation": contour.orientation.value,
        }
    kind = "parametric_samples" if isinstance(contour, SampledParametric) else "polyline"
    return {
        "type": kind,
        "vertices": [[v.x, v.y] for v in contour.vertices],
        "orientation": contour.orientation.value,
    }


def arrangement_from_dict(obj: dict):
    from ramsey_contours.regions import Arrangement

    if not isinstance(obj, dict) or "curves" not in obj:
        raise FormatError("arrangement object needs a 'curves' list")
    curves = [contour_from_dict(c) for c in obj["curves"]]
    names = obj.get("names")
    try:
        return Arrangement(tuple(curves), tuple(names) if names is not None else None)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def arrangement_to_dict(arrangement) -> dict:
    out = {"curves": [contour_to_dict(c) for c in arrangement.curves]}
    if arrangement.names is not None:
        out["names"] = list(arrangement.names)
    return out


def points_from_dict(obj: dict) -> list[LabeledPoint]:
    if not isinstance(obj, dict) or "points" not in obj:
        raise FormatError("points object needs a 'points' list")
    try:
        return label_points([_pair(p, "point") for p in obj["points"]])
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def points_to_dict(points: Sequence[LabeledPoint]) -> dict:
    return {"points": [[p.position.x, p.position.y] for p in sorted(points, key=lambda p: p.index)]}


def _label_to_json(label):
    return list(label) if isinstance(label, tuple) else label


def _label_from_json(label):
    return tuple(label) if isinstance(label, list) else label


def graph_to_dict(graph: ColoredCompleteGraph) -> dict:
    edges = []
    for (i, k), color in graph.edges():
        rec = {"i": i, "k": k, "color": color.value}
        prov = graph.provenance.get((i, k))
        if isinstance(prov, ChordLine):
            rec["alpha"] = prov.alpha
            rec["beta"] = prov.beta
        elif isinstance(prov, LabelPair):
            rec["labels"] = [_label_to_json(prov.left), _label_to_json(prov.right)]
        edges.append(rec)
    return {"n": graph.n, "edges": edges}


def graph_from_dict(obj: dict) -> ColoredCompleteGraph:
    try:
        n = int(obj["n"])
        colors, prov = {}, {}
        for rec in obj["edges"]:
            i, k = int(rec["i"]), int(rec["k"])
            e = (min(i, k), max(i, k))
            colors[e] = EdgeColor(rec["color"])
            if "alpha" in rec:
                prov[e] = ChordLine(e[0], e[1], float(rec["alpha"]), float(rec["beta"]))
            elif "labels" in rec:
                prov[e] = LabelPair(*(_label_from_json(x) for x in rec["labels"]))
        return ColoredCompleteGraph(n, colors, prov)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"invalid graph object: {exc}") from exc


def cliques_to_list(cliques) -> list[dict]:
    return [{"vertices": list(c.vertices), "color": c.color.value} for c in cliques]


def trajectory_to_dict(traj) -> dict:
    return {
        "boundary": contour_to_dict(traj.boundary),
        "start": {
            "position": [traj.start.position.x, traj.start.position.y],
            "direction": list(traj.start.direction),
        },
        "reflections": [[p.position.x, p.position.y] for p in traj.reflections],
        "termination": traj.termination,
    }


def verdict_to_dict(n: int, claim: str, holds: bool, counterexamples: int, witness=None, **extra) -> dict:
    out = {"n": n, "claim": claim, "holds": bool(holds), "counterexamples": int(counterexamples)}
    if witness is not None:
        out["witness"] = str(witness)
    out.update(extra)
    return out
