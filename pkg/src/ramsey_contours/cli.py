"""Command-line front end.

Exit codes: 0 success or claim holds, 1 input error, 2 degenerate geometry,
3 claim fails.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

from ramsey_contours import billiard, coloring, contour, ramsey, regions
from ramsey_contours.coloring import ColoredCompleteGraph, DegeneracyPolicy, VertexLabeling
from ramsey_contours.errors import GeometryError
from ramsey_contours.formats import (
    FormatError,
    arrangement_from_dict,
    arrangement_to_dict,
    cliques_to_list,
    contour_from_dict,
    contour_to_dict,
    dump_json,
    graph_to_dict,
    load_json,
    points_from_dict,
    trajectory_to_dict,
    verdict_to_dict,
)
from ramsey_contours.ramsey import MonochromaticClique

log = logging.getLogger("ramsey_contours")

EXIT_OK, EXIT_INPUT, EXIT_DEGENERATE, EXIT_CLAIM_FAILS = 0, 1, 2, 3


@dataclass
class ScenarioResult:
    graph: ColoredCompleteGraph
    triangles: list[MonochromaticClique]
    points: list[list[float]]
    curves: list[dict]
    metadata: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = graph_to_dict(self.graph)
        out.update(
            triangles=cliques_to_list(self.triangles),
            points=self.points,
            curves=self.curves,
            metadata=self.metadata,
        )
        return out

    @property
    def exit_code(self) -> int:
        # below six points there is no guarantee to check
        if self.graph.n >= 6 and not self.triangles:
            return EXIT_CLAIM_FAILS
        return EXIT_OK


def _emit(obj: dict, out: Optional[str]) -> None:
    if out:
        dump_json(obj, out)
    else:
        sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _slope_kwargs(args) -> dict:
    return dict(eps_slope=args.eps_slope, eps_vert=args.eps_vert, seed=args.seed, jitter=args.jitter)


def _slope_metadata(args, graph) -> dict:
    return {
        "policy": args.policy,
        "seed": args.seed,
        "eps_slope": args.eps_slope,
        "eps_vert": args.eps_vert,
        "jitter": args.jitter,
        "perturbed": graph.metadata.get("perturbed", False),
    }


def _result(graph, curves, metadata, positions=None) -> ScenarioResult:
    if positions is None:
        positions = graph.metadata.get("positions", [])
    return ScenarioResult(
        graph,
        ramsey.find_monochromatic_triangles(graph),
        [list(p) for p in positions],
        curves,
        metadata,
    )


def cmd_slope_graph(args) -> int:
    curves = []
    if args.points:
        points = points_from_dict(load_json(args.points))
        source = {"points_file": args.points}
    elif args.contour:
        curve = contour_from_dict(load_json(args.contour))
        if args.params:
            params = args.params
        elif args.count:
            params = [(args.offset + j / args.count) % 1.0 for j in range(args.count)]
            params.sort()
        else:
            raise FormatError("give --params or --count with --contour")
        points = contour.sample_points(curve, params)
        curves = [contour_to_dict(curve)]
        source = {"contour_file": args.contour, "params": list(params)}
    else:
        raise FormatError("give --contour or --points")
    graph = coloring.color_by_slope(points, DegeneracyPolicy(args.policy), **_slope_kwargs(args))
    meta = {"command": "slope-graph", **source, **_slope_metadata(args, graph)}
    result = _result(graph, curves, meta)
    _emit(result.to_dict(), args.out)
    return result.exit_code


def cmd_billiard(args) -> int:
    boundary = contour_from_dict(load_json(args.boundary))
    start = billiard.ParticleState.towards(args.start, args.direction)
    traj = billiard.simulate(
        boundary,
        start,
        args.bounces,
        corner_mode=args.corner_mode,
        noise_bound=args.noise_bound,
        noise_seed=args.seed,
    )
    traj_out = args.trajectory_out
    if traj_out is None and args.out:
        traj_out = args.out.rsplit(".json", 1)[0] + ".trajectory.json"
    if traj_out:
        dump_json(trajectory_to_dict(traj), traj_out)
    if traj.termination != "completed":
        log.error("trajectory stopped early: %s (%s)", traj.termination, traj.error)
        return EXIT_DEGENERATE
    graph = billiard.reflections_to_graph(traj, DegeneracyPolicy(args.policy), **_slope_kwargs(args))
    meta = {
        "command": "billiard",
        "boundary_file": args.boundary,
        "start": list(args.start),
        "direction": list(start.direction),
        "bounces": args.bounces,
        "corner_mode": args.corner_mode,
        "noise_bound": args.noise_bound,
        "termination": traj.termination,
        **_slope_metadata(args, graph),
    }
    result = _result(graph, [contour_to_dict(boundary)], meta)
    _emit(result.to_dict(), args.out)
    return result.exit_code


def cmd_regions_graph(args) -> int:
    arrangement = arrangement_from_dict(load_json(args.arrangement))
    points = points_from_dict(load_json(args.points))
    graph = regions.region_graph(arrangement, points, args.eps_region)
    meta = {
        "command": "regions-graph",
        "arrangement_file": args.arrangement,
        "points_file": args.points,
        "eps_region": args.eps_region,
    }
    positions = [[p.position.x, p.position.y] for p in points]
    result = _result(graph, arrangement_to_dict(arrangement)["curves"], meta, positions)
    _emit(result.to_dict(), args.out)
    return result.exit_code


def cmd_curvature(args) -> int:
    if args.derivs:
        yp, ypp = args.derivs
        kappa = contour.signed_curvature_graph(yp, ypp)
        _emit({"y_prime": yp, "y_double_prime": ypp, "kappa": kappa}, args.out)
        return EXIT_OK
    if not args.contour:
        raise FormatError("give --contour or --derivs")
    curve = contour_from_dict(load_json(args.contour))
    samples = []
    if isinstance(curve, contour.Circle):
        for t in args.params or [0.0]:
            s = contour.signed_curvature_parametric(curve, t)
            samples.append({"param": t, "position": list(s.at), "kappa": s.kappa, "sign": s.sign})
    else:
        indices = args.vertices if args.vertices else range(len(curve.vertices))
        for j in indices:
            v = curve.vertices[j % len(curve.vertices)]
            k = contour.discrete_curvature(curve, j)
            sign = "+" if k > 0 else "-" if k < 0 else "0"
            samples.append({"vertex": j, "position": [v.x, v.y], "kappa": k, "sign": sign})
    out: dict[str, Any] = {"samples": samples}
    if len(samples) >= 2:
        graph = coloring.color_by_labels(VertexLabeling.from_sequence([s["sign"] for s in samples]))
        result = _result(
            graph,
            [contour_to_dict(curve)],
            {"command": "curvature", "contour_file": args.contour},
            [s["position"] for s in samples],
        )
        out.update(result.to_dict())
    _emit(out, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.claim == "r33":
        v = ramsey.verify_r33(args.n)
        verdict = verdict_to_dict(
            args.n, "r33", v.all_colorings_contain_triangle, v.counterexample_count, v.witness_bits,
            checked=v.colorings_checked,
        )
    elif args.claim == "trans":
        v = ramsey.verify_transitive_ramsey(args.n)
        witness = None
        if v.first_failure is not None:
            witness = "".join(str(v.first_failure >> j & 1) for j in range(args.n))
        verdict = verdict_to_dict(
            args.n, "trans", v.holds, v.path_or_green_failures + v.red_triangle_labelings, witness,
            checked=v.labelings_checked,
            no_red_triangle_ever=v.no_red_triangle_ever,
            every_assignment_has_green_triangle_or_red_path2=v.every_assignment_has_green_triangle_or_red_path2,
        )
    else:
        v = ramsey.multipartite_red_triangle_verdict(args.n, args.max_part)
        witness = ramsey.format_partition(v.witness) if v.witness else None
        verdict = verdict_to_dict(
            args.n, "multipartite", v.holds, v.counterexample_count, witness,
            checked=v.partitions_checked, max_part=args.max_part,
        )
    _emit(verdict, args.out)
    return EXIT_OK if verdict["holds"] else EXIT_CLAIM_FAILS


def cmd_render(args) -> int:
    from ramsey_contours.render import render_svg

    scenes = [load_json(path) for path in args.inputs]
    render_svg(scenes, args.out, titles=args.titles or ())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ramsey-contours", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def slope_flags(p):
        p.add_argument("--policy", choices=["reject", "perturb"], default="reject")
        p.add_argument("--seed", type=int, default=coloring.DEFAULT_SEED)
        p.add_argument("--eps-slope", type=float, default=coloring.EPS_SLOPE)
        p.add_argument("--eps-vert", type=float, default=coloring.EPS_VERT)
        p.add_argument("--jitter", type=float, default=coloring.JITTER,
                       help="perturbation size relative to the largest coordinate (at least 1)")

    p = sub.add_parser("slope-graph", help="color chords between points by slope sign")
    p.add_argument("--contour")
    p.add_argument("--points")
    p.add_argument("--params", type=float, nargs="+")
    p.add_argument("--count", type=int)
    p.add_argument("--offset", type=float, default=0.0)
    p.add_argument("--out")
    slope_flags(p)
    p.set_defaults(func=cmd_slope_graph)

    p = sub.add_parser("billiard", help="simulate a billiard and color its reflection points")
    p.add_argument("--boundary", required=True)
    p.add_argument("--start", type=float, nargs=2, required=True, metavar=("X", "Y"))
    p.add_argument("--direction", type=float, nargs=2, required=True, metavar=("DX", "DY"))
    p.add_argument("--bounces", type=int, default=6)
    p.add_argument("--corner-mode", choices=["error", "bisector"], default="error")
    p.add_argument("--noise-bound", type=float, default=0.0)
    p.add_argument("--trajectory-out")
    p.add_argument("--out")
    slope_flags(p)
    p.set_defaults(func=cmd_billiard)

    p = sub.add_parser("regions-graph", help="color point pairs by shared Jordan region")
    p.add_argument("--arrangement", required=True)
    p.add_argument("--points", required=True)
    p.add_argument("--eps-region", type=float, default=regions.EPS_REGION)
    p.add_argument("--out")
    p.set_defaults(func=cmd_regions_graph)

    p = sub.add_parser("curvature", help="signed curvature samples and their sign coloring")
    p.add_argument("--contour")
    p.add_argument("--params", type=float, nargs="+")
    p.add_argument("--vertices", type=int, nargs="+")
    p.add_argument("--derivs", type=float, nargs=2, metavar=("YP", "YPP"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_curvature)

    p = sub.add_parser("verify", help="exhaustive check of a Ramsey claim")
    p.add_argument("--claim", choices=["r33", "trans", "multipartite"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-part", type=int, default=2)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw result or trajectory files to SVG")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--titles", nargs="+")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors, which here means degenerate geometry
        return EXIT_INPUT if exc.code else 0
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
    )
    try:
        return args.func(args)
    except GeometryError as exc:
        log.error("degenerate geometry: %s", exc)
        return EXIT_DEGENERATE
    except (FormatError, OSError, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
