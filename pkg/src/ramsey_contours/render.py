"""Static SVG drawings of contours, colored complete graphs and triangles.

Each contour is drawn as one patch whose SVG group id is ``contour-<k>``, so
the number of drawn curves can be read back from the file. Output carries no
timestamp and uses a fixed hash salt, making repeated renders byte-identical.
"""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")

from matplotlib import patches  # noqa: E402
from matplotlib import rc_context  # noqa: E402
from matplotlib.figure import Figure  # noqa: E402

EDGE_COLORS = {"red": "#d62728", "green": "#2ca02c"}


def _draw_contour(ax, obj: dict, gid: str) -> None:
    style = dict(fill=False, edgecolor="black", linewidth=1.6, zorder=1)
    if obj["type"] == "circle":
        patch = patches.Circle(tuple(obj["center"]), obj["radius"], **style)
    else:
        patch = patches.Polygon(obj["vertices"], closed=True, **style)
    patch.set_gid(gid)
    ax.add_patch(patch)


def _draw_scene(ax, scene: dict, first_gid: int) -> int:
    """Draw one result or trajectory object; returns the next free contour id."""
    curves = list(scene.get("curves", []))
    if "boundary" in scene:
        curves.append(scene["boundary"])
    for k, c in enumerate(curves):
        _draw_contour(ax, c, f"contour-{first_gid + k}")

    pts = scene.get("points") or scene.get("reflections") or []
    if "reflections" in scene and "edges" not in scene and pts:
        path = [scene["start"]["position"]] + pts
        ax.plot(*zip(*path), color="#7b3fa0", linewidth=0.8, zorder=2)

    for tri in scene.get("triangles", []):
        a, b, c = (pts[v - 1] for v in tri["vertices"])
        ax.add_patch(
            patches.Polygon([a, b, c], closed=True, facecolor=EDGE_COLORS[tri["color"]],
                            alpha=0.12, edgecolor="none", zorder=2)
        )
    for e in scene.get("edges", []):
        p, q = pts[e["i"] - 1], pts[e["k"] - 1]
        ax.plot([p[0], q[0]], [p[1], q[1]], color=EDGE_COLORS[e["color"]], linewidth=1.0, zorder=3)
    for j, (x, y) in enumerate(pts, start=1):
        ax.plot([x], [y], "o", color="black", markersize=4, zorder=4)
        ax.annotate(str(j), (x, y), textcoords="offset points", xytext=(4, 4), fontsize=8)

    ax.set_aspect("equal")
    ax.autoscale_view()
    ax.margins(0.08)
    ax.set_xticks([])
    ax.set_yticks([])
    return first_gid + len(curves)


def render_svg(scenes: Sequence[dict], out_path, titles: Sequence[str] = ()) -> None:
    if not scenes:
        raise ValueError("nothing to render")
    with rc_context({"svg.hashsalt": "ramsey-contours", "svg.fonttype": "path"}):
        fig = Figure(figsize=(4.5 * len(scenes), 4.5))
        axes = fig.subplots(1, len(scenes), squeeze=False)[0]
        gid = 0
        for j, (ax, scene) in enumerate(zip(axes, scenes)):
            gid = _draw_scene(ax, scene, gid)
            if j < len(titles):
                ax.set_title(titles[j], fontsize=9)
        fig.savefig(out_path, format="svg", metadata={"Date": None})
