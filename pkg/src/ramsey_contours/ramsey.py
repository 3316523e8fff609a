"""Monochromatic clique search and exhaustive Ramsey verifiers.

The verifiers enumerate every object in the claim's domain (all 2-colorings
of K_n, all two-valued vertex labelings, all bounded set partitions) and
report counts plus the first counterexample in enumeration order. Colorings
of K_n are encoded as C(n,2)-bit integers in edge-lexicographic order with a
set bit meaning Red; sweeps run over fixed-size index chunks with numpy, so
the aggregate never depends on how the range is split.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from ramsey_contours.coloring import ColoredCompleteGraph, EdgeColor, VertexLabeling, color_by_labels

R33_MAX_N = 7
TRANSITIVE_MAX_N = 20
CHUNK = 1 << 16


@dataclass(frozen=True)
class MonochromaticClique:
    vertices: tuple[int, ...]
    color: EdgeColor


@dataclass(frozen=True)
class RamseyVerdict:
    n: int
    colorings_checked: int
    all_colorings_contain_triangle: bool
    counterexample_count: int
    # edge-lexicographic bits of the first triangle-free coloring
    sample_counterexample: Optional[int] = None

    @property
    def witness_bits(self) -> Optional[str]:
        if self.sample_counterexample is None:
            return None
        m = self.n * (self.n - 1) // 2
        return "".join("1" if self.sample_counterexample >> j & 1 else "0" for j in range(m))

    def witness_graph(self) -> Optional[ColoredCompleteGraph]:
        if self.sample_counterexample is None:
            return None
        return ColoredCompleteGraph.from_bits(self.n, self.sample_counterexample)


@dataclass(frozen=True)
class TransitiveRamseyVerdict:
    n: int
    labelings_checked: int
    every_assignment_has_green_triangle_or_red_path2: bool
    no_red_triangle_ever: bool
    # labelings (bit v-1 = label of vertex v) violating each statement
    path_or_green_failures: int = 0
    red_triangle_labelings: int = 0
    first_failure: Optional[int] = None

    @property
    def holds(self) -> bool:
        return self.no_red_triangle_ever and self.every_assignment_has_green_triangle_or_red_path2


@dataclass(frozen=True)
class MultipartiteVerdict:
    n: int
    max_part_size: int
    partitions_checked: int
    holds: bool
    counterexample_count: int
    witness: Optional[tuple[tuple[int, ...], ...]] = None


def _is_mono(graph: ColoredCompleteGraph, vertices) -> Optional[EdgeColor]:
    pairs = itertools.combinations(vertices, 2)
    first = graph.color(*next(pairs))
    for i, k in pairs:
        if graph.color(i, k) is not first:
            return None
    return first


def find_monochromatic_triangles(graph: ColoredCompleteGraph) -> list[MonochromaticClique]:
    """All triangles whose three edges share a color, in lexicographic order."""
    out = []
    for a, b, c in itertools.combinations(range(1, graph.n + 1), 3):
        col = graph.color(a, b)
        if graph.color(b, c) is col and graph.color(a, c) is col:
            out.append(MonochromaticClique((a, b, c), col))
    return out


def find_monochromatic_cliques(graph: ColoredCompleteGraph, size: int) -> list[MonochromaticClique]:
    if not 2 <= size <= graph.n:
        raise ValueError(f"clique size {size} outside 2..{graph.n}")
    out = []
    for verts in itertools.combinations(range(1, graph.n + 1), size):
        col = _is_mono(graph, verts)
        if col is not None:
            out.append(MonochromaticClique(verts, col))
    return out


def has_monochromatic_triangle(graph: ColoredCompleteGraph) -> bool:
    for a, b, c in itertools.combinations(range(1, graph.n + 1), 3):
        col = graph.color(a, b)
        if graph.color(b, c) is col and graph.color(a, c) is col:
            return True
    return False


def _edge_index(n: int) -> dict[tuple[int, int], int]:
    return {e: j for j, e in enumerate(itertools.combinations(range(1, n + 1), 2))}


def triangle_masks(n: int) -> list[int]:
    idx = _edge_index(n)
    return [
        (1 << idx[(a, b)]) | (1 << idx[(b, c)]) | (1 << idx[(a, c)])
        for a, b, c in itertools.combinations(range(1, n + 1), 3)
    ]


def _chunks(total: int, size: int = CHUNK) -> Iterator[np.ndarray]:
    for start in range(0, total, size):
        yield np.arange(start, min(start + size, total), dtype=np.uint64)


def verify_r33(n: int) -> RamseyVerdict:
    """Check every Red/Green coloring of K_n for a monochromatic triangle."""
    if not 2 <= n <= R33_MAX_N:
        raise ValueError(f"n={n} outside the enumeration bound 2..{R33_MAX_N}")
    m = n * (n - 1) // 2
    total = 1 << m
    masks = [np.uint64(t) for t in triangle_masks(n)]
    bad_count = 0
    first = None
    for codes in _chunks(total):
        mono = np.zeros(codes.shape, dtype=bool)
        for t in masks:
            hit = codes & t
            mono |= (hit == t) | (hit == 0)
        free = np.flatnonzero(~mono)
        bad_count += int(free.size)
        if first is None and free.size:
            first = int(codes[free[0]])
    return RamseyVerdict(n, total, bad_count == 0, bad_count, first)


def verify_transitive_ramsey(n: int) -> TransitiveRamseyVerdict:
    """Sweep all two-valued vertex labelings under the equality coloring.

    Reports whether a Red triangle ever appears, and whether every labeling
    contains a Green triangle or a Red path on two edges.
    """
    if not 2 <= n <= TRANSITIVE_MAX_N:
        raise ValueError(f"n={n} outside 2..{TRANSITIVE_MAX_N}")
    total = 1 << n
    triangles = list(itertools.combinations(range(n), 3))
    red_tri_count = 0
    weak_count = 0
    first_failure = None
    for labels in _chunks(total):
        bit = [(labels >> np.uint64(v)) & np.uint64(1) for v in range(n)]
        red_tri = np.zeros(labels.shape, dtype=bool)
        good = np.zeros(labels.shape, dtype=bool)
        for a, b, c in triangles:
            reds = (
                (bit[a] != bit[b]).astype(np.uint8)
                + (bit[b] != bit[c]).astype(np.uint8)
                + (bit[a] != bit[c]).astype(np.uint8)
            )
            red_tri |= reds == 3
            # zero red edges: green triangle; two or more: a red 2-path
            good |= (reds == 0) | (reds >= 2)
        red_tri_count += int(red_tri.sum())
        failures = np.flatnonzero(~good | red_tri)
        weak_count += int((~good).sum())
        if first_failure is None and failures.size:
            first_failure = int(labels[failures[0]])
    return TransitiveRamseyVerdict(
        n=n,
        labelings_checked=total,
        every_assignment_has_green_triangle_or_red_path2=weak_count == 0,
        no_red_triangle_ever=red_tri_count == 0,
        path_or_green_failures=weak_count,
        red_triangle_labelings=red_tri_count,
        first_failure=first_failure,
    )


def bounded_set_partitions(n: int, max_part_size: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Set partitions of 1..n with every block of size <= max_part_size.

    Generated as restricted growth strings in lexicographic order.
    """
    rgs = [0] * n
    sizes = [0] * (n + 1)

    def rec(pos, blocks):
        if pos == n:
            parts = [[] for _ in range(blocks)]
            for v, b in enumerate(rgs, start=1):
                parts[b].append(v)
            yield tuple(tuple(p) for p in parts)
            return
        for b in range(blocks + 1):
            if sizes[b] < max_part_size:
                rgs[pos] = b
                sizes[b] += 1
                yield from rec(pos + 1, max(blocks, b + 1))
                sizes[b] -= 1

    yield from rec(0, 0)


def partition_labeling(partition) -> VertexLabeling:
    label = {}
    for block_id, block in enumerate(partition):
        for v in block:
            label[v] = block_id
    return VertexLabeling(label)


def multipartite_red_triangle_verdict(n: int, max_part_size: int) -> MultipartiteVerdict:
    if n < 3 or max_part_size < 1:
        raise ValueError("need n >= 3 and max_part_size >= 1")
    checked = 0
    bad = 0
    witness = None
    for partition in bounded_set_partitions(n, max_part_size):
        checked += 1
        graph = color_by_labels(partition_labeling(partition))
        if not any(t.color is EdgeColor.RED for t in find_monochromatic_triangles(graph)):
            bad += 1
            if witness is None:
                witness = partition
    return MultipartiteVerdict(n, max_part_size, checked, bad == 0, bad, witness)


def verify_multipartite_red_triangle(n: int, max_part_size: int) -> bool:
    """True iff every partition of n vertices into blocks of size at most
    ``max_part_size`` forces a Red triangle in its equality coloring."""
    return multipartite_red_triangle_verdict(n, max_part_size).holds


def format_partition(partition) -> str:
    return ",".join("{" + ",".join(map(str, block)) + "}" for block in partition)
