import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ramsey_contours.coloring import ColoredCompleteGraph, EdgeColor, VertexLabeling, color_by_labels
from ramsey_contours.ramsey import (
    MonochromaticClique,
    bounded_set_partitions,
    find_monochromatic_cliques,
    find_monochromatic_triangles,
    format_partition,
    has_monochromatic_triangle,
    multipartite_red_triangle_verdict,
    verify_multipartite_red_triangle,
    verify_r33,
    verify_transitive_ramsey,
)

RED, GREEN = EdgeColor.RED, EdgeColor.GREEN


def uniform(n, color):
    return ColoredCompleteGraph(n, {e: color for e in itertools.combinations(range(1, n + 1), 2)})


def pentagon():
    cycle = {(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)}
    return ColoredCompleteGraph(
        5, {e: RED if e in cycle else GREEN for e in itertools.combinations(range(1, 6), 2)}
    )


def graphs(max_n=8):
    return st.integers(3, max_n).flatmap(
        lambda n: st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2).map(
            lambda bits: ColoredCompleteGraph(
                n,
                {e: RED if b else GREEN for e, b in zip(itertools.combinations(range(1, n + 1), 2), bits)},
            )
        )
    )


# -- search ---------------------------------------------------------------------


def test_triangle_examples():
    assert find_monochromatic_triangles(uniform(3, RED)) == [MonochromaticClique((1, 2, 3), RED)]
    assert find_monochromatic_triangles(pentagon()) == []
    tris = find_monochromatic_triangles(uniform(6, GREEN))
    assert len(tris) == 20 and all(t.color is GREEN for t in tris)


def test_clique_examples():
    g = pentagon()
    assert len(find_monochromatic_cliques(g, 2)) == 10
    assert find_monochromatic_cliques(g, 3) == find_monochromatic_triangles(g)
    assert len(find_monochromatic_cliques(uniform(6, GREEN), 4)) == 15
    with pytest.raises(ValueError):
        find_monochromatic_cliques(g, 6)
    with pytest.raises(ValueError):
        find_monochromatic_cliques(g, 1)


@given(graphs())
def test_triangle_list_is_exact_and_sorted(g):
    tris = find_monochromatic_triangles(g)
    assert [t.vertices for t in tris] == sorted(t.vertices for t in tris)
    brute = [
        t for t in itertools.combinations(range(1, g.n + 1), 3)
        if len({g.color(a, b) for a, b in itertools.combinations(t, 2)}) == 1
    ]
    assert [t.vertices for t in tris] == brute
    assert has_monochromatic_triangle(g) == bool(tris)
    assert find_monochromatic_cliques(g, 3) == tris


@given(graphs())
def test_color_swap_symmetry(g):
    swapped = find_monochromatic_triangles(g.swapped())
    assert swapped == [MonochromaticClique(t.vertices, t.color.swapped()) for t in find_monochromatic_triangles(g)]


@given(graphs(7), st.lists(st.booleans(), min_size=7, max_size=7))
def test_adding_a_vertex_keeps_triangles(g, new_edges):
    n = g.n
    colors = dict(g.edge_color)
    for i, b in zip(range(1, n + 1), new_edges):
        colors[(i, n + 1)] = RED if b else GREEN
    bigger = ColoredCompleteGraph(n + 1, colors)
    assert set(find_monochromatic_triangles(g)) <= set(find_monochromatic_triangles(bigger))


@given(graphs(8).filter(lambda g: g.n >= 6))
def test_six_or_more_vertices_always_have_a_triangle(g):
    assert find_monochromatic_triangles(g)


# -- R(3,3) sweep, checked against graph-object enumeration ------------------


def brute_r33(n):
    m = n * (n - 1) // 2
    free = [bits for bits in range(1 << m) if not find_monochromatic_triangles(ColoredCompleteGraph.from_bits(n, bits))]
    return len(free), (free[0] if free else None)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_r33_matches_brute_force(n):
    v = verify_r33(n)
    count, first = brute_r33(n)
    assert v.counterexample_count == count
    assert v.sample_counterexample == first
    assert v.all_colorings_contain_triangle == (count == 0)


def test_r33_values():
    v5 = verify_r33(5)
    assert v5.colorings_checked == 1024 and v5.counterexample_count == 12
    # each triangle-free K5 coloring has a Red 5-cycle
    g = v5.witness_graph()
    reds = [e for e, c in g.edges() if c is RED]
    assert len(reds) == 5
    assert all(sum(v in e for e in reds) == 2 for v in range(1, 6))
    assert not find_monochromatic_triangles(g)

    v6 = verify_r33(6)
    assert v6.colorings_checked == 32768
    assert v6.all_colorings_contain_triangle and v6.counterexample_count == 0
    assert v6.sample_counterexample is None and v6.witness_bits is None

    v3 = verify_r33(3)
    assert not v3.all_colorings_contain_triangle


def test_r33_n6_brute_force_agrees():
    count, _ = brute_r33(6)
    assert count == 0


def test_r33_bounds():
    for n in (1, 8):
        with pytest.raises(ValueError):
            verify_r33(n)


def test_witness_bits_format():
    v = verify_r33(3)
    assert v.witness_bits == "100"
    assert ColoredCompleteGraph.from_bits(3, int(v.witness_bits[::-1], 2)).to_bits() == v.sample_counterexample


# -- transitive / intransitive ------------------------------------------------


def brute_transitive(n):
    """Direct check through label colorings and explicit path search."""
    red_tri = weak = 0
    for labels in itertools.product((0, 1), repeat=n):
        g = color_by_labels(VertexLabeling.from_sequence(labels))
        tris = find_monochromatic_triangles(g)
        if any(t.color is RED for t in tris):
            red_tri += 1
        green_tri = any(t.color is GREEN for t in tris)
        red_path = any(
            g.color(a, b) is RED and g.color(b, c) is RED
            for a, b, c in itertools.permutations(range(1, n + 1), 3)
        )
        if not (green_tri or red_path):
            weak += 1
    return red_tri, weak


@pytest.mark.parametrize("n", range(2, 9))
def test_transitive_matches_brute_force(n):
    v = verify_transitive_ramsey(n)
    red_tri, weak = brute_transitive(n)
    assert v.labelings_checked == 2**n
    assert v.red_triangle_labelings == red_tri
    assert v.path_or_green_failures == weak


def test_transitive_examples():
    v3 = verify_transitive_ramsey(3)
    assert v3.no_red_triangle_ever and v3.every_assignment_has_green_triangle_or_red_path2
    v2 = verify_transitive_ramsey(2)
    assert v2.no_red_triangle_ever and not v2.every_assignment_has_green_triangle_or_red_path2
    assert verify_transitive_ramsey(6).no_red_triangle_ever


def test_transitive_bounds():
    for n in (1, 21):
        with pytest.raises(ValueError):
            verify_transitive_ramsey(n)


# -- bounded partitions --------------------------------------------------------


def brute_partitions(n, m):
    """Every map vertex -> block id, canonicalized to a set of frozensets."""
    seen = set()
    for assign in itertools.product(range(n), repeat=n):
        blocks = {}
        for v, b in enumerate(assign, start=1):
            blocks.setdefault(b, set()).add(v)
        if max(len(b) for b in blocks.values()) <= m:
            seen.add(frozenset(frozenset(b) for b in blocks.values()))
    return seen


@pytest.mark.parametrize("n,m", [(3, 1), (4, 2), (5, 2), (5, 3), (6, 2)])
def test_partition_enumeration_is_complete(n, m):
    ours = [frozenset(frozenset(b) for b in p) for p in bounded_set_partitions(n, m)]
    assert len(ours) == len(set(ours))
    assert set(ours) == brute_partitions(n, m)


@pytest.mark.parametrize("n,m", [(3, 1), (4, 2), (5, 2), (6, 2), (6, 3)])
def test_multipartite_matches_brute_force(n, m):
    # a Red triangle exists iff three vertices sit in pairwise different blocks
    expected = all(len(p) >= 3 for p in brute_partitions(n, m))
    assert verify_multipartite_red_triangle(n, m) == expected


def test_multipartite_examples():
    assert verify_multipartite_red_triangle(6, 2)
    assert verify_multipartite_red_triangle(3, 1)
    v = multipartite_red_triangle_verdict(4, 2)
    assert not v.holds
    assert v.witness == ((1, 2), (3, 4))
    assert format_partition(v.witness) == "{1,2},{3,4}"
    assert multipartite_red_triangle_verdict(6, 2).partitions_checked == 76
